#include "pbz/algebra.hpp"

#include <set>  // for set

namespace pbz {

  void check_involution(BoundedLattice const&       lattice,
                        std::vector<Element> const& kleene,
                        ValidationReport&           report) {
    std::size_t const n = lattice.size();
    for (Element a = 0; a < n; ++a) {
      if (kleene[kleene[a]] != a) {
        report.violations.push_back({"kleene-involution", {a}});
        break;
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (lattice.leq(a, b) && !lattice.leq(kleene[b], kleene[a])) {
          report.violations.push_back({"kleene-order-reversal", {a, b}});
          return;
        }
      }
    }
  }

  ValidationReport validate(AlgebraData const& raw) {
    std::size_t const n = raw.labels.size();
    if (raw.leq.size() != n) {
      throw MalformedInput("order table has " + std::to_string(raw.leq.size())
                           + " rows for " + std::to_string(n) + " elements");
    }
    std::vector<std::uint8_t> leq(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (raw.leq[a].size() != n) {
        throw MalformedInput("order table row " + std::to_string(a) + " has "
                             + std::to_string(raw.leq[a].size())
                             + " entries, expected " + std::to_string(n));
      }
      for (std::size_t b = 0; b < n; ++b) {
        leq[a * n + b] = raw.leq[a][b];
      }
    }
    if (raw.kleene.size() != n || raw.brouwer.size() != n) {
      throw MalformedInput("unary maps must have one entry per element");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (raw.kleene[a] >= n || raw.brouwer[a] >= n) {
        throw MalformedInput("unary map value out of range at element "
                             + raw.labels[a]);
      }
    }
    if (n > 0 && (raw.zero >= n || raw.one >= n)) {
      throw MalformedInput("bound index out of range");
    }

    ValidationReport report;
    std::set<std::string> seen;
    for (Element a = 0; a < n; ++a) {
      if (!seen.insert(raw.labels[a]).second) {
        report.violations.push_back({"distinct-labels", {a}});
        break;
      }
    }
    check_lattice_order(n, leq, report);
    if (n == 0) {
      return report;
    }
    for (Element a = 0; a < n; ++a) {
      if (!leq[raw.zero * n + a]) {
        report.violations.push_back({"zero-bound", {raw.zero, a}});
        break;
      }
    }
    for (Element a = 0; a < n; ++a) {
      if (!leq[a * n + raw.one]) {
        report.violations.push_back({"one-bound", {a, raw.one}});
        break;
      }
    }
    for (Element a = 0; a < n; ++a) {
      if (raw.kleene[raw.kleene[a]] != a) {
        report.violations.push_back({"kleene-involution", {a}});
        break;
      }
    }
    bool done = false;
    for (Element a = 0; a < n && !done; ++a) {
      for (Element b = 0; b < n && !done; ++b) {
        if (leq[a * n + b] && !leq[raw.kleene[b] * n + raw.kleene[a]]) {
          report.violations.push_back({"kleene-order-reversal", {a, b}});
          done = true;
        }
      }
    }
    return report;
  }

  FiniteAlgebra FiniteAlgebra::from_data(AlgebraData const& raw) {
    ValidationReport report = validate(raw);
    if (!report.ok()) {
      throw InvalidAlgebra(report,
                           "algebra '" + raw.name + "' is invalid:\n"
                               + report.to_string(raw.labels));
    }
    std::size_t const         n = raw.labels.size();
    std::vector<std::uint8_t> leq(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        leq[a * n + b] = raw.leq[a][b];
      }
    }
    return FiniteAlgebra(raw.name,
                         BoundedLattice(raw.labels, std::move(leq)),
                         raw.kleene,
                         raw.brouwer);
  }

  FiniteAlgebra::FiniteAlgebra(std::string          name,
                               BoundedLattice       lattice,
                               std::vector<Element> kleene,
                               std::vector<Element> brouwer)
      : _name(std::move(name)),
        _lattice(std::move(lattice)),
        _kleene(std::move(kleene)),
        _brouwer(std::move(brouwer)) {
    std::size_t const n = _lattice.size();
    if (_kleene.size() != n || _brouwer.size() != n) {
      throw MalformedInput("unary maps must have one entry per element");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (_kleene[a] >= n || _brouwer[a] >= n) {
        throw MalformedInput("unary map value out of range");
      }
    }
    ValidationReport report;
    check_involution(_lattice, _kleene, report);
    if (!report.ok()) {
      throw InvalidAlgebra(report,
                           "algebra '" + _name + "' is invalid:\n"
                               + report.to_string(_lattice.labels()));
    }
  }

  AlgebraData FiniteAlgebra::data() const {
    AlgebraData result;
    std::size_t const n = size();
    result.name         = _name;
    result.labels       = labels();
    result.leq.assign(n, std::vector<bool>(n));
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        result.leq[a][b] = leq(a, b);
      }
    }
    result.kleene  = _kleene;
    result.brouwer = _brouwer;
    result.zero    = zero();
    result.one     = one();
    return result;
  }

}  // namespace pbz
