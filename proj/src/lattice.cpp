#include "pbz/lattice.hpp"

#include <algorithm>  // for sort, find
#include <sstream>    // for ostringstream

namespace pbz {

  bool ValidationReport::has(std::string const& rule) const {
    return std::any_of(violations.begin(),
                       violations.end(),
                       [&rule](Violation const& v) { return v.rule == rule; });
  }

  std::string
  ValidationReport::to_string(std::vector<std::string> const& labels) const {
    std::ostringstream out;
    for (auto const& v : violations) {
      out << v.rule << ":";
      for (auto w : v.witness) {
        out << " " << (w < labels.size() ? labels[w] : std::to_string(w));
      }
      out << "\n";
    }
    return out.str();
  }

  std::vector<std::string> index_labels(std::size_t n) {
    std::vector<std::string> result;
    result.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      result.push_back("e" + std::to_string(i));
    }
    return result;
  }

  namespace {
    // Greatest lower bound of a, b in a poset given by `leq`, or n if none.
    std::size_t
    glb(std::size_t n, std::vector<std::uint8_t> const& leq, std::size_t a,
        std::size_t b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!leq[c * n + a] || !leq[c * n + b]) {
          continue;
        }
        bool greatest = true;
        for (std::size_t d = 0; d < n && greatest; ++d) {
          greatest = !(leq[d * n + a] && leq[d * n + b]) || leq[d * n + c];
        }
        if (greatest) {
          return c;
        }
      }
      return n;
    }

    std::size_t
    lub(std::size_t n, std::vector<std::uint8_t> const& leq, std::size_t a,
        std::size_t b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!leq[a * n + c] || !leq[b * n + c]) {
          continue;
        }
        bool least = true;
        for (std::size_t d = 0; d < n && least; ++d) {
          least = !(leq[a * n + d] && leq[b * n + d]) || leq[c * n + d];
        }
        if (least) {
          return c;
        }
      }
      return n;
    }

    template <typename F>
    void first_pair(std::size_t n, ValidationReport& report, char const* rule,
                    F&& bad) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (bad(a, b)) {
            report.violations.push_back(
                {rule, {static_cast<Element>(a), static_cast<Element>(b)}});
            return;
          }
        }
      }
    }
  }  // namespace

  void check_lattice_order(std::size_t                      n,
                           std::vector<std::uint8_t> const& leq,
                           ValidationReport&                report) {
    if (leq.size() != n * n) {
      throw MalformedInput("order table has " + std::to_string(leq.size())
                           + " entries, expected " + std::to_string(n * n));
    }
    if (n == 0) {
      report.violations.push_back({"nonempty", {}});
      return;
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq[a * n + a]) {
        report.violations.push_back({"reflexivity", {static_cast<Element>(a)}});
        break;
      }
    }
    first_pair(n, report, "antisymmetry", [&](std::size_t a, std::size_t b) {
      return a != b && leq[a * n + b] && leq[b * n + a];
    });
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a) {
      for (std::size_t b = 0; b < n && transitive; ++b) {
        for (std::size_t c = 0; c < n && transitive; ++c) {
          if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c]) {
            report.violations.push_back({"transitivity",
                                         {static_cast<Element>(a),
                                          static_cast<Element>(b),
                                          static_cast<Element>(c)}});
            transitive = false;
          }
        }
      }
    }
    if (!report.ok()) {
      // meets and joins are meaningless on a non-order
      return;
    }
    first_pair(n, report, "meet-existence", [&](std::size_t a, std::size_t b) {
      return glb(n, leq, a, b) == n;
    });
    first_pair(n, report, "join-existence", [&](std::size_t a, std::size_t b) {
      return lub(n, leq, a, b) == n;
    });
    // a finite lattice is bounded; report missing bounds only for posets
    bool has_zero = false, has_one = false;
    for (std::size_t z = 0; z < n; ++z) {
      bool bottom = true, top = true;
      for (std::size_t a = 0; a < n; ++a) {
        bottom = bottom && leq[z * n + a];
        top    = top && leq[a * n + z];
      }
      has_zero = has_zero || bottom;
      has_one  = has_one || top;
    }
    if (!has_zero || !has_one) {
      report.violations.push_back({"bounds", {}});
    }
  }

  BoundedLattice::BoundedLattice(std::vector<std::string>  labels,
                                 std::vector<std::uint8_t> leq)
      : _n(labels.size()), _labels(std::move(labels)), _leq(std::move(leq)) {
    ValidationReport report;
    check_lattice_order(_n, _leq, report);
    if (!report.ok()) {
      throw InvalidAlgebra(report,
                           "not a bounded lattice order:\n"
                               + report.to_string(_labels));
    }
    for (auto& x : _leq) {
      x = x ? 1 : 0;
    }
    _meet.resize(_n * _n);
    _join.resize(_n * _n);
    for (std::size_t a = 0; a < _n; ++a) {
      for (std::size_t b = a; b < _n; ++b) {
        auto m = static_cast<Element>(glb(_n, _leq, a, b));
        auto j = static_cast<Element>(lub(_n, _leq, a, b));
        _meet[a * _n + b] = _meet[b * _n + a] = m;
        _join[a * _n + b] = _join[b * _n + a] = j;
      }
    }
    _zero = 0;
    _one  = 0;
    for (std::size_t a = 1; a < _n; ++a) {
      _zero = _meet[_zero * _n + a];
      _one  = _join[_one * _n + a];
    }
  }

  BoundedLattice BoundedLattice::from_covers(
      std::vector<std::string>                        labels,
      std::vector<std::pair<Element, Element>> const& covers) {
    std::size_t const         n = labels.size();
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      leq[a * n + a] = 1;
    }
    for (auto [lo, hi] : covers) {
      if (lo >= n || hi >= n) {
        throw MalformedInput("cover refers to element index out of range");
      }
      leq[lo * n + hi] = 1;
    }
    // Warshall
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t a = 0; a < n; ++a) {
        if (leq[a * n + k]) {
          for (std::size_t b = 0; b < n; ++b) {
            leq[a * n + b] |= leq[k * n + b];
          }
        }
      }
    }
    return BoundedLattice(std::move(labels), std::move(leq));
  }

  BoundedLattice BoundedLattice::chain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0) {
        labels.push_back("0");
      } else if (i + 1 == n) {
        labels.push_back("1");
      } else {
        labels.push_back("c" + std::to_string(i));
      }
    }
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        leq[a * n + b] = 1;
      }
    }
    return BoundedLattice(std::move(labels), std::move(leq));
  }

  BoundedLattice BoundedLattice::boolean(std::size_t atoms) {
    std::size_t const        n = std::size_t(1) << atoms;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0) {
        labels.push_back("0");
      } else if (i + 1 == n) {
        labels.push_back("1");
      } else {
        std::string bits;
        for (std::size_t k = atoms; k-- > 0;) {
          bits += ((i >> k) & 1) ? '1' : '0';
        }
        labels.push_back("b" + bits);
      }
    }
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        leq[a * n + b] = (a & ~b) == 0;
      }
    }
    return BoundedLattice(std::move(labels), std::move(leq));
  }

  Element BoundedLattice::element(std::string const& label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      throw MalformedInput("unknown element label '" + label + "'");
    }
    return static_cast<Element>(it - _labels.begin());
  }

  std::vector<std::pair<Element, Element>> BoundedLattice::covers() const {
    std::vector<std::pair<Element, Element>> result;
    for (Element a = 0; a < _n; ++a) {
      for (Element b = 0; b < _n; ++b) {
        if (!lt(a, b)) {
          continue;
        }
        bool cover = true;
        for (Element c = 0; c < _n && cover; ++c) {
          cover = !(lt(a, c) && lt(c, b));
        }
        if (cover) {
          result.emplace_back(a, b);
        }
      }
    }
    return result;
  }

  std::size_t BoundedLattice::down_size(Element a) const {
    std::size_t count = 0;
    for (Element b = 0; b < _n; ++b) {
      count += leq(b, a);
    }
    return count;
  }

  std::size_t BoundedLattice::up_size(Element a) const {
    std::size_t count = 0;
    for (Element b = 0; b < _n; ++b) {
      count += leq(a, b);
    }
    return count;
  }

  bool BoundedLattice::is_chain() const {
    for (Element a = 0; a < _n; ++a) {
      for (Element b = a + 1; b < _n; ++b) {
        if (!comparable(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  bool BoundedLattice::is_distributive() const {
    for (Element a = 0; a < _n; ++a) {
      for (Element b = 0; b < _n; ++b) {
        for (Element c = 0; c < _n; ++c) {
          if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool BoundedLattice::is_modular() const {
    for (Element a = 0; a < _n; ++a) {
      for (Element b = 0; b < _n; ++b) {
        if (!leq(a, b)) {
          continue;
        }
        for (Element c = 0; c < _n; ++c) {
          if (join(a, meet(c, b)) != meet(join(a, c), b)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  BoundedLattice BoundedLattice::induced(Subset const& elements) const {
    std::size_t const         m = elements.size();
    std::vector<std::string>  labels;
    std::vector<std::uint8_t> order(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back(_labels[elements[i]]);
      for (std::size_t j = 0; j < m; ++j) {
        order[i * m + j] = leq(elements[i], elements[j]);
      }
    }
    return BoundedLattice(std::move(labels), std::move(order));
  }

}  // namespace pbz
