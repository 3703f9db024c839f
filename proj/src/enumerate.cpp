#include "pbz/enumerate.hpp"

#include <algorithm>   // for sort, stable_sort
#include <functional>  // for function
#include <iterator>    // for back_inserter
#include <map>        // for map
#include <mutex>      // for mutex
#include <sstream>    // for ostringstream
#include <thread>     // for thread

namespace pbz {

  ////////////////////////////////////////////////////////////////////////
  // Lattices
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // The same lattice with elements in canonical order and generic labels.
    BoundedLattice canonical_copy(BoundedLattice const& L) {
      auto const        order = canonical_order(L);
      std::size_t const n     = L.size();
      std::vector<std::string>  labels(n);
      std::vector<std::uint8_t> leq(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        Element const a = order[i];
        labels[i]       = a == L.zero()  ? "0"
                          : a == L.one() ? "1"
                                         : "e" + std::to_string(i);
        for (std::size_t j = 0; j < n; ++j) {
          leq[i * n + j] = L.leq(a, order[j]);
        }
      }
      return BoundedLattice(std::move(labels), std::move(leq));
    }

    // Calls f with every up-set of K \ {0} that contains the top and whose
    // intersection with each principal filter of a nonzero element has a
    // least element.
    template <typename F>
    void for_each_atom_upset(BoundedLattice const& K, F&& f) {
      std::size_t const    n = K.size();
      std::vector<Element> order;
      for (Element a = 0; a < n; ++a) {
        if (a != K.zero()) {
          order.push_back(a);
        }
      }
      std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
        return K.down_size(a) > K.down_size(b);
      });
      std::vector<bool> in(n, false);

      auto admissible = [&]() {
        for (Element y = 0; y < n; ++y) {
          if (y == K.zero()) {
            continue;
          }
          Element m     = K.one();
          for (Element u = 0; u < n; ++u) {
            if (in[u] && K.leq(y, u)) {
              m = K.meet(m, u);
            }
          }
          if (!in[m]) {
            return false;
          }
        }
        return true;
      };

      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == order.size()) {
          if (admissible()) {
            f(in);
          }
          return;
        }
        Element const x = order[i];
        // x may join only if every element strictly above it is in
        bool can = true;
        for (Element y = 0; y < n && can; ++y) {
          if (K.lt(x, y) && !in[y]) {
            can = false;
          }
        }
        if (can) {
          in[x] = true;
          rec(i + 1);
          in[x] = false;
        }
        if (x != K.one()) {
          rec(i + 1);
        }
      };
      rec(0);
    }

    BoundedLattice add_atom(BoundedLattice const& K,
                            std::vector<bool> const& up) {
      std::size_t const         n = K.size(), m = n + 1;
      std::vector<std::uint8_t> leq(m * m, 0);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          leq[a * m + b] = K.leq(a, b);
        }
        leq[n * m + a] = up[a];
      }
      leq[K.zero() * m + n] = 1;
      leq[n * m + n]        = 1;
      return BoundedLattice(index_labels(m), std::move(leq));
    }
  }  // namespace

  std::vector<BoundedLattice> const& lattices_of_size(std::size_t n) {
    if (n == 0 || n > kLatticeCap) {
      throw PreconditionError("lattices_of_size: n must lie in 1.."
                              + std::to_string(kLatticeCap));
    }
    static std::mutex                               lock;
    static std::vector<std::vector<BoundedLattice>> levels;
    std::lock_guard<std::mutex>                     guard(lock);
    if (levels.empty()) {
      levels.push_back({canonical_copy(BoundedLattice::chain(1))});
      levels.push_back({canonical_copy(BoundedLattice::chain(2))});
    }
    while (levels.size() < n) {
      std::map<CanonicalForm, BoundedLattice> next;
      for (auto const& K : levels.back()) {
        for_each_atom_upset(K, [&](std::vector<bool> const& up) {
          auto L  = add_atom(K, up);
          auto cf = canonical_form(L);
          if (next.find(cf) == next.end()) {
            next.emplace(std::move(cf), canonical_copy(L));
          }
        });
      }
      std::vector<BoundedLattice> level;
      for (auto& [cf, L] : next) {
        level.push_back(std::move(L));
      }
      levels.push_back(std::move(level));
    }
    return levels[n - 1];
  }

  ////////////////////////////////////////////////////////////////////////
  // Specs and statistics
  ////////////////////////////////////////////////////////////////////////

  std::size_t EnumerationSpec::cap() const {
    if (chains_only) {
      return cap_chain;
    } else if (antiortholattice_only) {
      return std::min(cap_antiortholattice, kLatticeCap);
    }
    return std::min(cap_general, kLatticeCap);
  }

  std::string EnumerationSpec::to_string() const {
    std::ostringstream out;
    out << "sizes " << min_size << ".." << max_size;
    for (auto c : classes) {
      out << ", " << class_name(c);
    }
    for (auto const& l : laws) {
      out << ", law " << l.to_string();
    }
    if (chains_only) {
      out << ", chains";
    }
    if (distributive_only) {
      out << ", distributive";
    }
    if (antiortholattice_only) {
      out << ", antiortholattices";
    }
    return out.str();
  }

  EnumerationStats& EnumerationStats::operator+=(EnumerationStats const& that) {
    lattices += that.lattices;
    involutions += that.involutions;
    structures += that.structures;
    rejected += that.rejected;
    algebras += that.algebras;
    return *this;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decorating a lattice
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr Element kUnset = static_cast<Element>(-1);

    class Decorator {
     public:
      Decorator(BoundedLattice const& L, EnumerationSpec const& spec)
          : _L(L), _spec(spec), _n(L.size()) {}

      // Distinct algebras keyed by canonical form.
      std::map<CanonicalForm, FiniteAlgebra> run(EnumerationStats& stats) {
        _stats = &stats;
        ++stats.lattices;
        _kleene.assign(_n, kUnset);
        involutions(0);
        return std::move(_found);
      }

     private:
      bool le(Element a, Element b) const {
        return _L.leq(a, b);
      }

      // Order-reversing involutions, elements assigned in index order.
      void involutions(Element x) {
        while (x < _n && _kleene[x] != kUnset) {
          ++x;
        }
        if (x == _n) {
          ++_stats->involutions;
          decorate_brouwer();
          return;
        }
        for (Element y = x; y < _n; ++y) {
          if (_kleene[y] != kUnset || !fits(x, y)) {
            continue;
          }
          _kleene[x] = y;
          _kleene[y] = x;
          involutions(x + 1);
          _kleene[x] = kUnset;
          _kleene[y] = kUnset;
        }
      }

      bool fits(Element x, Element y) const {
        bool const proper = x != _L.zero() && x != _L.one();
        if (_spec.antiortholattice_only && proper
            && _L.meet(x, y) == _L.zero()) {
          return false;
        }
        for (Element u = 0; u < _n; ++u) {
          Element const ku = _kleene[u];
          if (ku == kUnset) {
            continue;
          }
          // u <= v iff v' <= u', for v in {x, y}
          if (le(u, x) != le(y, ku) || le(x, u) != le(ku, y)
              || le(u, y) != le(x, ku) || le(y, u) != le(ku, x)) {
            return false;
          }
        }
        return true;
      }

      void decorate_brouwer() {
        // pseudo-Kleene
        for (Element a = 0; a < _n; ++a) {
          for (Element b = 0; b < _n; ++b) {
            if (!le(_L.meet(a, _kleene[a]), _L.join(b, _kleene[b]))) {
              ++_stats->rejected;
              return;
            }
          }
        }
        _brouwer.assign(_n, kUnset);
        _image.assign(_n, 0);
        if (_spec.antiortholattice_only) {
          for (Element a = 0; a < _n; ++a) {
            _brouwer[a] = a == _L.zero() ? _L.one() : _L.zero();
          }
          emit();
          return;
        }
        _order.clear();
        for (Element a = 0; a < _n; ++a) {
          _order.push_back(a);
        }
        std::stable_sort(_order.begin(), _order.end(),
                         [&](Element a, Element b) {
                           return _L.down_size(a) > _L.down_size(b);
                         });
        brouwer(0);
      }

      // a~ assigned in decreasing order of a.
      void brouwer(std::size_t i) {
        if (i == _n) {
          emit();
          return;
        }
        Element const a = _order[i];
        for (Element b = 0; b < _n; ++b) {
          if (!brouwer_fits(a, b)) {
            continue;
          }
          _brouwer[a] = b;
          ++_image[b];
          brouwer(i + 1);
          --_image[b];
          _brouwer[a] = kUnset;
        }
      }

      bool brouwer_fits(Element a, Element b) const {
        // (i) a ^ a~ = 0, (ii) with (iv): a <= a~'
        if (_L.meet(a, b) != _L.zero() || !le(a, _kleene[b])) {
          return false;
        }
        // (iv): every value of ~ is mapped by ~ to its Kleene complement
        if (_image[a] > 0 && b != _kleene[a]) {
          return false;
        }
        if (_brouwer[b] != kUnset && _brouwer[b] != _kleene[b]) {
          return false;
        }
        if (b == a && b != _kleene[a]) {
          return false;
        }
        // (iii) antitone
        for (Element c = 0; c < _n; ++c) {
          Element const cb = _brouwer[c];
          if (cb == kUnset) {
            continue;
          }
          if ((le(a, c) && !le(cb, b)) || (le(c, a) && !le(b, cb))) {
            return false;
          }
        }
        return true;
      }

      bool accept(FiniteAlgebra const& A) const {
        for (auto c : _spec.classes) {
          bool ok = false;
          switch (c) {
            case AlgebraClass::bounded_involution_lattice:
            case AlgebraClass::pseudo_kleene:
            case AlgebraClass::bz:
              ok = true;
              break;
            case AlgebraClass::ortholattice:
              ok = is_ortholattice(A).holds;
              break;
            case AlgebraClass::orthomodular:
              ok = is_orthomodular(A).holds;
              break;
            case AlgebraClass::paraorthomodular:
              ok = is_paraorthomodular(A).holds;
              break;
            case AlgebraClass::bz_star:
              ok = is_bz_star(A).holds;
              break;
            case AlgebraClass::diamond_orthomodular:
              ok = is_diamond_orthomodular(A).holds;
              break;
            case AlgebraClass::pbz_star:
              ok = is_pbz_star(A).holds;
              break;
            case AlgebraClass::antiortholattice:
              ok = is_antiortholattice(A).holds;
              break;
          }
          if (!ok) {
            return false;
          }
        }
        if (_spec.antiortholattice_only && !is_antiortholattice(A).holds) {
          return false;
        }
        for (auto const& law : _spec.laws) {
          if (!holds(A, law).holds) {
            return false;
          }
        }
        return true;
      }

      void emit() {
        ++_stats->structures;
        FiniteAlgebra A("candidate", _L, _kleene, _brouwer);
        if (!accept(A)) {
          ++_stats->rejected;
          return;
        }
        auto cf = canonical_form(A);
        if (_found.find(cf) == _found.end()) {
          _found.emplace(std::move(cf), std::move(A));
        }
      }

      BoundedLattice const&                  _L;
      EnumerationSpec const&                 _spec;
      std::size_t                            _n;
      EnumerationStats*                      _stats = nullptr;
      std::vector<Element>                   _kleene;
      std::vector<Element>                   _brouwer;
      std::vector<std::size_t>               _image;
      std::vector<Element>                   _order;
      std::map<CanonicalForm, FiniteAlgebra> _found;
    };

    std::vector<BoundedLattice> candidate_lattices(std::size_t            n,
                                                   EnumerationSpec const& spec) {
      if (spec.chains_only) {
        return {canonical_copy(BoundedLattice::chain(n))};
      }
      std::vector<BoundedLattice> out;
      for (auto const& L : lattices_of_size(n)) {
        if (!spec.distributive_only || L.is_distributive()) {
          out.push_back(L);
        }
      }
      return out;
    }
  }  // namespace

  std::vector<FiniteAlgebra> enumerate_algebras(std::size_t            n,
                                                EnumerationSpec const& spec,
                                                EnumerationStats*      stats) {
    if (n > spec.cap()) {
      throw PreconditionError("enumeration size " + std::to_string(n)
                              + " exceeds the cap " + std::to_string(spec.cap()));
    }
    if (n == 0) {
      return {};
    }
    auto const lattices = candidate_lattices(n, spec);
    unsigned const jobs
        = std::max(1u, std::min<unsigned>(spec.jobs, lattices.size()));

    std::vector<std::map<CanonicalForm, FiniteAlgebra>> found(jobs);
    std::vector<EnumerationStats>                       part(jobs);
    auto work = [&](unsigned j) {
      for (std::size_t i = j; i < lattices.size(); i += jobs) {
        auto m = Decorator(lattices[i], spec).run(part[j]);
        found[j].merge(m);
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back(work, j);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    std::map<CanonicalForm, FiniteAlgebra> all;
    EnumerationStats                       total;
    for (unsigned j = 0; j < jobs; ++j) {
      all.merge(found[j]);
      total += part[j];
    }
    std::vector<FiniteAlgebra> result;
    for (auto& [cf, A] : all) {
      A.rename("A" + std::to_string(n) + "-" + std::to_string(result.size()));
      result.push_back(std::move(A));
    }
    total.algebras = result.size();
    if (stats) {
      *stats += total;
    }
    return result;
  }

  std::vector<FiniteAlgebra> enumerate_corpus(EnumerationSpec const& spec,
                                              EnumerationStats*      stats) {
    std::vector<FiniteAlgebra> all;
    for (std::size_t n = spec.min_size; n <= spec.max_size; ++n) {
      auto level = enumerate_algebras(n, spec, stats);
      std::move(level.begin(), level.end(), std::back_inserter(all));
    }
    return all;
  }

  ////////////////////////////////////////////////////////////////////////
  // Search
  ////////////////////////////////////////////////////////////////////////

  SearchResult search_counterexample(QuasiIdentity const&   target,
                                     EnumerationSpec const& spec) {
    SearchResult r;
    r.spec = spec;
    for (std::size_t n = spec.min_size; n <= spec.max_size; ++n) {
      for (auto& A : enumerate_algebras(n, spec, &r.stats)) {
        ++r.examined;
        auto h = holds(A, target);
        if (!h.holds) {
          r.found          = std::move(A);
          r.counterexample = std::move(h.counterexample);
          return r;
        }
      }
      r.searched_up_to = n;
    }
    return r;
  }

  std::string SearchResult::summary() const {
    std::ostringstream out;
    if (found) {
      out << "found " << found->name() << " with " << found->size()
          << " elements";
      if (counterexample) {
        out << " at " << format_assignment(*found, *counterexample);
      }
    } else {
      out << "no counterexample up to size " << spec.max_size
          << " (search exhausted)";
    }
    out << "; examined " << examined << " algebras, " << stats.structures
        << " structures on " << stats.lattices << " lattices";
    return out.str();
  }

  std::string ClaimReport::summary() const {
    std::ostringstream out;
    out << claim << ": " << checked << " algebras checked, "
        << failures.size() << " failures";
    for (auto const& f : failures) {
      out << "\n  " << f.algebra.name() << ": " << f.message;
    }
    for (auto const& n : notes) {
      out << "\n  note: " << n;
    }
    return out.str();
  }

}  // namespace pbz
