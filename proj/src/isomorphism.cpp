#include "pbz/isomorphism.hpp"

#include <algorithm>  // for sort, unique, lower_bound
#include <cstddef>    // for size_t
#include <limits>     // for numeric_limits

namespace pbz {

  namespace {

    // A finite poset with unary maps; the common shape of lattices and
    // algebras for the purposes of this file.
    struct Structure {
      std::size_t                              n;
      std::vector<std::uint8_t> const*         order;
      std::vector<std::vector<Element> const*> maps;

      bool leq(Element a, Element b) const {
        return (*order)[a * n + b] != 0;
      }
    };

    Structure view(BoundedLattice const& l) {
      return {l.size(), &l.order_table(), {}};
    }

    Structure view(FiniteAlgebra const& a) {
      return {a.size(),
              &a.lattice().order_table(),
              {&a.kleene_map(), &a.brouwer_map()}};
    }

    using Signature = std::vector<std::uint32_t>;

    struct Refinement {
      std::vector<std::uint32_t>          colour;
      std::vector<std::vector<Signature>> certificate;  // per round, sorted
    };

    // Iterated colour refinement using the colours of the images under each
    // map and of the strict down- and up-sets. Isomorphism invariant.
    Refinement refine(Structure const& s) {
      Refinement  r;
      std::size_t classes = 1;
      r.colour.assign(s.n, 0);
      while (true) {
        std::vector<Signature> sigs(s.n);
        for (Element a = 0; a < s.n; ++a) {
          Signature& sig = sigs[a];
          sig.push_back(r.colour[a]);
          for (auto const* m : s.maps) {
            sig.push_back(r.colour[(*m)[a]]);
            sig.push_back((*m)[a] == a);
          }
          std::vector<std::uint32_t> down, up;
          for (Element b = 0; b < s.n; ++b) {
            if (b == a) {
              continue;
            }
            if (s.leq(b, a)) {
              down.push_back(r.colour[b]);
            } else if (s.leq(a, b)) {
              up.push_back(r.colour[b]);
            }
          }
          std::sort(down.begin(), down.end());
          std::sort(up.begin(), up.end());
          sig.push_back(static_cast<std::uint32_t>(down.size()));
          sig.insert(sig.end(), down.begin(), down.end());
          sig.push_back(static_cast<std::uint32_t>(up.size()));
          sig.insert(sig.end(), up.begin(), up.end());
        }
        std::vector<Signature> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        r.certificate.push_back(sorted);
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Element a = 0; a < s.n; ++a) {
          r.colour[a] = static_cast<std::uint32_t>(
              std::lower_bound(sorted.begin(), sorted.end(), sigs[a])
              - sorted.begin());
        }
        if (sorted.size() == classes) {
          break;
        }
        classes = sorted.size();
      }
      return r;
    }

    class IsoSearch {
     public:
      IsoSearch(Structure const& a,
                Structure const& b,
                Refinement const& ra,
                Refinement const& rb)
          : _a(a), _b(b), _ca(ra.colour), _cb(rb.colour) {
        // most constrained colour classes first
        std::vector<std::size_t> class_size(a.n + 1, 0);
        for (auto c : _ca) {
          ++class_size[c];
        }
        for (Element x = 0; x < a.n; ++x) {
          _sequence.push_back(x);
        }
        std::stable_sort(_sequence.begin(),
                         _sequence.end(),
                         [&](Element x, Element y) {
                           return class_size[_ca[x]] < class_size[_ca[y]];
                         });
        _phi.assign(a.n, kUnset);
        _used.assign(a.n, false);
      }

      std::optional<std::vector<Element>> run() {
        if (search(0)) {
          return _phi;
        }
        return std::nullopt;
      }

     private:
      static constexpr Element kUnset = std::numeric_limits<Element>::max();

      bool consistent(Element x, Element y, std::size_t depth) const {
        for (std::size_t m = 0; m < _a.maps.size(); ++m) {
          auto const& ma = *_a.maps[m];
          auto const& mb = *_b.maps[m];
          if ((ma[x] == x) != (mb[y] == y)) {
            return false;
          }
        }
        for (std::size_t i = 0; i < depth; ++i) {
          Element const u = _sequence[i];
          Element const v = _phi[u];
          if (_a.leq(x, u) != _b.leq(y, v) || _a.leq(u, x) != _b.leq(v, y)) {
            return false;
          }
          for (std::size_t m = 0; m < _a.maps.size(); ++m) {
            auto const& ma = *_a.maps[m];
            auto const& mb = *_b.maps[m];
            if ((ma[x] == u) != (mb[y] == v) || (ma[u] == x) != (mb[v] == y)) {
              return false;
            }
          }
        }
        return true;
      }

      bool search(std::size_t depth) {
        if (depth == _a.n) {
          return true;
        }
        Element const x = _sequence[depth];
        for (Element y = 0; y < _b.n; ++y) {
          if (_used[y] || _cb[y] != _ca[x] || !consistent(x, y, depth)) {
            continue;
          }
          _phi[x]  = y;
          _used[y] = true;
          if (search(depth + 1)) {
            return true;
          }
          _used[y] = false;
          _phi[x]  = kUnset;
        }
        return false;
      }

      Structure const&                  _a;
      Structure const&                  _b;
      std::vector<std::uint32_t> const& _ca;
      std::vector<std::uint32_t> const& _cb;
      std::vector<Element>              _sequence;
      std::vector<Element>              _phi;
      std::vector<bool>                 _used;
    };

    std::optional<std::vector<Element>> isomorphism(Structure const& a,
                                                    Structure const& b) {
      if (a.n != b.n || a.maps.size() != b.maps.size()) {
        return std::nullopt;
      }
      Refinement ra = refine(a);
      Refinement rb = refine(b);
      if (ra.certificate != rb.certificate) {
        return std::nullopt;
      }
      return IsoSearch(a, b, ra, rb).run();
    }

    // Minimises the encoding row by row; row k records the relationship of
    // the element at position k with those at positions 0..k.
    class Canonizer {
     public:
      explicit Canonizer(Structure const& s) : _s(s) {
        Refinement r = refine(s);
        _colour      = r.colour;
        // positions are filled colour class by colour class
        std::vector<Element> by_colour(s.n);
        for (Element a = 0; a < s.n; ++a) {
          by_colour[a] = a;
        }
        std::stable_sort(by_colour.begin(),
                         by_colour.end(),
                         [&](Element x, Element y) {
                           return _colour[x] < _colour[y];
                         });
        for (auto a : by_colour) {
          _slot_colour.push_back(_colour[a]);
        }
        _current.assign(s.n, 0);
        _used.assign(s.n, false);
        _rows.assign(s.n, {});
      }

      void run() {
        search(0);
      }

      CanonicalForm form() const {
        CanonicalForm result;
        result.push_back(static_cast<std::uint8_t>(_s.n & 0xFF));
        result.push_back(static_cast<std::uint8_t>(_s.n >> 8));
        result.push_back(static_cast<std::uint8_t>(_s.maps.size()));
        for (auto const& row : _best_rows) {
          result.insert(result.end(), row.begin(), row.end());
        }
        return result;
      }

      std::vector<Element> const& order() const {
        return _best;
      }

     private:
      static constexpr std::size_t kNone
          = std::numeric_limits<std::size_t>::max();

      std::uint8_t pair_code(Element x, Element y) const {
        std::uint8_t code = 0;
        code |= _s.leq(x, y) ? 1 : 0;
        code |= _s.leq(y, x) ? 2 : 0;
        std::uint8_t bit = 4;
        for (auto const* m : _s.maps) {
          code |= (*m)[x] == y ? bit : 0;
          bit <<= 1;
          code |= (*m)[y] == x ? bit : 0;
          bit <<= 1;
        }
        return code;
      }

      void search(std::size_t depth) {
        if (depth == _s.n) {
          if (_best_rows.empty() || _less_at != kNone) {
            _best_rows = _rows;
            _best      = _current;
            _less_at   = kNone;
          }
          return;
        }
        for (Element x = 0; x < _s.n; ++x) {
          if (_used[x] || _colour[x] != _slot_colour[depth]) {
            continue;
          }
          if (_less_at != kNone && _less_at >= depth) {
            _less_at = kNone;
          }
          auto& row = _rows[depth];
          row.clear();
          _current[depth] = x;
          for (std::size_t j = 0; j <= depth; ++j) {
            row.push_back(pair_code(x, _current[j]));
          }
          if (!_best_rows.empty() && _less_at == kNone) {
            auto const& best_row = _best_rows[depth];
            if (row > best_row) {
              continue;
            }
            if (row < best_row) {
              _less_at = depth;
            }
          }
          _used[x] = true;
          search(depth + 1);
          _used[x] = false;
        }
      }

      Structure const&                       _s;
      std::vector<std::uint32_t>             _colour;
      std::vector<std::uint32_t>             _slot_colour;
      std::vector<Element>                   _current;
      std::vector<bool>                      _used;
      std::vector<std::vector<std::uint8_t>> _rows;
      std::vector<std::vector<std::uint8_t>> _best_rows;
      std::vector<Element>                   _best;
      std::size_t                            _less_at = kNone;
    };

  }  // namespace

  std::optional<std::vector<Element>> find_isomorphism(FiniteAlgebra const& a,
                                                       FiniteAlgebra const& b) {
    return isomorphism(view(a), view(b));
  }

  std::optional<std::vector<Element>>
  find_isomorphism(BoundedLattice const& a, BoundedLattice const& b) {
    return isomorphism(view(a), view(b));
  }

  bool is_isomorphism(FiniteAlgebra const&        a,
                      FiniteAlgebra const&        b,
                      std::vector<Element> const& phi) {
    std::size_t const n = a.size();
    if (b.size() != n || phi.size() != n) {
      return false;
    }
    std::vector<bool> hit(n, false);
    for (auto y : phi) {
      if (y >= n || hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    for (Element x = 0; x < n; ++x) {
      if (phi[a.kleene(x)] != b.kleene(phi[x])
          || phi[a.brouwer(x)] != b.brouwer(phi[x])) {
        return false;
      }
      for (Element y = 0; y < n; ++y) {
        if (a.leq(x, y) != b.leq(phi[x], phi[y])) {
          return false;
        }
      }
    }
    return true;
  }

  CanonicalForm canonical_form(FiniteAlgebra const& a) {
    Structure s = view(a);
    Canonizer c(s);
    c.run();
    return c.form();
  }

  CanonicalForm canonical_form(BoundedLattice const& a) {
    Structure s = view(a);
    Canonizer c(s);
    c.run();
    return c.form();
  }

  std::vector<Element> canonical_order(FiniteAlgebra const& a) {
    Structure s = view(a);
    Canonizer c(s);
    c.run();
    return c.order();
  }

  std::vector<Element> canonical_order(BoundedLattice const& a) {
    Structure s = view(a);
    Canonizer c(s);
    c.run();
    return c.order();
  }

}  // namespace pbz
