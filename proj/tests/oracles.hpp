// Brute-force reference computations, written without the library's
// algorithms. Only the FiniteAlgebra accessors are used.

#ifndef PBZ_TESTS_ORACLES_HPP_
#define PBZ_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "pbz/algebra.hpp"

namespace oracle {

  using pbz::Element;
  using pbz::FiniteAlgebra;

  // Restricted growth strings: every set partition of {0..n-1} once.
  inline void
  for_each_partition(std::size_t                                        n,
                     std::function<void(std::vector<std::size_t> const&)> f) {
    std::vector<std::size_t> rgs(n, 0);
    std::function<void(std::size_t, std::size_t)> rec
        = [&](std::size_t i, std::size_t max) {
            if (i == n) {
              f(rgs);
              return;
            }
            for (std::size_t b = 0; b <= max + 1; ++b) {
              rgs[i] = b;
              rec(i + 1, std::max(max, b));
            }
          };
    if (n == 0) {
      f(rgs);
      return;
    }
    rgs[0] = 0;
    rec(1, 0);
  }

  inline bool compatible(FiniteAlgebra const&            A,
                         std::vector<std::size_t> const& blk) {
    std::size_t const n = A.size();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (blk[a] != blk[b]) {
          continue;
        }
        if (blk[A.kleene(a)] != blk[A.kleene(b)]
            || blk[A.brouwer(a)] != blk[A.brouwer(b)]) {
          return false;
        }
        for (Element c = 0; c < n; ++c) {
          for (Element d = 0; d < n; ++d) {
            if (blk[c] != blk[d]) {
              continue;
            }
            if (blk[A.meet(a, c)] != blk[A.meet(b, d)]
                || blk[A.join(a, c)] != blk[A.join(b, d)]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  // Every congruence as a sorted set of related pairs (a, b), a < b.
  using PairSet = std::vector<std::pair<Element, Element>>;

  inline PairSet pairs_of(std::vector<std::size_t> const& blk) {
    PairSet out;
    for (Element a = 0; a < blk.size(); ++a) {
      for (Element b = a + 1; b < blk.size(); ++b) {
        if (blk[a] == blk[b]) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  inline std::set<PairSet> congruences(FiniteAlgebra const& A) {
    std::set<PairSet> out;
    for_each_partition(A.size(), [&](auto const& blk) {
      if (compatible(A, blk)) {
        out.insert(pairs_of(blk));
      }
    });
    return out;
  }

  // Least congruence containing (a, b): intersection of all that do.
  inline PairSet principal(FiniteAlgebra const& A, Element a, Element b) {
    std::set<std::pair<Element, Element>> meet;
    bool                                  first = true;
    for (auto const& c : congruences(A)) {
      std::set<std::pair<Element, Element>> s(c.begin(), c.end());
      if (a != b && !s.count({std::min(a, b), std::max(a, b)})) {
        continue;
      }
      if (first) {
        meet  = s;
        first = false;
      } else {
        std::set<std::pair<Element, Element>> m;
        std::set_intersection(meet.begin(), meet.end(), s.begin(), s.end(),
                              std::inserter(m, m.begin()));
        meet = m;
      }
    }
    return PairSet(meet.begin(), meet.end());
  }

  // Closure of a set under all operations, by iteration to a fixpoint.
  inline std::vector<Element> closure(FiniteAlgebra const&  A,
                                      std::vector<Element> seed) {
    std::set<Element> s(seed.begin(), seed.end());
    s.insert(A.zero());
    s.insert(A.one());
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Element> cur(s.begin(), s.end());
      for (auto x : cur) {
        for (auto y : cur) {
          for (auto z : {A.meet(x, y), A.join(x, y), A.kleene(x),
                         A.brouwer(x)}) {
            changed |= s.insert(z).second;
          }
        }
      }
    }
    return {s.begin(), s.end()};
  }

  // Isomorphism by trying every permutation.
  inline bool isomorphic(FiniteAlgebra const& A, FiniteAlgebra const& B) {
    if (A.size() != B.size()) {
      return false;
    }
    std::vector<Element> p(A.size());
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (Element a = 0; a < A.size() && ok; ++a) {
        ok = p[A.kleene(a)] == B.kleene(p[a])
             && p[A.brouwer(a)] == B.brouwer(p[a]);
        for (Element b = 0; b < A.size() && ok; ++b) {
          ok = A.leq(a, b) == B.leq(p[a], p[b]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  // Bounded lattice orders on n points up to isomorphism: all partial
  // orders on labelled points with 0 least and n-1 greatest, filtered for
  // lattices, deduplicated by the lexicographically least relabelled
  // order matrix. Row-major n*n tables.
  inline std::set<std::vector<std::uint8_t>> lattice_orders(std::size_t n) {
    if (n <= 2) {
      std::vector<std::uint8_t> le(n * n, 1);
      if (n == 2) {
        le[1 * 2 + 0] = 0;
      }
      return {le};
    }
    std::size_t const m = n - 2;  // inner points 1..n-2
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = 1; j <= m; ++j) {
        if (i != j) {
          cells.emplace_back(i, j);
        }
      }
    }
    std::set<std::vector<std::uint8_t>> seen;
    std::size_t const                   total = std::size_t(1)
                              << cells.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
      std::vector<std::uint8_t> le(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        le[i * n + i]       = 1;
        le[0 * n + i]       = 1;
        le[i * n + (n - 1)] = 1;
      }
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (mask >> k & 1) {
          le[cells[k].first * n + cells[k].second] = 1;
        }
      }
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          if (a != b && le[a * n + b] && le[b * n + a]) {
            ok = false;
          }
          for (std::size_t c = 0; c < n && ok; ++c) {
            if (le[a * n + b] && le[b * n + c] && !le[a * n + c]) {
              ok = false;
            }
          }
        }
      }
      // meets: greatest common lower bound exists
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          bool found = false;
          for (std::size_t g = 0; g < n && !found; ++g) {
            if (!le[g * n + a] || !le[g * n + b]) {
              continue;
            }
            bool greatest = true;
            for (std::size_t h = 0; h < n; ++h) {
              if (le[h * n + a] && le[h * n + b] && !le[h * n + g]) {
                greatest = false;
              }
            }
            found = greatest;
          }
          ok = found;
        }
      }
      if (!ok) {
        continue;
      }
      std::vector<std::size_t> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::vector<std::uint8_t> best;
      do {
        std::vector<std::uint8_t> r(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            r[p[a] * n + p[b]] = le[a * n + b];
          }
        }
        if (best.empty() || r < best) {
          best = r;
        }
      } while (std::next_permutation(p.begin() + 1, p.end() - 1));
      seen.insert(best);
    }
    return seen;
  }

  inline std::size_t count_lattices(std::size_t n) {
    return lattice_orders(n).size();
  }

  // Number of BZ-lattices on n points up to isomorphism, by trying every
  // involution and every map for ~ on every lattice order.
  inline std::size_t count_bz_lattices(std::size_t n) {
    std::set<std::vector<std::uint8_t>> seen;
    for (auto const& le : lattice_orders(n)) {
      auto leq  = [&](std::size_t a, std::size_t b) { return le[a * n + b]; };
      auto meet = [&](std::size_t a, std::size_t b) {
        for (std::size_t g = 0; g < n; ++g) {
          bool greatest = leq(g, a) && leq(g, b);
          for (std::size_t h = 0; h < n && greatest; ++h) {
            if (leq(h, a) && leq(h, b) && !leq(h, g)) {
              greatest = false;
            }
          }
          if (greatest) {
            return g;
          }
        }
        return n;
      };
      auto join = [&](std::size_t a, std::size_t b) {
        for (std::size_t g = 0; g < n; ++g) {
          bool least = leq(a, g) && leq(b, g);
          for (std::size_t h = 0; h < n && least; ++h) {
            if (leq(a, h) && leq(b, h) && !leq(g, h)) {
              least = false;
            }
          }
          if (least) {
            return g;
          }
        }
        return n;
      };
      std::vector<std::size_t> k(n);
      std::iota(k.begin(), k.end(), 0);
      do {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
          ok = k[k[a]] == a;
          for (std::size_t b = 0; b < n && ok; ++b) {
            ok = leq(a, b) == leq(k[b], k[a])
                 && leq(meet(a, k[a]), join(b, k[b]));
          }
        }
        if (!ok) {
          continue;
        }
        std::vector<std::size_t> t(n, 0);
        while (true) {
          bool bz = true;
          for (std::size_t a = 0; a < n && bz; ++a) {
            bz = meet(a, t[a]) == 0 && leq(a, t[t[a]]) && k[t[a]] == t[t[a]];
            for (std::size_t b = 0; b < n && bz; ++b) {
              bz = !leq(a, b) || leq(t[b], t[a]);
            }
          }
          if (bz) {
            std::vector<std::size_t> p(n);
            std::iota(p.begin(), p.end(), 0);
            std::vector<std::uint8_t> best;
            do {
              std::vector<std::uint8_t> r(n * n + 2 * n);
              for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                  r[p[a] * n + p[b]] = le[a * n + b];
                }
                r[n * n + p[a]]     = static_cast<std::uint8_t>(p[k[a]]);
                r[n * n + n + p[a]] = static_cast<std::uint8_t>(p[t[a]]);
              }
              if (best.empty() || r < best) {
                best = r;
              }
            } while (std::next_permutation(p.begin(), p.end()));
            seen.insert(best);
          }
          std::size_t i = 0;
          while (i < n && ++t[i] == n) {
            t[i++] = 0;
          }
          if (i == n) {
            break;
          }
        }
      } while (std::next_permutation(k.begin(), k.end()));
    }
    return seen.size();
  }

}  // namespace oracle

#endif  // PBZ_TESTS_ORACLES_HPP_
