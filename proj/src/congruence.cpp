#include "pbz/congruence.hpp"

#include <algorithm>  // for sort, unique
#include <map>        // for map
#include <numeric>    // for iota
#include <set>        // for set
#include <sstream>    // for ostringstream
#include <tuple>      // for tuple

#include "pbz/axioms.hpp"
#include "pbz/term.hpp"
#include "pbz/theory.hpp"

namespace pbz {

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<std::size_t> block_of)
      : _block(), _num_blocks(0) {
    std::map<std::size_t, std::size_t> renumber;
    _block.reserve(block_of.size());
    for (auto b : block_of) {
      auto it = renumber.find(b);
      if (it == renumber.end()) {
        it = renumber.emplace(b, renumber.size()).first;
      }
      _block.push_back(it->second);
    }
    _num_blocks = renumber.size();
  }

  Partition Partition::identity(std::size_t n) {
    std::vector<std::size_t> b(n);
    std::iota(b.begin(), b.end(), 0);
    return Partition(std::move(b));
  }

  Partition Partition::total(std::size_t n) {
    return Partition(std::vector<std::size_t>(n, 0));
  }

  Partition Partition::from_classes(std::size_t                n,
                                    std::vector<Subset> const& classes) {
    std::vector<std::size_t> b(n);
    std::iota(b.begin(), b.end(), 0);
    for (auto const& cls : classes) {
      for (auto x : cls) {
        if (x >= n) {
          throw MalformedInput("partition class element out of range");
        }
        b[x] = cls.front();
      }
    }
    return Partition(std::move(b));
  }

  std::vector<Subset> Partition::classes() const {
    std::vector<Subset> result(_num_blocks);
    for (std::size_t x = 0; x < _block.size(); ++x) {
      result[_block[x]].push_back(static_cast<Element>(x));
    }
    return result;
  }

  std::vector<std::pair<Element, Element>> Partition::pairs() const {
    std::vector<std::pair<Element, Element>> result;
    for (std::size_t a = 0; a < _block.size(); ++a) {
      for (std::size_t b = a + 1; b < _block.size(); ++b) {
        if (_block[a] == _block[b]) {
          result.emplace_back(a, b);
        }
      }
    }
    return result;
  }

  bool Partition::refines(Partition const& that) const {
    // every class of this lies inside a class of that
    std::vector<std::size_t> image(_num_blocks, SIZE_MAX);
    for (std::size_t x = 0; x < _block.size(); ++x) {
      auto& i = image[_block[x]];
      if (i == SIZE_MAX) {
        i = that._block[x];
      } else if (i != that._block[x]) {
        return false;
      }
    }
    return true;
  }

  Partition Partition::meet(Partition const& that) const {
    std::vector<std::size_t> b(_block.size());
    for (std::size_t x = 0; x < _block.size(); ++x) {
      b[x] = _block[x] * that._num_blocks + that._block[x];
    }
    return Partition(std::move(b));
  }

  namespace {
    struct UnionFind {
      std::vector<std::size_t> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        parent[b] = a;
        return true;
      }
      Partition partition() {
        std::vector<std::size_t> b(parent.size());
        for (std::size_t x = 0; x < b.size(); ++x) {
          b[x] = find(x);
        }
        return Partition(std::move(b));
      }
    };
  }  // namespace

  Partition Partition::join(Partition const& that) const {
    UnionFind                uf(_block.size());
    std::vector<std::size_t> first_a(_num_blocks, SIZE_MAX);
    std::vector<std::size_t> first_b(that._num_blocks, SIZE_MAX);
    for (std::size_t x = 0; x < _block.size(); ++x) {
      auto& fa = first_a[_block[x]];
      auto& fb = first_b[that._block[x]];
      if (fa == SIZE_MAX) {
        fa = x;
      } else {
        uf.unite(fa, x);
      }
      if (fb == SIZE_MAX) {
        fb = x;
      } else {
        uf.unite(fb, x);
      }
    }
    return uf.partition();
  }

  std::string
  Partition::to_string(std::vector<std::string> const& labels) const {
    std::ostringstream out;
    bool               first_class = true;
    for (auto const& cls : classes()) {
      if (!first_class) {
        out << " | ";
      }
      first_class = false;
      out << '{';
      for (std::size_t i = 0; i < cls.size(); ++i) {
        out << (i ? ", " : "")
            << (cls[i] < labels.size() ? labels[cls[i]]
                                       : std::to_string(cls[i]));
      }
      out << '}';
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  bool is_congruence(FiniteAlgebra const& A, Partition const& theta) {
    std::size_t const n = A.size();
    if (theta.size() != n) {
      throw MalformedInput("partition size does not match the algebra");
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (!theta.related(a, b)) {
          continue;
        }
        if (!theta.related(A.kleene(a), A.kleene(b))
            || !theta.related(A.brouwer(a), A.brouwer(b))) {
          return false;
        }
        for (Element c = 0; c < n; ++c) {
          if (!theta.related(A.meet(a, c), A.meet(b, c))
              || !theta.related(A.join(a, c), A.join(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Congruence principal_congruence(FiniteAlgebra const& A, Element a,
                                  Element b) {
    std::size_t const n = A.size();
    if (a >= n || b >= n) {
      throw MalformedInput("element out of range");
    }
    UnionFind                                uf(n);
    std::vector<std::pair<Element, Element>> todo{{a, b}};
    while (!todo.empty()) {
      auto [x, y] = todo.back();
      todo.pop_back();
      if (!uf.unite(x, y)) {
        continue;
      }
      todo.emplace_back(A.kleene(x), A.kleene(y));
      todo.emplace_back(A.brouwer(x), A.brouwer(y));
      for (Element c = 0; c < n; ++c) {
        todo.emplace_back(A.meet(x, c), A.meet(y, c));
        todo.emplace_back(A.join(x, c), A.join(y, c));
      }
    }
    return uf.partition();
  }

  CongruenceLattice::CongruenceLattice(std::vector<Congruence> all)
      : _all(std::move(all)) {
    std::sort(_all.begin(), _all.end(), [](auto const& x, auto const& y) {
      if (x.num_blocks() != y.num_blocks()) {
        return x.num_blocks() > y.num_blocks();
      }
      return x < y;
    });
    _all.erase(std::unique(_all.begin(), _all.end()), _all.end());
  }

  bool CongruenceLattice::contains(Congruence const& theta) const {
    return std::find(_all.begin(), _all.end(), theta) != _all.end();
  }

  CongruenceLattice all_congruences(FiniteAlgebra const& A,
                                    std::size_t          max_size) {
    std::size_t const n = A.size();
    if (n > max_size) {
      throw PreconditionError("all_congruences: algebra has "
                              + std::to_string(n)
                              + " elements, bound is "
                              + std::to_string(max_size));
    }
    std::set<Congruence> principal;
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        principal.insert(principal_congruence(A, a, b));
      }
    }
    std::set<Congruence>    seen{Partition::identity(n)};
    std::vector<Congruence> frontier{Partition::identity(n)};
    while (!frontier.empty()) {
      std::vector<Congruence> next;
      for (auto const& theta : frontier) {
        for (auto const& p : principal) {
          auto j = theta.join(p);
          if (seen.insert(j).second) {
            next.push_back(std::move(j));
          }
        }
      }
      frontier = std::move(next);
    }
    return CongruenceLattice(
        std::vector<Congruence>(seen.begin(), seen.end()));
  }

  SubdirectReport subdirect_irreducibility(FiniteAlgebra const&     A,
                                           CongruenceLattice const& con) {
    SubdirectReport           result;
    std::optional<Congruence> monolith;
    for (auto const& theta : con.congruences()) {
      if (theta.is_identity()) {
        continue;
      }
      monolith = monolith ? monolith->meet(theta) : theta;
    }
    if (A.size() > 1 && monolith && !monolith->is_identity()) {
      result.irreducible = true;
      result.monolith    = monolith;
    }
    return result;
  }

  SubdirectReport subdirect_irreducibility(FiniteAlgebra const& A) {
    return subdirect_irreducibility(A, all_congruences(A, SIZE_MAX));
  }

  namespace {
    bool permute_to_total(Partition const& theta, Partition const& phi) {
      // theta o phi is everything: each theta-class meets each phi-class
      std::size_t const                 n = theta.size();
      std::vector<std::vector<uint8_t>> hit(
          theta.num_blocks(), std::vector<uint8_t>(phi.num_blocks(), 0));
      for (std::size_t x = 0; x < n; ++x) {
        hit[theta.block(x)][phi.block(x)] = 1;
      }
      for (auto const& row : hit) {
        for (auto h : row) {
          if (!h) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  bool is_directly_indecomposable(FiniteAlgebra const&     A,
                                  CongruenceLattice const& con) {
    if (A.size() <= 1) {
      return false;
    }
    auto const& all = con.congruences();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i].is_identity() || all[i].is_total()) {
        continue;
      }
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (all[j].is_identity() || all[j].is_total()) {
          continue;
        }
        if (all[i].meet(all[j]).is_identity()
            && permute_to_total(all[i], all[j])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_directly_indecomposable(FiniteAlgebra const& A) {
    return is_directly_indecomposable(A, all_congruences(A, SIZE_MAX));
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernel relations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Key>
    KernelRelation kernel(FiniteAlgebra const& A, Key key) {
      using K = decltype(key(Element{0}));
      std::map<K, std::size_t> ids;
      std::vector<std::size_t> block(A.size());
      for (Element x = 0; x < A.size(); ++x) {
        auto it = ids.emplace(key(x), ids.size()).first;
        block[x] = it->second;
      }
      Partition p(std::move(block));
      bool      cong = is_congruence(A, p);
      return {std::move(p), cong};
    }

    // 0 for {0}, 1 for {1}, 2 strictly negative, 3 strictly positive,
    // 4 + x otherwise.
    std::size_t tilde_key(FiniteAlgebra const& A, Element x) {
      if (x == A.zero()) {
        return 0;
      } else if (x == A.one()) {
        return 1;
      } else if (A.lt(x, A.kleene(x))) {
        return 2;
      } else if (A.lt(A.kleene(x), x)) {
        return 3;
      }
      return 4 + x;
    }
  }  // namespace

  KernelRelation relation_C(FiniteAlgebra const& A, Element p) {
    return kernel(A, [&](Element x) {
      return std::make_tuple(A.meet(x, p),
                             A.meet(A.kleene(x), p),
                             A.meet(A.brouwer(x), p),
                             A.meet(A.box(x), p),
                             A.meet(A.diamond(x), p),
                             A.meet(A.diamond(A.kleene(x)), p));
    });
  }

  KernelRelation tilde_relation(FiniteAlgebra const& A) {
    return kernel(A, [&](Element x) { return tilde_key(A, x); });
  }

  KernelRelation relation_D(FiniteAlgebra const& A, Element p) {
    return kernel(A, [&](Element x) {
      return std::make_pair(tilde_key(A, x),
                            A.meet(A.join(x, A.kleene(x)), p));
    });
  }

  KernelRelation relation_E(FiniteAlgebra const& A, Element p) {
    return kernel(A, [&](Element x) {
      return std::make_pair(tilde_key(A, x),
                            A.join(A.join(x, A.kleene(x)), p));
    });
  }

  CRelationReport check_c_relations(FiniteAlgebra const& A) {
    CRelationReport        r;
    std::size_t const      n = A.size();
    std::vector<Partition> C;
    for (Element p = 0; p < n; ++p) {
      auto k = relation_C(A, p);
      if (!k.is_congruence) {
        r.congruence = false;
        r.failures.push_back("C(" + A.label(p) + ") is not a congruence");
      }
      C.push_back(std::move(k.partition));
    }
    for (Element p = 0; p < n; ++p) {
      for (Element q = 0; q < n; ++q) {
        if (C[p].meet(C[q]) != C[A.join(p, q)]) {
          r.meet_of_join = false;
          r.failures.push_back("C(" + A.label(p) + ") & C(" + A.label(q)
                               + ") differs from C(p v q)");
        }
      }
      if (!C[p].meet(C[A.kleene(p)]).is_identity()) {
        r.complement_meet = false;
        r.failures.push_back("C(" + A.label(p) + ") & C(p') is not Delta");
      }
      if (C[p].is_identity() != A.leq(A.kleene(p), p)) {
        r.delta_iff_positive = false;
        r.failures.push_back("C(" + A.label(p)
                             + ") = Delta disagrees with p' <= p");
      }
    }
    return r;
  }

  PositiveConeReport check_positive_cone(FiniteAlgebra const& A) {
    PositiveConeReport r;
    std::size_t const  n   = A.size();
    auto               pos = [&](Element x) {
      return A.lt(A.kleene(x), x);
    };
    for (Element a = 0; a < n; ++a) {
      if (!pos(a)) {
        continue;
      }
      for (Element b = 0; b < n; ++b) {
        if (pos(b) && !pos(A.meet(a, b))) {
          r.meet_closed = false;
          r.failures.push_back(A.label(a) + " ^ " + A.label(b)
                               + " is not strictly positive");
        }
        if (A.leq(b, A.kleene(b)) && !A.lt(b, a)) {
          r.above_negative = false;
          r.failures.push_back(A.label(b) + " is negative but not below "
                               + A.label(a));
        }
      }
    }
    return r;
  }

  TomtomReport tomtom_check(FiniteAlgebra const& A) {
    TomtomReport r;
    if (!is_antiortholattice(A).holds) {
      r.precondition_failures.push_back("not an antiortholattice");
    }
    for (auto const* law : {"DIST", "SDM"}) {
      if (!holds(A, named_law(law).law).holds) {
        r.precondition_failures.push_back(std::string("fails ") + law);
      }
    }
    if (!is_subdirectly_irreducible(A)) {
      r.precondition_failures.push_back("not subdirectly irreducible");
    }

    r.tilde_congruence = tilde_relation(A).is_congruence;
    if (!r.tilde_congruence) {
      r.failures.push_back("~ is not a congruence");
    }
    r.d_congruences  = true;
    r.e_congruences  = true;
    r.d_or_e_trivial = true;
    for (Element p = 0; p < A.size(); ++p) {
      auto d = relation_D(A, p);
      auto e = relation_E(A, p);
      if (!d.is_congruence) {
        r.d_congruences = false;
        r.failures.push_back("D(" + A.label(p) + ") is not a congruence");
      }
      if (!e.is_congruence) {
        r.e_congruences = false;
        r.failures.push_back("E(" + A.label(p) + ") is not a congruence");
      }
      if (!d.partition.is_identity() && !e.partition.is_identity()) {
        r.d_or_e_trivial = false;
        r.failures.push_back("neither D(" + A.label(p) + ") nor E("
                             + A.label(p) + ") is Delta");
      }
    }
    return r;
  }

}  // namespace pbz
