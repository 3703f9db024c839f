#include "pbz/constructions.hpp"

#include <algorithm>  // for sort, find
#include <cstdint>    // for uint64_t
#include <map>        // for map
#include <set>        // for set

#include "pbz/axioms.hpp"
#include "pbz/isomorphism.hpp"

namespace pbz {

  ////////////////////////////////////////////////////////////////////////
  // Recipes
  ////////////////////////////////////////////////////////////////////////

  ConstructionRecipe ConstructionRecipe::leaf(std::string name) {
    ConstructionRecipe r;
    r.kind = Kind::name;
    r.name = std::move(name);
    return r;
  }

  ConstructionRecipe
  ConstructionRecipe::apply(Kind kind, std::vector<ConstructionRecipe> operands) {
    ConstructionRecipe r;
    r.kind     = kind;
    r.operands = std::move(operands);
    return r;
  }

  std::string ConstructionRecipe::to_string() const {
    char const* op = nullptr;
    switch (kind) {
      case Kind::name:
        return name;
      case Kind::twist1:
        op = "twist1";
        break;
      case Kind::twist2:
        op = "twist2";
        break;
      case Kind::ordinal_sum:
        op = "osum";
        break;
      case Kind::horizontal_sum:
        op = "hsum";
        break;
      case Kind::product:
        op = "prod";
        break;
      case Kind::sub:
        op = "sub";
        break;
      case Kind::quotient:
        op = "quot";
        break;
    }
    std::string out = std::string(op) + "(";
    for (std::size_t i = 0; i < operands.size(); ++i) {
      out += (i ? "," : "") + operands[i].to_string();
    }
    if (!name.empty()) {
      out += (operands.empty() ? "" : ",") + name;
    }
    return out + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Twists
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Universe f[L minus skipped] (dual order) followed by L.
    FiniteAlgebra twist(BoundedLattice const& L, bool keep_zero,
                        std::string name) {
      std::size_t const    m = L.size();
      std::vector<Element> copied;  // L-elements with an f-copy
      for (Element a = 0; a < m; ++a) {
        if (keep_zero || a != L.zero()) {
          copied.push_back(a);
        }
      }
      std::size_t const k = copied.size();
      std::size_t const n = k + m;

      std::vector<std::string> labels;
      for (auto a : copied) {
        labels.push_back("f(" + L.label(a) + ")");
      }
      for (Element a = 0; a < m; ++a) {
        labels.push_back(L.label(a));
      }
      auto in_l = [&](Element a) { return static_cast<Element>(k + a); };

      std::vector<std::uint8_t> leq(n * n, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          leq[i * n + j] = L.leq(copied[j], copied[i]);
        }
        for (Element b = 0; b < m; ++b) {
          leq[i * n + in_l(b)] = 1;
        }
      }
      for (Element a = 0; a < m; ++a) {
        for (Element b = 0; b < m; ++b) {
          leq[in_l(a) * n + in_l(b)] = L.leq(a, b);
        }
      }
      BoundedLattice lattice(std::move(labels), std::move(leq));

      std::vector<Element> kleene(n);
      for (std::size_t i = 0; i < k; ++i) {
        kleene[i]                = in_l(copied[i]);
        kleene[in_l(copied[i])] = static_cast<Element>(i);
      }
      if (!keep_zero) {
        kleene[in_l(L.zero())] = in_l(L.zero());
      }
      Element const        bottom = lattice.zero();
      std::vector<Element> brouwer(n, bottom);
      brouwer[bottom] = lattice.one();
      return FiniteAlgebra(std::move(name), std::move(lattice),
                           std::move(kleene), std::move(brouwer));
    }
  }  // namespace

  FiniteAlgebra twist1(BoundedLattice const& L) {
    if (L.size() < 2) {
      throw PreconditionError("twist1 needs a lattice with at least 2 "
                              "elements");
    }
    return twist(L, false, "twist1");
  }

  FiniteAlgebra twist2(BoundedLattice const& L) {
    return twist(L, true, "twist2");
  }

  ////////////////////////////////////////////////////////////////////////
  // Sums and products
  ////////////////////////////////////////////////////////////////////////

  BoundedLattice ordinal_sum(BoundedLattice const& M,
                             BoundedLattice const& L) {
    std::size_t const        m = M.size(), l = L.size(), n = m + l;
    std::vector<std::string> labels = M.labels();
    std::set<std::string>    used(labels.begin(), labels.end());
    for (auto const& s : L.labels()) {
      labels.push_back(used.count(s) ? s + "_2" : s);
    }
    std::vector<std::uint8_t> leq(n * n, 0);
    for (Element a = 0; a < m; ++a) {
      for (Element b = 0; b < m; ++b) {
        leq[a * n + b] = M.leq(a, b);
      }
      for (Element b = 0; b < l; ++b) {
        leq[a * n + m + b] = 1;
      }
    }
    for (Element a = 0; a < l; ++a) {
      for (Element b = 0; b < l; ++b) {
        leq[(m + a) * n + m + b] = L.leq(a, b);
      }
    }
    return BoundedLattice(std::move(labels), std::move(leq));
  }

  FiniteAlgebra horizontal_sum(std::vector<FiniteAlgebra> const& summands) {
    if (summands.empty()) {
      throw PreconditionError("horizontal_sum needs at least one summand");
    }
    std::size_t non_om = 0;
    for (auto const& S : summands) {
      if (S.size() < 2) {
        throw PreconditionError("horizontal_sum: trivial summand");
      }
      if (!is_orthomodular(S).holds) {
        ++non_om;
      }
    }
    if (non_om > 1) {
      throw PreconditionError("horizontal_sum: more than one summand is "
                              "not orthomodular");
    }

    std::map<std::string, std::size_t> uses{{"0", 1}, {"1", 1}};
    for (auto const& S : summands) {
      for (Element a = 0; a < S.size(); ++a) {
        if (a != S.zero() && a != S.one()) {
          ++uses[S.label(a)];
        }
      }
    }

    // index[i][a]: position of element a of summand i
    std::vector<std::vector<Element>> index;
    std::vector<std::string>          labels{"0"};
    std::vector<std::size_t>          owner{SIZE_MAX};
    for (std::size_t i = 0; i < summands.size(); ++i) {
      auto const&          S = summands[i];
      std::vector<Element> idx(S.size(), 0);
      for (Element a = 0; a < S.size(); ++a) {
        if (a == S.zero() || a == S.one()) {
          continue;
        }
        idx[a]           = static_cast<Element>(labels.size());
        auto const& name = S.label(a);
        labels.push_back(uses[name] > 1 ? name + "_" + std::to_string(i + 1)
                                        : name);
        owner.push_back(i);
      }
      index.push_back(std::move(idx));
    }
    Element const top = static_cast<Element>(labels.size());
    labels.push_back("1");
    owner.push_back(SIZE_MAX);
    for (std::size_t i = 0; i < summands.size(); ++i) {
      index[i][summands[i].zero()] = 0;
      index[i][summands[i].one()]  = top;
    }

    std::size_t const         n = labels.size();
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      leq[x] = 1;              // 0 <= x
      leq[x * n + top] = 1;    // x <= 1
      leq[x * n + x]   = 1;
    }
    std::vector<Element> kleene(n), brouwer(n);
    for (std::size_t i = 0; i < summands.size(); ++i) {
      auto const& S = summands[i];
      for (Element a = 0; a < S.size(); ++a) {
        for (Element b = 0; b < S.size(); ++b) {
          if (S.leq(a, b)) {
            leq[index[i][a] * n + index[i][b]] = 1;
          }
        }
        kleene[index[i][a]]  = index[i][S.kleene(a)];
        brouwer[index[i][a]] = index[i][S.brouwer(a)];
      }
    }
    std::string name;
    for (auto const& S : summands) {
      name += (name.empty() ? "" : "+") + S.name();
    }
    return FiniteAlgebra(name,
                         BoundedLattice(std::move(labels), std::move(leq)),
                         std::move(kleene), std::move(brouwer));
  }

  FiniteAlgebra product(FiniteAlgebra const& A, FiniteAlgebra const& B) {
    std::size_t const        na = A.size(), nb = B.size(), n = na * nb;
    std::vector<std::string> labels;
    for (Element a = 0; a < na; ++a) {
      for (Element b = 0; b < nb; ++b) {
        labels.push_back("(" + A.label(a) + "," + B.label(b) + ")");
      }
    }
    std::vector<std::uint8_t> leq(n * n);
    std::vector<Element>      kleene(n), brouwer(n);
    for (std::size_t x = 0; x < n; ++x) {
      Element const a = x / nb, b = x % nb;
      for (std::size_t y = 0; y < n; ++y) {
        leq[x * n + y] = A.leq(a, y / nb) && B.leq(b, y % nb);
      }
      kleene[x]  = A.kleene(a) * nb + B.kleene(b);
      brouwer[x] = A.brouwer(a) * nb + B.brouwer(b);
    }
    return FiniteAlgebra(A.name() + "x" + B.name(),
                         BoundedLattice(std::move(labels), std::move(leq)),
                         std::move(kleene), std::move(brouwer));
  }

  ////////////////////////////////////////////////////////////////////////
  // Subalgebras and quotients
  ////////////////////////////////////////////////////////////////////////

  Subset subuniverse_generated(FiniteAlgebra const& A, Subset const& seeds) {
    std::size_t const n = A.size();
    std::vector<bool> in(n, false);
    Subset            members;
    auto              add = [&](Element x) {
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    };
    add(A.zero());
    add(A.one());
    for (auto s : seeds) {
      if (s >= n) {
        throw MalformedInput("seed element out of range");
      }
      add(s);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      Element const x = members[i];
      add(A.kleene(x));
      add(A.brouwer(x));
      for (std::size_t j = 0; j <= i; ++j) {
        add(A.meet(x, members[j]));
        add(A.join(x, members[j]));
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  FiniteAlgebra subalgebra(FiniteAlgebra const& A, Subset const& universe) {
    Subset sorted = universe;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (subuniverse_generated(A, sorted) != sorted) {
      throw PreconditionError("subalgebra: subset is not closed under the "
                              "operations");
    }
    std::vector<Element> pos(A.size(), 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      pos[sorted[i]] = static_cast<Element>(i);
    }
    std::vector<Element> kleene, brouwer;
    for (auto x : sorted) {
      kleene.push_back(pos[A.kleene(x)]);
      brouwer.push_back(pos[A.brouwer(x)]);
    }
    return FiniteAlgebra(A.name(), A.lattice().induced(sorted),
                         std::move(kleene), std::move(brouwer));
  }

  FiniteAlgebra subalgebra_generated(FiniteAlgebra const& A,
                                     Subset const&        seeds) {
    return subalgebra(A, subuniverse_generated(A, seeds));
  }

  FiniteAlgebra quotient(FiniteAlgebra const& A, Partition const& theta) {
    if (!is_congruence(A, theta)) {
      throw PreconditionError("quotient: partition is not a congruence");
    }
    auto const               classes = theta.classes();
    std::size_t const        n       = classes.size();
    std::vector<std::string> labels;
    for (auto const& c : classes) {
      labels.push_back(A.label(c.front()));
    }
    // Partition numbers blocks by first occurrence, so block ids are the
    // class positions.
    std::vector<std::uint8_t> leq(n * n);
    std::vector<Element>      kleene(n), brouwer(n);
    for (std::size_t i = 0; i < n; ++i) {
      Element const a = classes[i].front();
      for (std::size_t j = 0; j < n; ++j) {
        leq[i * n + j] = theta.block(A.meet(a, classes[j].front())) == i;
      }
      kleene[i]  = static_cast<Element>(theta.block(A.kleene(a)));
      brouwer[i] = static_cast<Element>(theta.block(A.brouwer(a)));
    }
    return FiniteAlgebra(A.name() + "/theta",
                         BoundedLattice(std::move(labels), std::move(leq)),
                         std::move(kleene), std::move(brouwer));
  }

  ////////////////////////////////////////////////////////////////////////
  // Cones and twist representation
  ////////////////////////////////////////////////////////////////////////

  Cones cones(FiniteAlgebra const& A) {
    Cones c;
    for (Element a = 0; a < A.size(); ++a) {
      Element const b = A.kleene(a);
      if (A.leq(a, b)) {
        c.negative.push_back(a);
      }
      if (A.leq(b, a)) {
        c.positive.push_back(a);
      }
      if (A.lt(a, b)) {
        c.strictly_negative.push_back(a);
      }
      if (A.lt(b, a)) {
        c.strictly_positive.push_back(a);
      }
    }
    return c;
  }

  TwistRepresentation twist_represent(FiniteAlgebra const& A) {
    if (A.size() < 2 || !is_antiortholattice(A).holds) {
      throw PreconditionError("twist_represent needs a nontrivial "
                              "antiortholattice");
    }
    TwistRepresentation result;
    Cones const         c = cones(A);
    std::vector<bool>   covered(A.size(), false);
    for (auto a : c.negative) {
      covered[a] = true;
    }
    for (auto a : c.positive) {
      covered[a] = true;
    }
    for (Element a = 0; a < A.size(); ++a) {
      if (!covered[a]) {
        result.reason  = "element incomparable with its Kleene complement";
        result.witness = a;
        return result;
      }
    }

    bool const has_fixpoint
        = std::any_of(c.negative.begin(), c.negative.end(), [&](Element a) {
            return A.kleene(a) == a;
          });
    BoundedLattice P = A.lattice().induced(c.positive);
    FiniteAlgebra  T = has_fixpoint ? twist1(P) : twist2(P);

    // Position of a in P; twist places f-copies first.
    std::size_t const    copies = T.size() - P.size();
    std::vector<Element> pos(A.size(), 0);
    for (std::size_t i = 0; i < c.positive.size(); ++i) {
      pos[c.positive[i]] = static_cast<Element>(i);
    }
    std::vector<Element> phi(A.size());
    for (Element a = 0; a < A.size(); ++a) {
      if (A.leq(A.kleene(a), a)) {
        phi[a] = static_cast<Element>(copies + pos[a]);
      } else {
        phi[a] = T.kleene(static_cast<Element>(copies + pos[A.kleene(a)]));
      }
    }
    if (!is_isomorphism(A, T, phi)) {
      result.reason = "twist map is not an isomorphism";
      return result;
    }
    result.ok      = true;
    result.variant = has_fixpoint ? 1 : 2;
    result.recipe  = ConstructionRecipe::apply(
        has_fixpoint ? ConstructionRecipe::Kind::twist1
                     : ConstructionRecipe::Kind::twist2,
        {ConstructionRecipe::leaf("P(" + A.name() + ")")});
    result.positive = std::move(P);
    result.twist    = std::move(T);
    result.phi      = std::move(phi);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Blocks and horizontal sums
  ////////////////////////////////////////////////////////////////////////

  Element gamma(FiniteAlgebra const& A, Element a, Element b) {
    Element const as = A.brouwer(a), bs = A.brouwer(b);
    return A.meet(A.meet(A.join(a, b), A.join(a, bs)),
                  A.meet(A.join(as, b), A.join(as, bs)));
  }

  Subset unsharp_chain(FiniteAlgebra const& A) {
    Subset result;
    for (Element a = 0; a < A.size(); ++a) {
      if (a == A.zero() || A.brouwer(a) == A.zero()) {
        result.push_back(a);
      }
    }
    return result;
  }

  namespace {
    using Mask = std::uint64_t;

    Mask bit(Element a) {
      return Mask(1) << a;
    }

    Subset to_subset(Mask m) {
      Subset s;
      for (Element a = 0; m != 0; ++a, m >>= 1) {
        if (m & 1) {
          s.push_back(a);
        }
      }
      return s;
    }

    Mask closure(FiniteAlgebra const& A, Mask m) {
      Mask result = 0;
      for (auto a : subuniverse_generated(A, to_subset(m))) {
        result |= bit(a);
      }
      return result;
    }

    bool is_shaped(FiniteAlgebra const& A, Mask m) {
      Subset const s = to_subset(m);
      bool         chain = true, trivial_sharp = true, boolean = true;
      for (auto x : s) {
        bool const proper = x != A.zero() && x != A.one();
        bool const sharp  = A.meet(x, A.kleene(x)) == A.zero();
        if (!sharp || A.brouwer(x) != A.kleene(x)) {
          boolean = false;
        }
        if (proper && sharp) {
          trivial_sharp = false;
        }
        for (auto y : s) {
          if (!A.lattice().comparable(x, y)) {
            chain = false;
          }
        }
      }
      if (chain && trivial_sharp) {
        return true;
      }
      if (!boolean) {
        return false;
      }
      for (auto x : s) {
        for (auto y : s) {
          for (auto z : s) {
            if (A.meet(x, A.join(y, z))
                != A.join(A.meet(x, y), A.meet(x, z))) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  std::vector<Subset> blocks(FiniteAlgebra const& A) {
    if (A.size() > 64) {
      throw PreconditionError("blocks: more than 64 elements");
    }
    if (!is_pbz_star(A).holds) {
      throw PreconditionError("blocks: algebra is not PBZ*");
    }
    std::set<Mask>    shaped;
    std::vector<Mask> frontier;
    Mask const        start = closure(A, 0);
    if (is_shaped(A, start)) {
      shaped.insert(start);
      frontier.push_back(start);
    }
    while (!frontier.empty()) {
      std::vector<Mask> next;
      for (auto m : frontier) {
        for (Element x = 0; x < A.size(); ++x) {
          if (m & bit(x)) {
            continue;
          }
          Mask const t = closure(A, m | bit(x));
          if (!shaped.count(t) && is_shaped(A, t)) {
            shaped.insert(t);
            next.push_back(t);
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<Subset> result;
    for (auto m : shaped) {
      bool maximal = true;
      for (auto o : shaped) {
        if (o != m && (m & o) == m) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        result.push_back(to_subset(m));
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  HorizontalSumReport horizontal_sum_report(FiniteAlgebra const& A) {
    HorizontalSumReport r;
    std::size_t const   n  = A.size();
    Element const       z  = A.zero();
    Element const       o  = A.one();
    auto proper = [&](Element x) { return x != z && x != o; };
    auto pair   = [&](Element a, Element b) {
      return "a=" + A.label(a) + ", b=" + A.label(b);
    };
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (r.cond_a && gamma(A, a, b) != z && A.join(a, b) != o) {
          r.cond_a = false;
          r.witnesses.push_back("(a) " + pair(a, b));
        }
        if (r.cond_b && proper(a) && proper(b) && A.brouwer(a) == z
            && A.diamond(b) == b && A.join(a, b) != o) {
          r.cond_b = false;
          r.witnesses.push_back("(b) " + pair(a, b));
        }
        if (r.cond_c && A.brouwer(a) == z && A.brouwer(b) == z
            && !A.lattice().comparable(a, b)) {
          r.cond_c = false;
          r.witnesses.push_back("(c) " + pair(a, b));
        }
      }
      if (r.cond_d && proper(a) && A.brouwer(a) != z && A.diamond(a) != a) {
        r.cond_d = false;
        r.witnesses.push_back("(d) a=" + A.label(a));
      }
    }

    auto const        bs = blocks(A);
    std::vector<int>  owner(n, -1);
    bool              ok = true;
    for (std::size_t i = 0; i < bs.size() && ok; ++i) {
      for (auto x : bs[i]) {
        if (!proper(x)) {
          continue;
        }
        if (owner[x] != -1) {
          ok = false;
          break;
        }
        owner[x] = static_cast<int>(i);
      }
    }
    for (Element x = 0; x < n && ok; ++x) {
      if (proper(x) && owner[x] == -1) {
        ok = false;
      }
      for (Element y = 0; y < n && ok; ++y) {
        if (proper(x) && proper(y) && owner[x] != owner[y]
            && (A.meet(x, y) != z || A.join(x, y) != o)) {
          ok = false;
        }
      }
    }
    r.sum_of_blocks = ok;
    return r;
  }

}  // namespace pbz
