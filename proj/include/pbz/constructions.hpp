// Ways to build new algebras from old: the two twist constructions over a
// bounded lattice, ordinal and horizontal sums, products, subalgebras and
// quotients. Also cones, blocks and the commutation term gamma.

#ifndef PBZ_CONSTRUCTIONS_HPP_
#define PBZ_CONSTRUCTIONS_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "pbz/algebra.hpp"
#include "pbz/congruence.hpp"
#include "pbz/lattice.hpp"

namespace pbz {

  // An expression tree describing how an algebra was obtained. Leaves are
  // names: catalog entries, "chainN", "boolN", or "P(name)" for the positive
  // cone of an algebra.
  struct ConstructionRecipe {
    enum class Kind {
      name,
      twist1,
      twist2,
      ordinal_sum,
      horizontal_sum,
      product,
      sub,
      quotient
    };

    Kind                            kind = Kind::name;
    std::string                     name;
    std::vector<ConstructionRecipe> operands;

    static ConstructionRecipe leaf(std::string name);
    static ConstructionRecipe apply(Kind kind,
                                    std::vector<ConstructionRecipe> operands);

    // twist1(chain3), hsum(B4,D3), ...
    std::string to_string() const;
  };

  // Universe: f[L \ {0}] in the dual order, below a copy of L. The f-copies
  // come first and are labelled "f(x)". Throws PreconditionError if |L| < 2.
  FiniteAlgebra twist1(BoundedLattice const& L);
  // Universe: f[L] in the dual order, below a copy of L.
  FiniteAlgebra twist2(BoundedLattice const& L);

  // Every element of M below every element of L; M first in the numbering.
  // Labels from L that clash with labels from M get a "_2" suffix.
  BoundedLattice ordinal_sum(BoundedLattice const& M, BoundedLattice const& L);

  // Shared bounds are elements 0 and n-1; the other elements follow in
  // summand order. A label used by more than one summand is suffixed with
  // "_i", i the 1-based summand index. Throws PreconditionError on a trivial
  // summand or on two or more summands that are not orthomodular.
  FiniteAlgebra horizontal_sum(std::vector<FiniteAlgebra> const& summands);

  struct Cones {
    Subset negative;           // a <= a'
    Subset positive;           // a' <= a
    Subset strictly_negative;  // a < a'
    Subset strictly_positive;  // a' < a
  };

  Cones cones(FiniteAlgebra const& A);

  struct TwistRepresentation {
    bool ok = false;
    // Set when ok.
    int                               variant = 0;  // 1 or 2
    std::optional<BoundedLattice>     positive;
    std::optional<FiniteAlgebra>      twist;
    std::vector<Element>              phi;  // A -> twist
    std::optional<ConstructionRecipe> recipe;
    // Set when not ok.
    std::string            reason;
    std::optional<Element> witness;
  };

  // Rebuilds A as twist_i(P(A)) when the cones cover A. Throws
  // PreconditionError unless A is a nontrivial antiortholattice.
  TwistRepresentation twist_represent(FiniteAlgebra const& A);

  // Maximal subuniverses that form a Boolean algebra or an antiortholattice
  // chain, each sorted, the list sorted. Throws PreconditionError unless A is
  // PBZ* with at most 64 elements.
  std::vector<Subset> blocks(FiniteAlgebra const& A);

  struct HorizontalSumReport {
    bool cond_a = true;  // gamma(a, b) != 0 implies a v b = 1
    bool cond_b = true;  // a, b proper, a~ = 0, <>b = b imply a v b = 1
    bool cond_c = true;  // a~ = b~ = 0 implies a, b comparable
    bool cond_d = true;  // a proper implies a~ = 0 or <>a = a
    std::vector<std::string> witnesses;
    // A is the horizontal sum of blocks(A), tested directly.
    bool sum_of_blocks = false;

    bool conditions() const noexcept {
      return cond_a && cond_b && cond_c && cond_d;
    }
    bool agree() const noexcept {
      return conditions() == sum_of_blocks;
    }
  };

  HorizontalSumReport horizontal_sum_report(FiniteAlgebra const& A);
  inline bool is_horizontal_sum_of_blocks(FiniteAlgebra const& A) {
    return horizontal_sum_report(A).sum_of_blocks;
  }

  // (a v b) ^ (a v b~) ^ (a~ v b) ^ (a~ v b~)
  Element gamma(FiniteAlgebra const& A, Element a, Element b);
  inline bool commutes(FiniteAlgebra const& A, Element a, Element b) {
    return gamma(A, a, b) == A.zero();
  }

  // {0} together with every a with a~ = 0.
  Subset unsharp_chain(FiniteAlgebra const& A);

  // Pair (a, b) is element a * |B| + b, labelled "(a,b)".
  FiniteAlgebra product(FiniteAlgebra const& A, FiniteAlgebra const& B);

  // Closure of `seeds` together with the bounds under all operations.
  Subset subuniverse_generated(FiniteAlgebra const& A, Subset const& seeds);
  // Throws PreconditionError unless `universe` is closed.
  FiniteAlgebra subalgebra(FiniteAlgebra const& A, Subset const& universe);
  FiniteAlgebra subalgebra_generated(FiniteAlgebra const& A,
                                     Subset const&        seeds);

  // Classes ordered by least member and labelled by it. Throws
  // PreconditionError if theta is not a congruence.
  FiniteAlgebra quotient(FiniteAlgebra const& A, Partition const& theta);

}  // namespace pbz

#endif  // PBZ_CONSTRUCTIONS_HPP_
