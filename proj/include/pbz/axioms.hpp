// Membership of a finite algebra in the classes of the PBZ* hierarchy, and
// its sets of sharp elements. All checks are exhaustive and report the
// lexicographically least witness of failure.

#ifndef PBZ_AXIOMS_HPP_
#define PBZ_AXIOMS_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "pbz/algebra.hpp"

namespace pbz {

  struct CheckResult {
    bool                 holds = true;
    std::vector<Element> witness;
    std::string          clause;  // which condition failed, if several

    explicit operator bool() const noexcept {
      return holds;
    }

    static CheckResult fail(std::vector<Element> w, std::string c = {}) {
      return {false, std::move(w), std::move(c)};
    }
  };

  // a /\ a' <= b \/ b'
  CheckResult is_pseudo_kleene(FiniteAlgebra const& A);
  // every element Kleene-sharp (implies pseudo-Kleene)
  CheckResult is_ortholattice(FiniteAlgebra const& A);
  // ortholattice with a <= b => b = (b /\ a') \/ a
  CheckResult is_orthomodular(FiniteAlgebra const& A);
  // a <= b and a' /\ b = 0 => a = b
  CheckResult is_paraorthomodular(FiniteAlgebra const& A);
  // pseudo-Kleene plus the four Brouwer clauses; `clause` names the failure
  CheckResult is_bz(FiniteAlgebra const& A);
  // (a /\ a')~ <= a~ \/ a'~. Meaningful on BZ-lattices; evaluated literally
  // on any algebra.
  CheckResult is_bz_star(FiniteAlgebra const& A);
  // (a~ \/ (<>a /\ <>b)) /\ <>a <= <>b, evaluated literally
  CheckResult is_diamond_orthomodular(FiniteAlgebra const& A);
  // BZ and (*) and diamond-orthomodularity
  CheckResult is_pbz_star(FiniteAlgebra const& A);
  // Kleene-sharp elements are exactly {0, 1}
  CheckResult has_trivial_kleene_sharp(FiniteAlgebra const& A);
  // PBZ* with S_K = {0, 1}
  CheckResult is_antiortholattice(FiniteAlgebra const& A);

  Subset kleene_sharp(FiniteAlgebra const& A);

  struct SharpSets {
    Subset kleene;   // a /\ a' = 0
    Subset diamond;  // a = <>a
    Subset brouwer;  // a \/ a~ = 1
  };

  // Throws PreconditionError unless A is a BZ-lattice.
  SharpSets sharp_sets(FiniteAlgebra const& A);

  // {a : a' = a~}, the alternative description of the diamond-sharp
  // elements. Defined on any algebra.
  Subset diamond_sharp_by_complements(FiniteAlgebra const& A);

  struct BasicsFailure {
    std::string          clause;  // "i" .. "ix"
    std::vector<Element> witness;
  };

  // The nine arithmetical consequences of the BZ axioms, checked
  // exhaustively. Throws PreconditionError unless A is a BZ-lattice.
  std::vector<BasicsFailure> check_basics(FiniteAlgebra const& A);

  enum class AlgebraClass : std::size_t {
    bounded_involution_lattice,
    pseudo_kleene,
    ortholattice,
    orthomodular,
    paraorthomodular,
    bz,
    bz_star,
    diamond_orthomodular,
    pbz_star,
    antiortholattice,
  };

  inline constexpr std::size_t kClassCount = 10;

  // Short names used on the command line, e.g. "pbz-star".
  std::string_view             class_name(AlgebraClass c);
  std::optional<AlgebraClass>  class_from_name(std::string_view name);
  std::array<AlgebraClass, kClassCount> const& all_classes();

  struct AlgebraClassReport {
    std::array<CheckResult, kClassCount> verdicts;
    // S_K = {0,1} without requiring PBZ*, the other reading of the
    // antiortholattice condition
    bool kleene_antiortholattice = false;

    CheckResult const& operator[](AlgebraClass c) const {
      return verdicts[static_cast<std::size_t>(c)];
    }
    bool holds(AlgebraClass c) const {
      return (*this)[c].holds;
    }
  };

  AlgebraClassReport classify(FiniteAlgebra const& A);

}  // namespace pbz

#endif  // PBZ_AXIOMS_HPP_
