// Isomorphism testing and canonical forms by colour refinement followed by
// backtracking.

#ifndef PBZ_ISOMORPHISM_HPP_
#define PBZ_ISOMORPHISM_HPP_

#include <cstdint>   // for uint8_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "pbz/algebra.hpp"
#include "pbz/lattice.hpp"

namespace pbz {

  using CanonicalForm = std::vector<std::uint8_t>;

  // A bijection phi (phi[a] is the image of a) preserving the order and both
  // unary maps, or nothing.
  std::optional<std::vector<Element>> find_isomorphism(FiniteAlgebra const& a,
                                                       FiniteAlgebra const& b);
  std::optional<std::vector<Element>>
  find_isomorphism(BoundedLattice const& a, BoundedLattice const& b);

  inline bool is_isomorphic(FiniteAlgebra const& a, FiniteAlgebra const& b) {
    return find_isomorphism(a, b).has_value();
  }
  inline bool is_isomorphic(BoundedLattice const& a, BoundedLattice const& b) {
    return find_isomorphism(a, b).has_value();
  }

  // True iff phi is a bijection from a to b preserving <=, ' and ~.
  bool is_isomorphism(FiniteAlgebra const&        a,
                      FiniteAlgebra const&        b,
                      std::vector<Element> const& phi);

  // Lexicographically least encoding over all labellings compatible with the
  // refined colouring. Equal iff isomorphic.
  CanonicalForm canonical_form(FiniteAlgebra const& a);
  CanonicalForm canonical_form(BoundedLattice const& a);

  // The labelling attaining the canonical form: result[k] is the element
  // placed at position k.
  std::vector<Element> canonical_order(FiniteAlgebra const& a);
  std::vector<Element> canonical_order(BoundedLattice const& a);

}  // namespace pbz

#endif  // PBZ_ISOMORPHISM_HPP_
