// The construction mini-language:
//
//   twist1(X)  twist2(X)  osum(X,Y)  hsum(X,Y,...)  prod(X,Y)
//   chainN  boolN  N5  M3  <catalog name>
//
// twist and osum take lattices (an algebra stands for its lattice reduct);
// hsum and prod take algebras. As an algebra, chainN is D_N and boolN is
// the N-element Boolean algebra.

#ifndef PBZ_RECIPE_HPP_
#define PBZ_RECIPE_HPP_

#include <optional>  // for optional
#include <string>    // for string

#include "pbz/algebra.hpp"
#include "pbz/constructions.hpp"

namespace pbz {

  struct RecipeValue {
    BoundedLattice               lattice;
    std::optional<FiniteAlgebra> algebra;
  };

  // Throws ParseError.
  ConstructionRecipe parse_recipe(std::string const& text);

  // Throws PreconditionError when an operand has the wrong kind or a
  // construction rejects its input.
  RecipeValue evaluate(ConstructionRecipe const& recipe);

  // Parses and evaluates; throws PreconditionError if the result is only a
  // lattice. The algebra is named after the recipe.
  FiniteAlgebra build(std::string const& text);

}  // namespace pbz

#endif  // PBZ_RECIPE_HPP_
