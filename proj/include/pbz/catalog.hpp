// Named algebras, stored as explicit tables.

#ifndef PBZ_CATALOG_HPP_
#define PBZ_CATALOG_HPP_

#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <vector>     // for vector

#include "pbz/algebra.hpp"

namespace pbz {

  class UnknownName : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  struct CatalogEntry {
    std::vector<std::string> names;  // primary name first, then aliases
    std::string              note;
    std::string              text;    // algebra file format
    std::string              recipe;  // empty if there is none
  };

  std::vector<CatalogEntry> const& catalog_entries();
  std::vector<std::string>         catalog_names();  // primary names
  bool                             in_catalog(std::string const& name);
  CatalogEntry const&              catalog_entry(std::string const& name);

  // Throws UnknownName.
  FiniteAlgebra catalog_get(std::string const& name);

  // D_n built directly: chain 0 < c1 < ... < 1, reversed ', a~ = 0 for
  // a > 0. Throws PreconditionError if n < 2.
  FiniteAlgebra kleene_chain(std::size_t n);
  // Boolean algebra on the bitmasks of `atoms` atoms, ~ = '.
  FiniteAlgebra boolean_algebra(std::size_t atoms);

}  // namespace pbz

#endif  // PBZ_CATALOG_HPP_
