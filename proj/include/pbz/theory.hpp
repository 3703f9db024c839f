// The named identities and quasi-identities used throughout the library.

#ifndef PBZ_THEORY_HPP_
#define PBZ_THEORY_HPP_

#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "pbz/term.hpp"

namespace pbz {

  struct NamedLaw {
    std::string   name;
    std::string   text;
    QuasiIdentity law;
  };

  // AOL1-3, DIST, SDM, SK, STAR, DIAMOND_OM, J, PK, BZ1-BZ4, OL, OM, POM and
  // the distributivity chain FR1-FR5.
  std::vector<NamedLaw> const& named_theory();

  // Throws std::out_of_range for an unknown name.
  NamedLaw const& named_law(std::string const& name);
  bool            is_named_law(std::string const& name);

  // A name from the theory, or else the text of a law.
  QuasiIdentity resolve_law(std::string const& name_or_text);

}  // namespace pbz

#endif  // PBZ_THEORY_HPP_
