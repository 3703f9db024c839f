#include "pbz/theory.hpp"

#include <stdexcept>  // for out_of_range

namespace pbz {

  namespace {
    std::vector<std::pair<char const*, char const*>> const kLaws = {
        {"AOL1", "(x~ v y~) ^ (<>x v z~) = ((x~ v y) ^ (<>x v z))~"},
        {"AOL2", "x = (x ^ y~) v (x ^ <>y)"},
        {"AOL3", "x = (x v y~) ^ (x v <>y)"},
        {"DIST", "x ^ (y v z) = (x ^ y) v (x ^ z)"},
        {"SDM", "(x ^ y)~ = x~ v y~"},
        {"SK", "x ^ <>y <= []x v y"},
        {"STAR", "(x ^ x')~ <= x~ v x'~"},
        {"DIAMOND_OM", "(x~ v (<>x ^ <>y)) ^ <>x <= <>y"},
        {"J", "x v y = ((x v y) ^ y~) v ((x v y) ^ <>y)"},
        {"PK", "x ^ x' <= y v y'"},
        {"BZ1", "x ^ x~ = 0"},
        {"BZ2", "x <= x~~"},
        {"BZ3", "x <= y => y~ <= x~"},
        {"BZ4", "x~' = x~~"},
        {"OL", "x ^ x' = 0"},
        {"OM", "x <= y => y = (y ^ x') v x"},
        {"POM", "x <= y & x' ^ y = 0 => x = y"},
        // consequences of AOL1-3 + SK + SDM, ending in distributivity; the
        // third is stated as a two-sided equation
        {"FR1", "x v []y = (x v y) ^ (<>x v []y)"},
        {"FR2", "x v (y ^ z) = x v ((<>y v []x) ^ (x v y) ^ z)"},
        {"FR3", "x v (y ^ z) = x v ((x v y) ^ z)"},
        {"FR4", "x ^ (y v z) = x ^ (y v (x ^ z))"},
        {"FR5", "x ^ (y v z) = (x ^ y) v (x ^ z)"},
    };
  }  // namespace

  std::vector<NamedLaw> const& named_theory() {
    static std::vector<NamedLaw> const theory = [] {
      std::vector<NamedLaw> result;
      for (auto const& [name, text] : kLaws) {
        result.push_back({name, text, parse_law(text)});
      }
      return result;
    }();
    return theory;
  }

  NamedLaw const& named_law(std::string const& name) {
    for (auto const& law : named_theory()) {
      if (law.name == name) {
        return law;
      }
    }
    throw std::out_of_range("unknown law '" + name + "'");
  }

  bool is_named_law(std::string const& name) {
    for (auto const& law : named_theory()) {
      if (law.name == name) {
        return true;
      }
    }
    return false;
  }

  QuasiIdentity resolve_law(std::string const& name_or_text) {
    if (is_named_law(name_or_text)) {
      return named_law(name_or_text).law;
    }
    return parse_law(name_or_text);
  }

}  // namespace pbz
