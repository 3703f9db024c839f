#include "pbz/catalog.hpp"

#include <algorithm>  // for find

#include "pbz/io.hpp"

namespace pbz {

  namespace {
    struct RawEntry {
      std::vector<std::string> names;
      char const*              note;
      char const*              text;
    };

    std::vector<RawEntry> const raw_entries = {
#include "catalog_data.inc"
    };

    std::string recipe_for(std::string const& name) {
      static std::vector<std::pair<std::string, std::string>> const recipes
          = {{"D2", "twist2(chain1)"},
             {"D3", "twist1(chain2)"},
             {"D4", "twist2(chain2)"},
             {"D5", "twist1(chain3)"},
             {"D6", "twist2(chain3)"},
             {"D7", "twist1(chain4)"},
             {"D8", "twist2(chain4)"},
             {"B4", "prod(D2,D2)"},
             {"B8", "prod(B4,D2)"},
             {"B16", "prod(B8,D2)"},
             {"MO2", "hsum(B4,B4)"},
             {"MO2⊞D3", "hsum(MO2,D3)"},
             {"B4⊞D3", "hsum(B4,D3)"},
             {"B4⊞D4", "hsum(B4,D4)"},
             {"B4⊞D5", "hsum(B4,D5)"},
             {"T1(2x2)", "twist1(bool4)"},
             {"T2(2x2)", "twist2(bool4)"},
             {"T1(N5⊕1)", "twist1(osum(N5,chain1))"}};
      for (auto const& [n, r] : recipes) {
        if (n == name) {
          return r;
        }
      }
      return "";
    }
  }  // namespace

  std::vector<CatalogEntry> const& catalog_entries() {
    static std::vector<CatalogEntry> const entries = [] {
      std::vector<CatalogEntry> out;
      for (auto const& raw : raw_entries) {
        out.push_back({raw.names, raw.note, raw.text,
                       recipe_for(raw.names.front())});
      }
      return out;
    }();
    return entries;
  }

  std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (auto const& e : catalog_entries()) {
      out.push_back(e.names.front());
    }
    return out;
  }

  bool in_catalog(std::string const& name) {
    for (auto const& e : catalog_entries()) {
      if (std::find(e.names.begin(), e.names.end(), name) != e.names.end()) {
        return true;
      }
    }
    return false;
  }

  CatalogEntry const& catalog_entry(std::string const& name) {
    for (auto const& e : catalog_entries()) {
      if (std::find(e.names.begin(), e.names.end(), name) != e.names.end()) {
        return e;
      }
    }
    throw UnknownName("unknown catalog algebra '" + name + "'");
  }

  FiniteAlgebra catalog_get(std::string const& name) {
    return parse_algebra(catalog_entry(name).text);
  }

  FiniteAlgebra kleene_chain(std::size_t n) {
    if (n < 2) {
      throw PreconditionError("kleene_chain needs at least 2 elements");
    }
    std::vector<Element> kleene(n), brouwer(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      kleene[i] = static_cast<Element>(n - 1 - i);
    }
    brouwer[0] = static_cast<Element>(n - 1);
    return FiniteAlgebra("D" + std::to_string(n), BoundedLattice::chain(n),
                         std::move(kleene), std::move(brouwer));
  }

  FiniteAlgebra boolean_algebra(std::size_t atoms) {
    auto                 L = BoundedLattice::boolean(atoms);
    std::vector<Element> comp(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
      comp[i] = static_cast<Element>((L.size() - 1) ^ i);
    }
    return FiniteAlgebra("B" + std::to_string(L.size()), std::move(L), comp,
                         comp);
  }

}  // namespace pbz
