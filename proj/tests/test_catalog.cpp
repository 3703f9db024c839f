#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "pbz/axioms.hpp"
#include "pbz/catalog.hpp"
#include "pbz/isomorphism.hpp"
#include "pbz/recipe.hpp"

using namespace pbz;

TEST_CASE("every entry validates") {
  CHECK(catalog_names().size() == 19);
  for (auto const& e : catalog_entries()) {
    CAPTURE(e.names.front());
    auto A = catalog_get(e.names.front());
    CHECK(validate(A.data()).ok());
    for (auto const& alias : e.names) {
      CHECK(catalog_get(alias) == A);
    }
  }
  CHECK_THROWS_AS(catalog_get("D99"), UnknownName);
  CHECK(in_catalog("B4+D3"));
  CHECK(in_catalog("O6"));
}

TEST_CASE("recipes rebuild the tables") {
  for (auto const& e : catalog_entries()) {
    if (e.recipe.empty()) {
      continue;
    }
    CAPTURE(e.names.front());
    auto A = catalog_get(e.names.front());
    auto B = build(e.recipe);
    CHECK(is_isomorphic(A, B));
    if (A.size() <= 8) {
      CHECK(oracle::isomorphic(A, B));
    }
  }
}

TEST_CASE("Kleene chains") {
  for (std::size_t n = 2; n <= 8; ++n) {
    CAPTURE(n);
    auto A = catalog_get("D" + std::to_string(n));
    CHECK(A.size() == n);
    CHECK(A.lattice().is_chain());
    CHECK(is_isomorphic(A, kleene_chain(n)));
    for (Element a = 0; a < n; ++a) {
      CHECK((A.brouwer(a) == A.zero()) == (a != A.zero()));
    }
  }
  auto D3 = catalog_get("D3");
  CHECK(D3.kleene(D3.element("a")) == D3.element("a"));
  CHECK(boolean_algebra(3).size() == 8);
  CHECK(is_isomorphic(boolean_algebra(3), catalog_get("B8")));
}

TEST_CASE("documented flags") {
  auto M = catalog_get("MO2");
  CHECK(M.size() == 6);
  CHECK(is_orthomodular(M).holds);
  CHECK(!M.lattice().is_distributive());
  CHECK(M.brouwer_map() == M.kleene_map());
  auto O = catalog_get("O6-benzene");
  CHECK(is_ortholattice(O).holds);
  CHECK(!is_orthomodular(O).holds);
  CHECK(!is_paraorthomodular(O).holds);
  CHECK(catalog_get("D2").lattice().is_distributive());
  CHECK(is_orthomodular(catalog_get("D2")).holds);
}
