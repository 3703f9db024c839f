#include "doctest.h"
#include "helpers.hpp"
#include "pbz/algebra.hpp"

using namespace pbz;

namespace {
  AlgebraData square(std::vector<Element> kleene) {
    AlgebraData raw;
    raw.name   = "sq";
    raw.labels = {"0", "a", "b", "1"};
    raw.leq    = {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
    raw.kleene = std::move(kleene);
    raw.brouwer = {3, 2, 1, 0};
    raw.zero    = 0;
    raw.one     = 3;
    return raw;
  }
}  // namespace

TEST_CASE("valid data") {
  auto r = validate(square({3, 2, 1, 0}));
  CHECK(r.ok());
  auto A = FiniteAlgebra::from_data(square({3, 2, 1, 0}));
  CHECK(A.size() == 4);
  CHECK(A.box(1) == A.brouwer(A.kleene(1)));
  CHECK(A.diamond(1) == A.brouwer(A.brouwer(1)));
  CHECK(FiniteAlgebra::from_data(A.data()) == A);
}

TEST_CASE("identity map on the square is not order-reversing") {
  auto r = validate(square({0, 1, 2, 3}));
  REQUIRE(r.has("kleene-order-reversal"));
  CHECK(!r.has("kleene-involution"));
  for (auto const& v : r.violations) {
    if (v.rule == "kleene-order-reversal") {
      // least pair a <= b with b' not below a'
      CHECK(v.witness == std::vector<Element>{0, 1});
    }
  }
  CHECK_THROWS_AS(FiniteAlgebra::from_data(square({0, 1, 2, 3})),
                  InvalidAlgebra);
}

TEST_CASE("non-involution and bad bounds") {
  auto r = validate(square({3, 1, 1, 0}));
  CHECK(r.has("kleene-involution"));
  auto raw = square({3, 2, 1, 0});
  raw.zero = 1;
  CHECK(validate(raw).has("zero-bound"));
  raw      = square({3, 2, 1, 0});
  raw.labels[1] = "b";
  CHECK(validate(raw).has("distinct-labels"));
  raw = square({3, 2, 1, 0});
  raw.kleene[0] = 9;
  CHECK_THROWS_AS(validate(raw), MalformedInput);
  raw = square({3, 2, 1, 0});
  raw.brouwer.pop_back();
  CHECK_THROWS_AS(validate(raw), MalformedInput);
}

TEST_CASE("invalid report lists every rule") {
  try {
    FiniteAlgebra::from_data(square({0, 1, 2, 3}));
    FAIL("expected InvalidAlgebra");
  } catch (InvalidAlgebra const& e) {
    CHECK(!e.report().ok());
    CHECK(e.report().to_string({"0", "a", "b", "1"}).find(
              "kleene-order-reversal")
          != std::string::npos);
  }
}
