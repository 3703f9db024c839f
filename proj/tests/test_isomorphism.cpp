#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "pbz/constructions.hpp"
#include "pbz/isomorphism.hpp"

using namespace pbz;

namespace {
  std::vector<Element> random_perm(std::size_t n, std::mt19937& rng) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }
}  // namespace

TEST_CASE("relabelled copies are isomorphic with equal canonical forms") {
  std::mt19937 rng(12345);
  for (auto const& name : catalog_names()) {
    auto A  = testing::cat(name);
    auto cf = canonical_form(A);
    for (int trial = 0; trial < 5; ++trial) {
      auto B   = testing::permuted(A, random_perm(A.size(), rng));
      auto phi = find_isomorphism(A, B);
      REQUIRE(phi);
      CHECK(is_isomorphism(A, B, *phi));
      CHECK(canonical_form(B) == cf);
      CHECK(canonical_form(B.lattice()) == canonical_form(A.lattice()));
    }
  }
}

TEST_CASE("canonical forms separate exactly the non-isomorphic pairs") {
  std::vector<FiniteAlgebra> small;
  for (auto const& name : catalog_names()) {
    auto A = testing::cat(name);
    if (A.size() <= 8) {
      small.push_back(A);
    }
  }
  std::mt19937 rng(7);
  // add relabelled copies so that equal classes occur
  small.push_back(testing::permuted(small[3], random_perm(small[3].size(), rng)));
  small.push_back(testing::permuted(small[9], random_perm(small[9].size(), rng)));
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      bool const expected = oracle::isomorphic(small[i], small[j]);
      CHECK(is_isomorphic(small[i], small[j]) == expected);
      CHECK((canonical_form(small[i]) == canonical_form(small[j]))
            == expected);
    }
  }
}

TEST_CASE("canonical order produces the same table from any labelling") {
  std::mt19937 rng(99);
  auto         A = testing::cat("T1(N5⊕1)");
  auto B = testing::permuted(A, random_perm(A.size(), rng));
  auto canon = [](FiniteAlgebra const& X) {
    auto                 order = canonical_order(X);
    std::vector<Element> perm(X.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      perm[order[i]] = static_cast<Element>(i);
    }
    return testing::permuted(X, perm);
  };
  auto CA = canon(A), CB = canon(B);
  CHECK(CA.lattice().order_table() == CB.lattice().order_table());
  CHECK(CA.kleene_map() == CB.kleene_map());
  CHECK(CA.brouwer_map() == CB.brouwer_map());
}

TEST_CASE("twist of the 2-chain is D3") {
  auto T = twist1(BoundedLattice::chain(2));
  auto D = testing::cat("D3");
  CHECK(oracle::isomorphic(T, D));
  CHECK(is_isomorphic(T, D));
}

TEST_CASE("different maps on one lattice") {
  // B4 with ~ = ' against B4 with ~ collapsing to the bottom
  auto A = testing::cat("B4");
  std::vector<Element> k = A.kleene_map();
  std::vector<Element> b(4, A.zero());
  b[A.zero()] = A.one();
  FiniteAlgebra B("B4x", A.lattice(), k, b);
  CHECK(!is_isomorphic(A, B));
  CHECK(canonical_form(A) != canonical_form(B));
  CHECK(is_isomorphic(A.lattice(), B.lattice()));
}
