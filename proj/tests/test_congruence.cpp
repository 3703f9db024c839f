#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "pbz/axioms.hpp"
#include "pbz/congruence.hpp"
#include "pbz/constructions.hpp"

using namespace pbz;

namespace {
  std::set<oracle::PairSet> as_pairs(CongruenceLattice const& con) {
    std::set<oracle::PairSet> out;
    for (auto const& c : con.congruences()) {
      out.insert(c.pairs());
    }
    return out;
  }
}  // namespace

TEST_CASE("partitions") {
  auto p = Partition({4, 4, 1, 4});
  CHECK(p.block(0) == 0);
  CHECK(p.block(2) == 1);
  CHECK(p.num_blocks() == 2);
  CHECK(p.classes() == std::vector<Subset>{{0, 1, 3}, {2}});
  CHECK(p.pairs() == std::vector<std::pair<Element, Element>>{{0, 1}, {0, 3}, {1, 3}});
  auto q = Partition::from_classes(4, {{2, 3}});
  CHECK(p.meet(q).pairs() == std::vector<std::pair<Element, Element>>{});
  CHECK(p.join(q).is_total());
  CHECK(Partition::identity(4).refines(p));
  CHECK(!p.refines(q));
  CHECK(p.to_string({"w", "x", "y", "z"}) == "{w, x, z} | {y}");
}

TEST_CASE("all congruences agree with partition filtering") {
  for (auto const& name : catalog_names()) {
    auto A = testing::cat(name);
    if (A.size() > 6) {
      continue;
    }
    CAPTURE(name);
    auto con = all_congruences(A);
    CHECK(as_pairs(con) == oracle::congruences(A));
    CHECK(con.bottom().is_identity());
    CHECK(con.top().is_total());
    for (auto const& c : con.congruences()) {
      CHECK(is_congruence(A, c));
    }
  }
}

TEST_CASE("principal congruences agree with the closure oracle") {
  for (auto const* name : {"D3", "D5", "B4", "MO2", "B4⊞D3", "O6-benzene"}) {
    CAPTURE(name);
    auto A = testing::cat(name);
    for (Element a = 0; a < A.size(); ++a) {
      for (Element b = 0; b < A.size(); ++b) {
        CHECK(principal_congruence(A, a, b).pairs()
              == oracle::principal(A, a, b));
      }
    }
  }
  auto D3 = testing::cat("D3");
  CHECK(principal_congruence(D3, testing::el(D3, "a"), 0).is_total());
  CHECK(principal_congruence(D3, 1, 1).is_identity());
}

TEST_CASE("congruence lattices") {
  CHECK(all_congruences(testing::cat("D3")).size() == 2);
  CHECK(all_congruences(testing::cat("B4")).size() == 4);
  auto D5  = testing::cat("D5");
  auto con = all_congruences(D5);
  // chain: each congruence refines the next
  for (std::size_t i = 0; i + 1 < con.size(); ++i) {
    CHECK(con.congruences()[i].refines(con.congruences()[i + 1]));
  }
  CHECK(con.size() == 3);
  CHECK_THROWS_AS(all_congruences(testing::cat("B16")), PreconditionError);
  CHECK(all_congruences(testing::cat("B16"), 16).size() == 16);
}

TEST_CASE("subdirect irreducibility") {
  for (auto const* name : {"D2", "D3", "D4", "D5", "MO2", "B4⊞D3", "B4⊞D4",
                           "B4⊞D5", "MO2⊞D3"}) {
    CAPTURE(name);
    CHECK(is_subdirectly_irreducible(testing::cat(name)));
  }
  for (auto const* name : {"B4", "B8", "D6", "D7", "D8"}) {
    CAPTURE(name);
    CHECK(!is_subdirectly_irreducible(testing::cat(name)));
  }
  auto s = horizontal_sum({testing::cat("B4"), testing::cat("D6")});
  CHECK(!is_subdirectly_irreducible(s));

  auto D5 = testing::cat("D5");
  auto r  = subdirect_irreducibility(D5);
  REQUIRE(r.monolith);
  // the monolith collapses the middle three elements
  CHECK(r.monolith->pairs()
        == std::vector<std::pair<Element, Element>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("direct indecomposability") {
  for (auto const& name : catalog_names()) {
    auto A = testing::cat(name);
    if (A.size() > 12 || !is_antiortholattice(A).holds) {
      continue;
    }
    CAPTURE(name);
    CHECK(is_directly_indecomposable(A));
  }
  CHECK(!is_directly_indecomposable(testing::cat("B4")));
  CHECK(is_directly_indecomposable(testing::cat("MO2")));
  CHECK(is_directly_indecomposable(testing::cat("D2")));
  CHECK(!is_directly_indecomposable(product(testing::cat("D3"), testing::cat("D2"))));
}

TEST_CASE("C, D, E and ~ on small chains") {
  for (auto const* name : {"D2", "D3", "D4", "D5"}) {
    CAPTURE(name);
    auto A = testing::cat(name);
    CHECK(check_c_relations(A).ok());
    CHECK(check_positive_cone(A).ok());
    auto t = tomtom_check(A);
    CHECK(t.preconditions_hold());
    CHECK(t.ok());
  }
  auto D5    = testing::cat("D5");
  auto tilde = tilde_relation(D5);
  CHECK(tilde.is_congruence);
  CHECK(tilde.partition.num_blocks() == 5);
  auto D6 = testing::cat("D6");
  auto t6 = tilde_relation(D6);
  CHECK(t6.partition.classes()
        == std::vector<Subset>{{0}, {1, 2}, {3, 4}, {5}});
}

TEST_CASE("tomtom preconditions are reported") {
  auto t = tomtom_check(testing::cat("D6"));
  CHECK(!t.preconditions_hold());
  CHECK(t.precondition_failures
        == std::vector<std::string>{"not subdirectly irreducible"});
  auto m = tomtom_check(testing::cat("MO2"));
  CHECK(!m.preconditions_hold());
  CHECK(m.precondition_failures.front() == "not an antiortholattice");
  CHECK(t.tilde_congruence);
}

TEST_CASE("quotients of D5 by its congruences") {
  auto D5 = testing::cat("D5");
  auto con = all_congruences(D5);
  for (auto const& c : con.congruences()) {
    auto Q = quotient(D5, c);
    CHECK(validate(Q.data()).ok());
    CHECK(is_pbz_star(Q).holds);
  }
}
