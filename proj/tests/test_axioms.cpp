#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "pbz/axioms.hpp"

using namespace pbz;

namespace {
  // Literal readings of the class definitions, one loop each.
  struct Literal {
    FiniteAlgebra const& A;
    std::size_t          n;
    Element              z, o;

    explicit Literal(FiniteAlgebra const& a)
        : A(a), n(a.size()), z(a.zero()), o(a.one()) {}

    Element k(Element x) const {
      return A.kleene(x);
    }
    Element b(Element x) const {
      return A.brouwer(x);
    }
    Element m(Element x, Element y) const {
      return A.meet(x, y);
    }
    Element j(Element x, Element y) const {
      return A.join(x, y);
    }

    template <typename F>
    bool all2(F f) const {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (!f(x, y)) {
            return false;
          }
        }
      }
      return true;
    }

    bool pk() const {
      return all2([&](Element x, Element y) {
        return A.leq(m(x, k(x)), j(y, k(y)));
      });
    }
    bool ol() const {
      return pk() && all2([&](Element x, Element) { return m(x, k(x)) == z; });
    }
    bool om() const {
      return ol() && all2([&](Element x, Element y) {
               return !A.leq(x, y) || y == j(m(y, k(x)), x);
             });
    }
    bool pom() const {
      return all2([&](Element x, Element y) {
        return !(A.leq(x, y) && m(k(x), y) == z) || x == y;
      });
    }
    bool bz() const {
      return pk() && all2([&](Element x, Element y) {
               return m(x, b(x)) == z && A.leq(x, b(b(x)))
                      && (!A.leq(x, y) || A.leq(b(y), b(x)))
                      && k(b(x)) == b(b(x));
             });
    }
    bool star() const {
      return all2([&](Element x, Element) {
        return A.leq(b(m(x, k(x))), j(b(x), b(k(x))));
      });
    }
    bool dom() const {
      return all2([&](Element x, Element y) {
        Element dx = b(b(x)), dy = b(b(y));
        return A.leq(m(j(b(x), m(dx, dy)), dx), dy);
      });
    }
    bool trivial_sharp() const {
      return all2([&](Element x, Element) {
        return m(x, k(x)) != z || x == z || x == o;
      });
    }
  };

  using C = AlgebraClass;

  // pk ol om pom bz bz* dom pbz* aol
  std::map<std::string, std::array<bool, 9>> const expected = {
      {"D2", {1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {"D3", {1, 0, 0, 1, 1, 1, 1, 1, 1}},
      {"D4", {1, 0, 0, 1, 1, 1, 1, 1, 1}},
      {"D5", {1, 0, 0, 1, 1, 1, 1, 1, 1}},
      {"D8", {1, 0, 0, 1, 1, 1, 1, 1, 1}},
      {"B4", {1, 1, 1, 1, 1, 1, 1, 1, 0}},
      {"B16", {1, 1, 1, 1, 1, 1, 1, 1, 0}},
      {"MO2", {1, 1, 1, 1, 1, 1, 1, 1, 0}},
      {"O6-benzene", {1, 1, 0, 0, 1, 1, 0, 0, 0}},
      {"MO2⊞D3", {1, 0, 0, 1, 1, 1, 1, 1, 0}},
      {"B4⊞D5", {1, 0, 0, 1, 1, 1, 1, 1, 0}},
      {"T1(2x2)", {1, 0, 0, 1, 1, 1, 1, 1, 1}},
      {"T2(2x2)", {1, 0, 0, 1, 1, 1, 1, 1, 1}},
      {"T1(N5⊕1)", {1, 0, 0, 1, 1, 1, 1, 1, 1}},
  };
}  // namespace

TEST_CASE("class flags of named algebras") {
  for (auto const& [name, flags] : expected) {
    CAPTURE(name);
    auto A = testing::cat(name);
    auto r = classify(A);
    CHECK(r.holds(C::bounded_involution_lattice));
    CHECK(r.holds(C::pseudo_kleene) == flags[0]);
    CHECK(r.holds(C::ortholattice) == flags[1]);
    CHECK(r.holds(C::orthomodular) == flags[2]);
    CHECK(r.holds(C::paraorthomodular) == flags[3]);
    CHECK(r.holds(C::bz) == flags[4]);
    CHECK(r.holds(C::bz_star) == flags[5]);
    CHECK(r.holds(C::diamond_orthomodular) == flags[6]);
    CHECK(r.holds(C::pbz_star) == flags[7]);
    CHECK(r.holds(C::antiortholattice) == flags[8]);
  }
}

TEST_CASE("class checks agree with the literal definitions") {
  for (auto const& name : catalog_names()) {
    CAPTURE(name);
    auto    A = testing::cat(name);
    Literal L(A);
    CHECK(is_pseudo_kleene(A).holds == L.pk());
    CHECK(is_ortholattice(A).holds == L.ol());
    CHECK(is_orthomodular(A).holds == L.om());
    CHECK(is_paraorthomodular(A).holds == L.pom());
    CHECK(is_bz(A).holds == L.bz());
    CHECK(is_bz_star(A).holds == L.star());
    CHECK(is_diamond_orthomodular(A).holds == L.dom());
    CHECK(is_pbz_star(A).holds == (L.bz() && L.star() && L.dom()));
    CHECK(has_trivial_kleene_sharp(A).holds == L.trivial_sharp());
    CHECK(is_antiortholattice(A).holds
          == (L.bz() && L.star() && L.dom() && L.trivial_sharp()));
  }
}

TEST_CASE("witnesses") {
  auto O6 = testing::cat("O6-benzene");
  auto om = is_orthomodular(O6);
  REQUIRE(!om.holds);
  CHECK(om.clause == "orthomodular law");
  REQUIRE(om.witness.size() == 2);
  Element x = om.witness[0], y = om.witness[1];
  CHECK(O6.leq(x, y));
  CHECK(y != O6.join(O6.meet(y, O6.kleene(x)), x));

  auto pom = is_paraorthomodular(O6);
  REQUIRE(!pom.holds);
  REQUIRE(pom.witness.size() == 2);
  x = pom.witness[0], y = pom.witness[1];
  CHECK(O6.leq(x, y));
  CHECK(O6.meet(O6.kleene(x), y) == O6.zero());
  CHECK(x != y);

  auto D4 = testing::cat("D4");
  auto ol = is_ortholattice(D4);
  REQUIRE(!ol.holds);
  CHECK(ol.witness == std::vector<Element>{testing::el(D4, "a")});
}

TEST_CASE("a map that is not a Brouwer complement") {
  auto                 D3 = testing::cat("D3");
  std::vector<Element> b  = D3.brouwer_map();
  b[testing::el(D3, "a")] = testing::el(D3, "a");  // a ^ a~ = a
  FiniteAlgebra X("x", D3.lattice(), D3.kleene_map(), b);
  auto          r = is_bz(X);
  CHECK(!r.holds);
  CHECK(r.clause == "i");
  CHECK_THROWS_AS(sharp_sets(X), PreconditionError);
  CHECK_THROWS_AS(check_basics(X), PreconditionError);
  CHECK(!classify(X).holds(C::bz_star));
}

TEST_CASE("sharp sets") {
  auto D5 = testing::cat("D5");
  auto s  = sharp_sets(D5);
  auto bounds = testing::els(D5, {"0", "1"});
  CHECK(s.kleene == bounds);
  CHECK(s.diamond == bounds);
  CHECK(s.brouwer == bounds);
  CHECK(kleene_sharp(D5) == bounds);

  auto M = testing::cat("MO2⊞D3");
  auto t = sharp_sets(M);
  auto mo2 = testing::els(M, {"0", "a", "a'", "b", "b'", "1"});
  CHECK(t.kleene == mo2);
  CHECK(t.diamond == mo2);
  CHECK(t.brouwer == mo2);
  CHECK(diamond_sharp_by_complements(M) == mo2);
}

TEST_CASE("BZ consequences hold on BZ-lattices") {
  for (auto const& name : catalog_names()) {
    auto A = testing::cat(name);
    if (is_bz(A).holds) {
      CAPTURE(name);
      CHECK(check_basics(A).empty());
    }
  }
}

TEST_CASE("class names") {
  for (auto c : all_classes()) {
    CHECK(class_from_name(class_name(c)) == c);
  }
  CHECK(class_from_name("pbz-star") == C::pbz_star);
  CHECK(!class_from_name("nonsense"));
}

TEST_CASE("antiortholattice readings") {
  auto r = classify(testing::cat("D4"));
  CHECK(r.kleene_antiortholattice);
  CHECK(!classify(testing::cat("B4")).kleene_antiortholattice);
}
