#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "pbz/axioms.hpp"
#include "pbz/catalog.hpp"
#include "pbz/congruence.hpp"
#include "pbz/constructions.hpp"
#include "pbz/enumerate.hpp"
#include "pbz/theory.hpp"

namespace pbz {

  namespace {
    QuasiIdentity law(char const* name) {
      return named_law(name).law;
    }

    std::string check_laws(FiniteAlgebra const&            A,
                           std::vector<char const*> const& names) {
      std::string out;
      for (auto name : names) {
        auto h = holds(A, law(name));
        if (!h.holds) {
          out += std::string(out.empty() ? "" : "; ") + "fails " + name;
          if (h.counterexample) {
            out += " at " + format_assignment(A, *h.counterexample);
          }
        }
      }
      return out;
    }

    EnumerationSpec corpus(std::size_t max_size, std::vector<AlgebraClass> c,
                           std::vector<char const*> laws = {}) {
      EnumerationSpec s;
      s.max_size = max_size;
      s.classes  = std::move(c);
      for (auto name : laws) {
        s.laws.push_back(law(name));
      }
      return s;
    }

    EnumerationSpec aol_corpus(std::size_t              max_size,
                               std::vector<char const*> laws = {}) {
      auto s                  = corpus(max_size, {}, std::move(laws));
      s.antiortholattice_only = true;
      return s;
    }

    std::string collassone(FiniteAlgebra const& A) {
      auto const s = sharp_sets(A);
      if (s.diamond != s.brouwer || s.brouwer != s.kleene) {
        return "sharp sets differ";
      }
      if (diamond_sharp_by_complements(A) != s.diamond) {
        return "{a : a' = a~} differs from the diamond-sharp elements";
      }
      return {};
    }

    std::string paradia(FiniteAlgebra const& A) {
      bool const p = is_paraorthomodular(A).holds;
      bool const d = is_diamond_orthomodular(A).holds;
      if (p != d) {
        return p ? "paraorthomodular but not diamond-orthomodular"
                 : "diamond-orthomodular but not paraorthomodular";
      }
      return {};
    }

    // The first element outside P u N, if any.
    std::optional<Element> outside_cones(FiniteAlgebra const& A) {
      auto const        c = cones(A);
      std::vector<bool> covered(A.size(), false);
      for (auto a : c.negative) {
        covered[a] = true;
      }
      for (auto a : c.positive) {
        covered[a] = true;
      }
      for (Element a = 0; a < A.size(); ++a) {
        if (!covered[a]) {
          return a;
        }
      }
      return std::nullopt;
    }

    std::string twist_roundtrip(FiniteAlgebra const& A) {
      if (outside_cones(A)) {
        return {};
      }
      auto const r = twist_represent(A);
      if (!r.ok) {
        return "no twist representation: " + r.reason;
      }
      if (!is_isomorphism(A, *r.twist, r.phi)) {
        return "returned map is not an isomorphism";
      }
      return {};
    }

    std::string katanga(FiniteAlgebra const& A) {
      if (!is_antiortholattice(A).holds) {
        return "not an antiortholattice";
      }
      auto out = check_laws(A, {"DIST", "SDM"});
      if (!out.empty()) {
        return out;
      }
      if (!is_isomorphic(A, kleene_chain(A.size()))) {
        return "not isomorphic to D" + std::to_string(A.size());
      }
      return {};
    }

    std::string merluzzo(FiniteAlgebra const& A) {
      if (!is_subdirectly_irreducible(A)) {
        return {};
      }
      for (std::size_t n = 2; n <= 5; ++n) {
        if (A.size() == n && is_isomorphic(A, kleene_chain(n))) {
          return {};
        }
      }
      return "subdirectly irreducible but not one of D2-D5";
    }

    std::string basis_reduction(FiniteAlgebra const& A) {
      return check_laws(A, {"DIST", "SDM"});
    }

    std::string disjointness(FiniteAlgebra const& A) {
      for (Element a = 0; a < A.size(); ++a) {
        for (Element b = 0; b < A.size(); ++b) {
          if (a != A.zero() && b != A.zero() && A.meet(a, b) == A.zero()) {
            return "a=" + A.label(a) + ", b=" + A.label(b)
                   + " are nonzero with a ^ b = 0";
          }
        }
      }
      return {};
    }

    std::string scucca(FiniteAlgebra const& A) {
      auto const r = horizontal_sum_report(A);
      if (!r.agree()) {
        return std::string("conditions ") + (r.conditions() ? "hold" : "fail")
               + " but sum of blocks is "
               + (r.sum_of_blocks ? "true" : "false");
      }
      return {};
    }

    std::string basics(FiniteAlgebra const& A) {
      auto const f = check_basics(A);
      if (!f.empty()) {
        return "clause " + f.front().clause + " fails";
      }
      return {};
    }

    std::string ammarolla_tomtom(FiniteAlgebra const& A) {
      if (!is_subdirectly_irreducible(A)) {
        return {};
      }
      std::string out;
      auto        add = [&](std::vector<std::string> const& failures) {
        for (auto const& f : failures) {
          out += (out.empty() ? "" : "; ") + f;
        }
      };
      add(check_c_relations(A).failures);
      add(check_positive_cone(A).failures);
      auto const t = tomtom_check(A);
      add(t.precondition_failures);
      add(t.failures);
      return out;
    }

    std::string gustoso(FiniteAlgebra const& A) {
      if (!is_subdirectly_irreducible(A)) {
        return {};
      }
      if (!is_antiortholattice(A).holds) {
        return "subdirectly irreducible but not an antiortholattice";
      }
      if (auto a = outside_cones(A)) {
        return A.label(*a) + " is neither positive nor negative";
      }
      return {};
    }

    std::vector<Claim> make_claims() {
      using C = AlgebraClass;
      return {
          {"collassone",
           "paraorthomodular BZ*: the diamond-, Brouwer- and Kleene-sharp "
           "elements coincide",
           corpus(6, {C::bz_star, C::paraorthomodular}),
           collassone},
          {"paradia",
           "BZ*: paraorthomodular iff diamond-orthomodular",
           corpus(6, {C::bz_star}),
           paradia},
          {"aol-basis",
           "antiortholattices satisfy AOL1-AOL3",
           aol_corpus(8),
           [](FiniteAlgebra const& A) {
             return check_laws(A, {"AOL1", "AOL2", "AOL3"});
           }},
          {"j-holds",
           "antiortholattices satisfy J",
           aol_corpus(8),
           [](FiniteAlgebra const& A) { return check_laws(A, {"J"}); }},
          {"twist-roundtrip",
           "antiortholattices covered by their cones are twists of their "
           "positive cone",
           aol_corpus(10),
           twist_roundtrip},
          {"katanga",
           "PBZ* chains are the antiortholattices D_n and satisfy DIST, SDM",
           [] {
             auto s        = corpus(12, {C::pbz_star});
             s.chains_only = true;
             return s;
           }(),
           katanga},
          {"merluzzo",
           "subdirectly irreducible antiortholattices with DIST and SDM are "
           "D2-D5",
           aol_corpus(7, {"DIST", "SDM"}),
           merluzzo},
          {"basis-reduction",
           "PBZ* with AOL1-AOL3 and SK satisfies DIST and SDM",
           corpus(8, {C::pbz_star}, {"AOL1", "AOL2", "AOL3", "SK"}),
           basis_reduction},
          {"disjointness",
           "PBZ* with AOL1-AOL3 and SK: a ^ b = 0 implies a = 0 or b = 0",
           corpus(8, {C::pbz_star}, {"AOL1", "AOL2", "AOL3", "SK"}),
           disjointness},
          {"scucca",
           "PBZ*: the horizontal-sum conditions hold iff the algebra is the "
           "horizontal sum of its blocks",
           corpus(7, {C::pbz_star}),
           scucca},
          {"basics",
           "BZ-lattices satisfy the nine basic consequences",
           corpus(6, {C::bz}),
           basics},
          {"ammarolla-tomtom",
           "C(p), the positive cone, ~, D(p) and E(p) on subdirectly "
           "irreducible antiortholattices with DIST and SDM",
           aol_corpus(7, {"DIST", "SDM"}),
           ammarolla_tomtom},
          {"gustoso",
           "subdirectly irreducible members satisfying AOL1-AOL3 are "
           "antiortholattices covered by their cones",
           corpus(7, {C::pbz_star}, {"AOL1", "AOL2", "AOL3"}),
           gustoso},
      };
    }
  }  // namespace

  std::vector<Claim> const& registered_claims() {
    static std::vector<Claim> const claims = make_claims();
    return claims;
  }

  Claim const& claim(std::string const& name) {
    for (auto const& c : registered_claims()) {
      if (c.name == name) {
        return c;
      }
    }
    throw UnknownName("unknown claim: " + name);
  }

  ClaimReport verify_over_corpus(std::string const&     claim_name,
                                 EnumerationSpec const& spec) {
    auto const& c = claim(claim_name);
    ClaimReport r;
    r.claim = c.name;
    for (std::size_t n = spec.min_size; n <= spec.max_size; ++n) {
      for (auto const& A : enumerate_algebras(n, spec)) {
        ++r.checked;
        auto message = c.check(A);
        if (!message.empty()) {
          r.failures.push_back({A, std::move(message)});
        }
      }
    }
    return r;
  }

  ClaimReport verify_over_corpus(std::string const& claim_name) {
    return verify_over_corpus(claim_name, claim(claim_name).spec);
  }

}  // namespace pbz
