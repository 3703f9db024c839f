// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status 0 iff every criterion passes, except those listed in
// kKnownFailures, which must fail exactly as described there.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pbz/axioms.hpp"
#include "pbz/catalog.hpp"
#include "pbz/congruence.hpp"
#include "pbz/constructions.hpp"
#include "pbz/enumerate.hpp"
#include "pbz/io.hpp"
#include "pbz/theory.hpp"

using namespace pbz;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void fail(std::string const& why) {
      if (pass) {
        detail.clear();
      }
      pass = false;
      detail += (detail.empty() ? "" : "; ") + why;
    }
    void note(std::string const& what) {
      if (pass) {
        detail += (detail.empty() ? "" : "; ") + what;
      }
    }
  };

  // Criterion 10 asks for a property that B4 = D2 x D2 refutes: B4
  // satisfies every identity of D2, hence AOL1-AOL3 and SK, yet a ^ a' = 0.
  // The criterion is expected to fail with exactly this witness.
  std::set<int> const kKnownFailures = {10};

  QuasiIdentity law(char const* name) {
    return named_law(name).law;
  }

  std::string count(std::size_t n, char const* what) {
    return std::to_string(n) + " " + what;
  }

  Outcome claim_outcome(std::string const& name, EnumerationSpec const& spec) {
    Outcome     o;
    auto const  r = verify_over_corpus(name, spec);
    if (r.checked == 0) {
      o.fail("empty corpus");
    }
    for (auto const& f : r.failures) {
      o.fail(f.algebra.name() + ": " + f.message);
    }
    o.note(count(r.checked, "algebras"));
    return o;
  }

  EnumerationSpec up_to(std::size_t n, std::vector<AlgebraClass> classes = {}) {
    EnumerationSpec s;
    s.max_size = n;
    s.classes  = std::move(classes);
    return s;
  }

  EnumerationSpec aol_up_to(std::size_t n) {
    EnumerationSpec s;
    s.max_size              = n;
    s.antiortholattice_only = true;
    return s;
  }

  // Subdirect irreducibility from the brute-force congruence list: exactly
  // one minimal nontrivial congruence.
  bool oracle_si(FiniteAlgebra const& A) {
    auto const                     all = oracle::congruences(A);
    std::vector<oracle::PairSet>   nontrivial;
    for (auto const& c : all) {
      if (!c.empty()) {
        nontrivial.push_back(c);
      }
    }
    auto contains = [](oracle::PairSet const& big, oracle::PairSet const& s) {
      return std::includes(big.begin(), big.end(), s.begin(), s.end());
    };
    std::size_t minimal = 0;
    for (auto const& c : nontrivial) {
      bool is_min = true;
      for (auto const& d : nontrivial) {
        if (d != c && contains(c, d)) {
          is_min = false;
        }
      }
      minimal += is_min;
    }
    return minimal == 1;
  }

  ////////////////////////////////////////////////////////////////////////

  Outcome ac1() {
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    o;
    using C       = AlgebraClass;
    // documented: D_n antiortholattices, MO2 orthomodular, O6 an
    // ortholattice that is not orthomodular
    struct Row {
      char const*         name;
      std::vector<C>      yes;
      std::vector<C>      no;
    };
    std::vector<Row> rows;
    for (int n = 2; n <= 8; ++n) {
      rows.push_back({nullptr, {C::pbz_star, C::antiortholattice}, {}});
    }
    std::vector<std::string> names = {"D2", "D3", "D4", "D5",
                                      "D6", "D7", "D8"};
    for (int n = 3; n <= 8; ++n) {
      rows[n - 2].no = {C::ortholattice};
    }
    rows.push_back({nullptr, {C::orthomodular, C::pbz_star},
                    {C::antiortholattice}});
    rows.push_back({nullptr, {C::ortholattice, C::bz},
                    {C::orthomodular, C::paraorthomodular, C::pbz_star}});
    names.push_back("MO2");
    names.push_back("O6");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto const A = catalog_get(names[i]);
      if (!validate(A.data()).ok()) {
        o.fail(names[i] + " does not validate");
      }
      if (!(parse_algebra(print_algebra(A)) == A)) {
        o.fail(names[i] + " does not reparse");
      }
      auto const r = classify(A);
      for (auto c : rows[i].yes) {
        if (!r.holds(c)) {
          o.fail(names[i] + " is not " + std::string(class_name(c)));
        }
      }
      for (auto c : rows[i].no) {
        if (r.holds(c)) {
          o.fail(names[i] + " is " + std::string(class_name(c)));
        }
      }
    }
    auto const D4 = catalog_get("D4");
    auto const sk = holds(D4, law("SK"));
    auto const one
        = holds(D4, parse_identity("x' ^ <>x <= []x' v x"));
    if (sk.holds || one.holds
        || format_assignment(D4, *one.counterexample) != "x=a") {
      o.fail("D4 does not fail SK at x=a");
    } else {
      o.note("D4 fails SK at " + format_assignment(D4, *sk.counterexample)
             + ", one-variable instance at x=a");
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    if (secs >= 1.0) {
      o.fail("took " + std::to_string(secs) + " s");
    }
    return o;
  }

  Outcome ac5() {
    auto o = claim_outcome("j-holds", aol_up_to(8));
    for (auto const& name : catalog_names()) {
      auto const A = catalog_get(name);
      if (A.size() <= 8 && is_orthomodular(A).holds) {
        if (!holds(A, law("J")).holds) {
          o.fail(name + " fails J");
        }
      }
    }
    auto const r = search_counterexample(
        law("J"), up_to(8, {AlgebraClass::pbz_star}));
    if (r.found) {
      if (!is_pbz_star(*r.found).holds || holds(*r.found, law("J")).holds) {
        o.fail("search result is not a PBZ* counterexample");
      }
      o.note("PBZ* counterexample with " + count(r.found->size(), "elements"));
    } else {
      o.note("search exhausted up to " + std::to_string(r.searched_up_to));
    }
    return o;
  }

  Outcome ac6() {
    Outcome o;
    auto    a = aol_up_to(8);
    a.laws    = {law("SDM")};
    auto ra   = search_counterexample(law("DIST"), a);
    if (!ra.found || ra.found->lattice().is_distributive()
        || !holds(*ra.found, law("SDM")).holds
        || !is_antiortholattice(*ra.found).holds) {
      o.fail("no non-distributive antiortholattice with SDM");
    } else {
      o.note("(a) size " + std::to_string(ra.found->size()));
    }
    auto b              = aol_up_to(8);
    b.distributive_only = true;
    auto rb             = search_counterexample(law("SDM"), b);
    if (!rb.found || !rb.found->lattice().is_distributive()
        || holds(*rb.found, law("SDM")).holds
        || !is_antiortholattice(*rb.found).holds) {
      o.fail("no distributive antiortholattice failing SDM");
    } else {
      o.note("(b) size " + std::to_string(rb.found->size()));
    }
    return o;
  }

  Outcome ac7() {
    auto const  s       = aol_up_to(10);
    auto        o       = claim_outcome("twist-roundtrip", s);
    std::size_t covered = 0;
    for (auto const& A : enumerate_corpus(s)) {
      auto const c = cones(A);
      std::set<Element> u(c.negative.begin(), c.negative.end());
      u.insert(c.positive.begin(), c.positive.end());
      covered += u.size() == A.size();
    }
    o.note(count(covered, "with P u N the whole universe"));
    return o;
  }

  Outcome ac8() {
    auto s        = up_to(12, {AlgebraClass::pbz_star});
    s.chains_only = true;
    auto o        = claim_outcome("katanga", s);
    for (std::size_t n = 2; n <= 12; ++n) {
      if (enumerate_algebras(n, s).size() != 1) {
        o.fail("not exactly one PBZ* chain with " + count(n, "elements"));
      }
    }
    return o;
  }

  Outcome ac9() {
    auto s = aol_up_to(7);
    s.laws = {law("DIST"), law("SDM")};
    auto o = claim_outcome("merluzzo", s);
    std::vector<std::string> hits;
    for (auto const& A : enumerate_corpus(s)) {
      if (is_subdirectly_irreducible(A)) {
        hits.push_back(std::to_string(A.size()));
      }
    }
    if (hits != std::vector<std::string>{"2", "3", "4", "5"}) {
      o.fail("s.i. sizes differ from 2, 3, 4, 5");
    }
    auto const D6 = catalog_get("D6");
    if (!holds(D6, law("DIST")).holds || !holds(D6, law("SDM")).holds) {
      o.fail("D6 fails DIST or SDM");
    }
    if (is_subdirectly_irreducible(D6) || oracle_si(D6)) {
      o.fail("D6 is subdirectly irreducible");
    } else {
      o.note("D6 not s.i.");
    }
    return o;
  }

  // Returns the outcome and whether it matches the documented failure.
  Outcome ac10(bool& as_documented) {
    auto s = up_to(8, {AlgebraClass::pbz_star});
    s.laws = {law("AOL1"), law("AOL2"), law("AOL3"), law("SK")};
    auto o = claim_outcome("basis-reduction", s);
    bool const identities = o.pass;
    auto const d          = verify_over_corpus("disjointness", s);
    as_documented         = false;
    if (!d.ok()) {
      auto const& first = d.failures.front().algebra;
      o.fail("disjointness fails on " + count(d.failures.size(), "algebras")
             + ", first " + first.name() + " " + d.failures.front().message);
      bool b4 = is_isomorphic(first, catalog_get("B4"));
      if (b4) {
        o.detail += " (isomorphic to B4); DIST and SDM "
                    + std::string(identities ? "hold" : "fail");
      }
      bool aol_ok = true;
      for (auto const& f : d.failures) {
        aol_ok = aol_ok && !is_antiortholattice(f.algebra).holds;
      }
      if (aol_ok) {
        o.detail += "; every failure has nontrivial Kleene-sharp elements";
      }
      as_documented = identities && b4 && aol_ok;
    }
    return o;
  }

  Outcome ac11() {
    Outcome o;
    auto sum = [](char const* a, std::size_t n) {
      return horizontal_sum({catalog_get(a), kleene_chain(n)});
    };
    std::vector<std::pair<FiniteAlgebra, bool>> cases = {
        {sum("B4", 3), true},  {sum("B4", 4), true}, {sum("B4", 5), true},
        {sum("B4", 6), false}, {sum("MO2", 3), true}};
    for (auto const& [A, si] : cases) {
      bool const lib = is_subdirectly_irreducible(A);
      bool const ora = oracle_si(A);
      if (lib != si || ora != si) {
        o.fail(A.name() + (si ? " is not s.i." : " is s.i."));
      }
    }
    o.note("B4+D3, B4+D4, B4+D5, MO2+D3 s.i.; B4+D6 not");
    return o;
  }

  Outcome ac13() {
    Outcome     o;
    std::size_t checked = 0;
    for (auto const& name : catalog_names()) {
      auto const A = catalog_get(name);
      if (A.size() > 6) {
        continue;
      }
      ++checked;
      std::set<oracle::PairSet> lib;
      for (auto const& c : all_congruences(A).congruences()) {
        lib.insert(c.pairs());
      }
      if (lib != oracle::congruences(A)) {
        o.fail(name + " congruences differ");
      }
    }
    o.note(count(checked, "catalog algebras"));
    return o;
  }

  Outcome ac14() {
    auto s = aol_up_to(7);
    s.laws = {law("DIST"), law("SDM")};
    auto        o  = claim_outcome("ammarolla-tomtom", s);
    std::size_t si = 0;
    for (auto const& A : enumerate_corpus(s)) {
      si += is_subdirectly_irreducible(A);
    }
    if (si == 0) {
      o.fail("no subdirectly irreducible algebras in the corpus");
    }
    o.note(count(si, "s.i. algebras"));
    return o;
  }

  Outcome ac15(std::string const& golden_path) {
    Outcome                    o;
    std::vector<FiniteAlgebra> all;
    for (auto const& name : catalog_names()) {
      all.push_back(catalog_get(name));
    }
    for (auto& A : enumerate_corpus(up_to(8))) {
      all.push_back(std::move(A));
    }
    for (auto& A : enumerate_corpus(aol_up_to(10))) {
      all.push_back(std::move(A));
    }
    for (auto const& A : all) {
      auto const B = parse_algebra(print_algebra(A));
      if (!(A == B) || A.name() != B.name()) {
        o.fail(A.name() + " does not round-trip");
      }
    }
    std::string dot;
    for (auto const& name : catalog_names()) {
      auto const A = catalog_get(name);
      auto const d = to_dot(A);
      if (d != to_dot(A)) {
        o.fail(name + " DOT differs between calls");
      }
      dot += d;
    }
    if (dot != read_file(golden_path)) {
      o.fail("catalog DOT differs from the stored output");
    }
    o.note(count(all.size(), "algebras round-tripped"));
    return o;
  }

}  // namespace

int main() {
  std::string const data = PBZ_TEST_DATA;

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
  bool ac10_documented = false;
  criteria = {
      {"catalog soundness", ac1},
      {"collapse of sharp sets",
       [] {
         return claim_outcome("collassone",
                              up_to(6, {AlgebraClass::bz_star,
                                        AlgebraClass::paraorthomodular}));
       }},
      {"paraorthomodular iff diamond-orthomodular",
       [] {
         return claim_outcome("paradia", up_to(6, {AlgebraClass::bz_star}));
       }},
      {"AOL1-AOL3 on antiortholattices",
       [] { return claim_outcome("aol-basis", aol_up_to(8)); }},
      {"separating identity J", ac5},
      {"SDM and DIST independent", ac6},
      {"twist round-trip", ac7},
      {"PBZ* chains", ac8},
      {"s.i. DIST+SDM antiortholattices", ac9},
      {"basis reduction", [&] { return ac10(ac10_documented); }},
      {"horizontal sums s.i.", ac11},
      {"blocks and horizontal sums",
       [] { return claim_outcome("scucca", up_to(7, {AlgebraClass::pbz_star})); }},
      {"congruence oracle", ac13},
      {"C, D, E relations", ac14},
      {"format round-trip", [&] { return ac15(data + "/catalog.dot"); }},
  };

  int status = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int const n = static_cast<int>(i + 1);
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "AC" << n << " " << (o.pass ? "PASS" : "FAIL")
         << " " << criteria[i].first << " [" << secs << " s]";
    if (!o.detail.empty()) {
      line << ": " << o.detail;
    }
    std::cout << line.str() << std::endl;
    bool const known = kKnownFailures.count(n) > 0;
    if (o.pass && known) {
      std::cout << "  AC" << n << " was expected to fail" << std::endl;
      status = 1;
    } else if (!o.pass && !known) {
      status = 1;
    } else if (!o.pass && n == 10 && !ac10_documented) {
      std::cout << "  AC10 failed differently than documented" << std::endl;
      status = 1;
    }
  }
  return status;
}
