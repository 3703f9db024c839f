// pbzlab: command-line front end to the pbz library.
//
// Exit status: 0 success or property holds, 1 property fails, 2 usage,
// parse or validation error.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pbz/axioms.hpp"
#include "pbz/catalog.hpp"
#include "pbz/congruence.hpp"
#include "pbz/constructions.hpp"
#include "pbz/enumerate.hpp"
#include "pbz/io.hpp"
#include "pbz/recipe.hpp"
#include "pbz/theory.hpp"

using namespace pbz;
using json = nlohmann::ordered_json;

namespace {

  // Signals exit status 2 with a message.
  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  enum class Format { text, structured };

  std::vector<std::string> labels_of(FiniteAlgebra const& A, Subset const& s) {
    std::vector<std::string> out;
    for (auto a : s) {
      out.push_back(A.label(a));
    }
    return out;
  }

  std::string join(std::vector<std::string> const& v,
                   std::string const&              sep = " ") {
    std::string out;
    for (auto const& s : v) {
      out += (out.empty() ? "" : sep) + s;
    }
    return out;
  }

  std::string braces(FiniteAlgebra const& A, Subset const& s) {
    return "{" + join(labels_of(A, s), ", ") + "}";
  }

  // The line of the i-th "algebra" keyword in text, 1-based.
  std::size_t algebra_line(std::string const& text, std::size_t i) {
    std::istringstream in(text);
    std::string        line;
    std::size_t        n = 0, seen = 0;
    while (std::getline(in, line)) {
      ++n;
      std::istringstream words(line);
      std::string        first;
      if (words >> first && first == "algebra" && seen++ == i) {
        return n;
      }
    }
    return 0;
  }

  std::vector<FiniteAlgebra> load_file(std::string const& path) {
    auto const text = read_file(path);
    try {
      auto const                 data = parse_algebra_data(text);
      std::vector<FiniteAlgebra> out;
      for (std::size_t i = 0; i < data.size(); ++i) {
        try {
          out.push_back(FiniteAlgebra::from_data(data[i]));
        } catch (InvalidAlgebra const& e) {
          throw UsageError(path + ":" + std::to_string(algebra_line(text, i))
                           + ": " + e.what());
        }
      }
      return out;
    } catch (FormatError const& e) {
      throw UsageError(path + ": " + e.what());
    }
  }

  // A file path, a catalog name or a construction recipe.
  FiniteAlgebra load(std::string const& arg) {
    if (std::filesystem::is_regular_file(arg)) {
      auto all = load_file(arg);
      if (all.size() != 1) {
        throw UsageError(arg + ": expected exactly one algebra, found "
                         + std::to_string(all.size()));
      }
      return std::move(all.front());
    }
    if (in_catalog(arg)) {
      return catalog_get(arg);
    }
    try {
      return build(arg);
    } catch (ParseError const& e) {
      throw UsageError("'" + arg
                       + "' is not a file, catalog name or recipe: "
                       + e.what());
    } catch (PreconditionError const& e) {
      throw UsageError(e.what());
    }
  }

  QuasiIdentity law_arg(std::string const& text) {
    try {
      return resolve_law(text);
    } catch (ParseError const& e) {
      throw UsageError("cannot parse law '" + text + "': " + e.what());
    }
  }

  AlgebraClass class_arg(std::string const& name) {
    if (auto c = class_from_name(name)) {
      return *c;
    }
    std::vector<std::string> names;
    for (auto c : all_classes()) {
      names.emplace_back(class_name(c));
    }
    throw UsageError("unknown class '" + name + "'; expected one of "
                     + join(names, ", "));
  }

  bool satisfied(FiniteAlgebra const& A, Identity const& i,
                 Assignment const& env) {
    return eval(A, i.encoded_lhs, env) == eval(A, i.encoded_rhs, env);
  }

  // The least x at which some instance of q, with each variable replaced
  // by x or x', fails; the instance is described as "y := x', ...".
  std::optional<std::pair<Element, std::string>>
  one_variable_failure(FiniteAlgebra const& A, QuasiIdentity const& q) {
    auto const        vars = q.variables();
    std::size_t const k    = vars.size();
    for (Element e = 0; e < A.size(); ++e) {
      for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        Assignment               env;
        std::vector<std::string> how;
        for (std::size_t i = 0; i < k; ++i) {
          bool const primed = mask >> (k - 1 - i) & 1;
          env[vars[i]]      = primed ? A.kleene(e) : e;
          how.push_back(vars[i] + " := x" + (primed ? "'" : ""));
        }
        bool premises = true;
        for (auto const& p : q.premises) {
          premises = premises && satisfied(A, p, env);
        }
        if (premises && !satisfied(A, q.conclusion, env)) {
          return std::make_pair(e, join(how, ", "));
        }
      }
    }
    return std::nullopt;
  }

  struct LawVerdict {
    std::string                name;
    bool                       holds;
    std::optional<std::string> witness;
    // for laws in several variables: "x=<e> with <substitution>"
    std::optional<std::string> one_variable;
  };

  LawVerdict check_law(FiniteAlgebra const& A, std::string const& text) {
    auto const q = law_arg(text);
    auto const h = holds(A, q);
    LawVerdict v{text, h.holds, std::nullopt, std::nullopt};
    if (!h.holds && h.counterexample) {
      v.witness = format_assignment(A, *h.counterexample);
      if (q.variables().size() > 1) {
        if (auto f = one_variable_failure(A, q)) {
          v.one_variable = "x=" + A.label(f->first) + " with " + f->second;
        }
      }
    }
    return v;
  }

  void print_verdict(LawVerdict const& v) {
    if (v.holds) {
      std::cout << "holds " << v.name << "\n";
      return;
    }
    std::cout << "fails " << v.name;
    if (v.witness) {
      std::cout << " at " << *v.witness;
    }
    std::cout << "\n";
    if (v.one_variable) {
      std::cout << "fails " << v.name << " at " << *v.one_variable << "\n";
    }
  }

  json verdict_json(LawVerdict const& v) {
    json j{{"law", v.name}, {"holds", v.holds}};
    if (v.witness) {
      j["witness"] = *v.witness;
    }
    if (v.one_variable) {
      j["one_variable_witness"] = *v.one_variable;
    }
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  int cmd_check(std::string const&              arg,
                std::vector<std::string> const& classes,
                std::vector<std::string> const& laws,
                Format                          format) {
    auto const A      = load(arg);
    auto const report = classify(A);
    bool       ok     = true;

    std::vector<AlgebraClass> requested;
    for (auto const& c : classes) {
      requested.push_back(class_arg(c));
    }
    std::vector<LawVerdict> verdicts;
    for (auto const& l : laws) {
      verdicts.push_back(check_law(A, l));
    }
    for (auto c : requested) {
      ok = ok && report.holds(c);
    }
    for (auto const& v : verdicts) {
      ok = ok && v.holds;
    }

    bool const is_bz  = report.holds(AlgebraClass::bz);
    bool const is_pbz = report.holds(AlgebraClass::pbz_star);
    auto const c      = cones(A);

    if (format == Format::structured) {
      json j{{"algebra", A.name()}, {"size", A.size()}};
      json cls;
      for (auto k : all_classes()) {
        auto const& r = report[k];
        json        e{{"holds", r.holds}};
        if (!r.holds) {
          e["witness"] = labels_of(A, r.witness);
          if (!r.clause.empty()) {
            e["clause"] = r.clause;
          }
        }
        cls[std::string(class_name(k))] = e;
      }
      j["classes"] = cls;
      if (is_bz) {
        auto const s = sharp_sets(A);
        j["sharp"]   = {{"kleene", labels_of(A, s.kleene)},
                        {"diamond", labels_of(A, s.diamond)},
                        {"brouwer", labels_of(A, s.brouwer)}};
      }
      j["cones"] = {{"negative", labels_of(A, c.negative)},
                    {"positive", labels_of(A, c.positive)}};
      if (is_pbz && A.size() <= 64) {
        json b = json::array();
        for (auto const& s : blocks(A)) {
          b.push_back(labels_of(A, s));
        }
        j["blocks"] = b;
      }
      json ls = json::array();
      for (auto const& v : verdicts) {
        ls.push_back(verdict_json(v));
      }
      j["laws"] = ls;
      j["ok"]   = ok;
      std::cout << j.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    std::cout << "algebra " << A.name() << " (" << A.size() << " elements)\n";
    for (auto k : all_classes()) {
      auto const& r = report[k];
      std::cout << "  " << class_name(k) << ": " << (r.holds ? "yes" : "no");
      if (!r.holds && !r.witness.empty()) {
        std::cout << " (" << join(labels_of(A, r.witness), ", ");
        if (!r.clause.empty()) {
          std::cout << "; " << r.clause;
        }
        std::cout << ")";
      }
      std::cout << "\n";
    }
    if (is_bz) {
      auto const s = sharp_sets(A);
      std::cout << "sharp: kleene " << braces(A, s.kleene) << ", diamond "
                << braces(A, s.diamond) << ", brouwer " << braces(A, s.brouwer)
                << "\n";
    }
    std::cout << "cones: negative " << braces(A, c.negative) << ", positive "
              << braces(A, c.positive) << "\n";
    if (is_pbz && A.size() <= 64) {
      std::vector<std::string> bs;
      for (auto const& s : blocks(A)) {
        bs.push_back(braces(A, s));
      }
      std::cout << "blocks: " << join(bs, " ") << "\n";
    }
    for (auto c : requested) {
      std::cout << (report.holds(c) ? "holds " : "fails ") << class_name(c)
                << "\n";
    }
    for (auto const& v : verdicts) {
      print_verdict(v);
    }
    return ok ? 0 : 1;
  }

  int cmd_eval(std::string const& arg, std::string const& law, Format format) {
    auto const A = load(arg);
    auto const v = check_law(A, law);
    if (format == Format::structured) {
      auto j       = verdict_json(v);
      j["algebra"] = A.name();
      std::cout << j.dump(2) << "\n";
    } else {
      print_verdict(v);
    }
    return v.holds ? 0 : 1;
  }

  void emit(std::string const& text, std::string const& out) {
    if (out.empty() || out == "-") {
      std::cout << text;
    } else {
      write_file(out, text);
    }
  }

  int cmd_construct(std::string const& recipe, std::string const& out) {
    emit(print_algebra(load(recipe)), out);
    return 0;
  }

  int cmd_export_dot(std::string const& arg, std::string const& out) {
    emit(to_dot(load(arg)), out);
    return 0;
  }

  struct SpecArgs {
    std::size_t              min_size = 2;
    std::size_t              max_size = 6;
    std::vector<std::string> classes;
    std::vector<std::string> laws;
    bool                     chains       = false;
    bool                     distributive = false;
    bool                     aol          = false;
    unsigned                 jobs         = 1;

    CLI::App* app = nullptr;

    void add_to(CLI::App* a) {
      app = a;
      app->add_option("--min", min_size, "Smallest size")->capture_default_str();
      app->add_option("--max", max_size, "Largest size")->capture_default_str();
      app->add_option("--class", classes, "Required class (repeatable)");
      app->add_option("--law", laws, "Required law (repeatable)");
      app->add_flag("--chains", chains, "Chains only");
      app->add_flag("--distributive", distributive, "Distributive lattices only");
      app->add_flag("--antiortholattices", aol, "Antiortholattices only");
      app->add_option("-j,--jobs", jobs, "Worker threads")
          ->check(CLI::Range(1u, 256u));
    }

    // `base` with every option given on the command line applied.
    EnumerationSpec spec(EnumerationSpec s = {}) const {
      auto given = [&](char const* name) { return app->count(name) > 0; };
      if (given("--min")) {
        s.min_size = min_size;
      }
      if (given("--max")) {
        s.max_size = max_size;
      }
      for (auto const& c : classes) {
        s.classes.push_back(class_arg(c));
      }
      for (auto const& l : laws) {
        s.laws.push_back(law_arg(l));
      }
      s.chains_only           = s.chains_only || chains;
      s.distributive_only     = s.distributive_only || distributive;
      s.antiortholattice_only = s.antiortholattice_only || aol;
      s.jobs                  = jobs;
      if (s.max_size > s.cap()) {
        throw UsageError("--max " + std::to_string(s.max_size)
                         + " exceeds the cap " + std::to_string(s.cap())
                         + " for this filter");
      }
      return s;
    }
  };

  void print_stats(EnumerationStats const& st) {
    std::cerr << "lattices " << st.lattices << ", involutions "
              << st.involutions << ", structures " << st.structures
              << ", rejected " << st.rejected << ", algebras " << st.algebras
              << "\n";
  }

  int cmd_enumerate(SpecArgs const& args, std::string const& dir) {
    auto const       spec = args.spec();
    EnumerationStats st;
    auto const       all = enumerate_corpus(spec, &st);
    if (dir.empty()) {
      for (auto const& A : all) {
        std::cout << print_algebra(A) << "\n";
      }
    } else {
      std::filesystem::create_directories(dir);
      for (auto const& A : all) {
        write_file((std::filesystem::path(dir) / (A.name() + ".pbz")).string(),
                   print_algebra(A));
      }
    }
    std::cerr << spec.to_string() << ": ";
    print_stats(st);
    return 0;
  }

  int cmd_search(std::string const& law, SpecArgs const& args,
                 std::string const& out, Format format) {
    auto const spec = args.spec();
    auto       r    = search_counterexample(law_arg(law), spec);
    if (r.found) {
      r.found->rename("counterexample");
    }
    if (format == Format::structured) {
      json j{{"law", law},
             {"spec", spec.to_string()},
             {"found", r.found.has_value()},
             {"examined", r.examined},
             {"searched_up_to", r.searched_up_to}};
      if (r.found) {
        j["witness"] = format_assignment(*r.found, *r.counterexample);
        j["algebra"] = print_algebra(*r.found);
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << r.summary() << "\n";
      if (r.found && out.empty()) {
        std::cout << print_algebra(*r.found);
      }
    }
    if (r.found && !out.empty()) {
      write_file(out, print_algebra(*r.found));
    }
    return r.found ? 1 : 0;
  }

  int cmd_verify(std::string const& name, SpecArgs const& args,
                 Format format) {
    ClaimReport r;
    try {
      r = verify_over_corpus(name, args.spec(claim(name).spec));
    } catch (UnknownName const& e) {
      throw UsageError(e.what());
    }
    if (format == Format::structured) {
      json fs = json::array();
      for (auto const& f : r.failures) {
        fs.push_back({{"algebra", print_algebra(f.algebra)},
                      {"message", f.message}});
      }
      std::cout << json{{"claim", r.claim},
                        {"checked", r.checked},
                        {"ok", r.ok()},
                        {"failures", fs}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << r.summary() << "\n";
    }
    return r.ok() ? 0 : 1;
  }

  int cmd_list() {
    std::cout << "catalog:\n";
    for (auto const& e : catalog_entries()) {
      std::cout << "  " << join(e.names, ", ") << "\n";
    }
    std::cout << "classes:\n";
    for (auto c : all_classes()) {
      std::cout << "  " << class_name(c) << "\n";
    }
    std::cout << "laws:\n";
    for (auto const& l : named_theory()) {
      std::cout << "  " << l.name << ": " << l.text << "\n";
    }
    std::cout << "claims:\n";
    for (auto const& c : registered_claims()) {
      std::cout << "  " << c.name << ": " << c.description << "\n";
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite PBZ*-lattices: checks, constructions, enumeration"};
  app.require_subcommand(1);

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::string              algebra, law, out;
  std::vector<std::string> classes, laws;
  SpecArgs                 enumerate_args, search_args, verify_args;

  auto* check = app.add_subcommand("check", "Classify an algebra");
  check->add_option("algebra", algebra, "File, catalog name or recipe")
      ->required();
  check->add_option("--class", classes, "Class that must hold (repeatable)");
  check->add_option("--identity", laws, "Law that must hold (repeatable)");

  auto* evalc = app.add_subcommand("eval", "Evaluate a law on an algebra");
  evalc->add_option("algebra", algebra, "File, catalog name or recipe")
      ->required();
  evalc->add_option("law", law, "Law text or name")->required();

  auto* construct = app.add_subcommand("construct", "Build from a recipe");
  construct->add_option("recipe", algebra, "Recipe")->required();
  construct->add_option("out", out, "Output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate BZ-lattices");
  enumerate_args.add_to(enumerate);
  enumerate->add_option("-o,--out", out, "Output directory");

  auto* search = app.add_subcommand("search", "Find a smallest counterexample");
  search->add_option("identity", law, "Law text or name")->required();
  search_args.add_to(search);
  search->add_option("-o,--out", out, "Write the counterexample here");

  auto* verify = app.add_subcommand("verify", "Check a claim over a corpus");
  verify->add_option("claim", law, "Claim name")->required();
  verify_args.add_to(verify);

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram as DOT");
  dot->add_option("algebra", algebra, "File, catalog name or recipe")
      ->required();
  dot->add_option("out", out, "Output file (default stdout)");

  auto* list = app.add_subcommand("list", "List catalog, classes, laws, claims");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  Format const format
      = format_name == "structured" ? Format::structured : Format::text;

  try {
    if (check->parsed()) {
      return cmd_check(algebra, classes, laws, format);
    } else if (evalc->parsed()) {
      return cmd_eval(algebra, law, format);
    } else if (construct->parsed()) {
      return cmd_construct(algebra, out);
    } else if (enumerate->parsed()) {
      return cmd_enumerate(enumerate_args, out);
    } else if (search->parsed()) {
      return cmd_search(law, search_args, out, format);
    } else if (verify->parsed()) {
      return cmd_verify(law, verify_args, format);
    } else if (dot->parsed()) {
      return cmd_export_dot(algebra, out);
    } else if (list->parsed()) {
      return cmd_list();
    }
  } catch (std::exception const& e) {
    std::string what = e.what();
    while (!what.empty() && what.back() == '\n') {
      what.pop_back();
    }
    std::cerr << "error: " << what << "\n";
    return 2;
  }
  return 2;
}
