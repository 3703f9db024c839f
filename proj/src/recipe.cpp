#include "pbz/recipe.hpp"

#include <cctype>  // for isalnum, isspace, isdigit

#include "pbz/catalog.hpp"
#include "pbz/constructions.hpp"
#include "pbz/term.hpp"

namespace pbz {

  namespace {
    using Kind = ConstructionRecipe::Kind;

    std::optional<Kind> op_kind(std::string const& s) {
      if (s == "twist1") {
        return Kind::twist1;
      } else if (s == "twist2") {
        return Kind::twist2;
      } else if (s == "osum") {
        return Kind::ordinal_sum;
      } else if (s == "hsum") {
        return Kind::horizontal_sum;
      } else if (s == "prod") {
        return Kind::product;
      }
      return std::nullopt;
    }

    class Parser {
     public:
      explicit Parser(std::string const& text) : _s(text), _i(0) {}

      ConstructionRecipe parse() {
        auto r = expr();
        skip();
        if (_i != _s.size()) {
          throw ParseError("unexpected '" + _s.substr(_i, 1) + "'", _i);
        }
        return r;
      }

     private:
      void skip() {
        while (_i < _s.size()
               && std::isspace(static_cast<unsigned char>(_s[_i]))) {
          ++_i;
        }
      }

      bool delimiter_at(std::size_t j) const {
        return j == _s.size() || _s[j] == ',' || _s[j] == ')'
               || std::isspace(static_cast<unsigned char>(_s[j]));
      }

      void expect(char c) {
        skip();
        if (_i >= _s.size() || _s[_i] != c) {
          throw ParseError(std::string("expected '") + c + "'", _i);
        }
        ++_i;
      }

      ConstructionRecipe expr() {
        skip();
        std::size_t const start = _i;
        // Catalog names may contain punctuation; take the longest match.
        std::string best;
        for (auto const& e : catalog_entries()) {
          for (auto const& n : e.names) {
            if (n.size() > best.size() && _s.compare(_i, n.size(), n) == 0
                && delimiter_at(_i + n.size())) {
              best = n;
            }
          }
        }
        if (!best.empty()) {
          _i += best.size();
          return ConstructionRecipe::leaf(best);
        }
        while (_i < _s.size()
               && (std::isalnum(static_cast<unsigned char>(_s[_i]))
                   || _s[_i] == '_')) {
          ++_i;
        }
        std::string const word = _s.substr(start, _i - start);
        if (word.empty()) {
          throw ParseError("expected a name", start);
        }
        skip();
        bool const call = _i < _s.size() && _s[_i] == '(';
        if (word == "P" && call) {
          ++_i;
          auto inner = expr();
          expect(')');
          return ConstructionRecipe::leaf("P(" + inner.to_string() + ")");
        }
        if (auto kind = op_kind(word)) {
          if (!call) {
            throw ParseError("'" + word + "' needs arguments", _i);
          }
          ++_i;
          std::vector<ConstructionRecipe> args{expr()};
          skip();
          while (_i < _s.size() && _s[_i] == ',') {
            ++_i;
            args.push_back(expr());
            skip();
          }
          expect(')');
          std::size_t const arity = args.size();
          bool const        unary
              = *kind == Kind::twist1 || *kind == Kind::twist2;
          bool const binary
              = *kind == Kind::ordinal_sum || *kind == Kind::product;
          if ((unary && arity != 1) || (binary && arity != 2)) {
            throw ParseError("wrong number of arguments to '" + word + "'",
                             start);
          }
          return ConstructionRecipe::apply(*kind, std::move(args));
        }
        if (call) {
          throw ParseError("unknown construction '" + word + "'", start);
        }
        return ConstructionRecipe::leaf(word);
      }

      std::string const& _s;
      std::size_t        _i;
    };

    std::optional<std::size_t> suffix_number(std::string const& s,
                                             std::string const& prefix) {
      if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix)) {
        return std::nullopt;
      }
      std::size_t n = 0;
      for (std::size_t i = prefix.size(); i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
          return std::nullopt;
        }
        n = 10 * n + (s[i] - '0');
        if (n > 4096) {
          throw PreconditionError("'" + s + "' is too large");
        }
      }
      return n;
    }

    RecipeValue leaf(std::string const& name) {
      if (in_catalog(name)) {
        auto A = catalog_get(name);
        return {A.lattice(), A};
      }
      if (name.size() > 3 && name.compare(0, 2, "P(") == 0
          && name.back() == ')') {
        auto inner = evaluate(parse_recipe(name.substr(2, name.size() - 3)));
        if (!inner.algebra) {
          throw PreconditionError("P(...) needs an algebra");
        }
        return {inner.algebra->lattice().induced(
                    cones(*inner.algebra).positive),
                std::nullopt};
      }
      if (auto n = suffix_number(name, "chain")) {
        if (*n < 1) {
          throw PreconditionError("chain0 is empty");
        }
        if (*n == 1) {
          return {BoundedLattice::chain(1), std::nullopt};
        }
        auto A = kleene_chain(*n);
        return {A.lattice(), A};
      }
      if (auto n = suffix_number(name, "bool")) {
        std::size_t atoms = 0;
        while ((std::size_t(1) << atoms) < *n) {
          ++atoms;
        }
        if ((std::size_t(1) << atoms) != *n) {
          throw PreconditionError("'" + name
                                  + "': size is not a power of two");
        }
        if (atoms == 0) {
          return {BoundedLattice::boolean(0), std::nullopt};
        }
        auto A = boolean_algebra(atoms);
        return {A.lattice(), A};
      }
      if (name == "N5") {
        return {BoundedLattice::from_covers(
                    {"0", "x", "y", "z", "1"},
                    {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}),
                std::nullopt};
      }
      if (name == "M3") {
        return {BoundedLattice::from_covers(
                    {"0", "a", "b", "c", "1"},
                    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}),
                std::nullopt};
      }
      throw UnknownName("unknown name '" + name + "'");
    }

    FiniteAlgebra const& need_algebra(RecipeValue const& v,
                                      ConstructionRecipe const& r) {
      if (!v.algebra) {
        throw PreconditionError("'" + r.to_string()
                                + "' is a lattice, not an algebra");
      }
      return *v.algebra;
    }
  }  // namespace

  ConstructionRecipe parse_recipe(std::string const& text) {
    return Parser(text).parse();
  }

  RecipeValue evaluate(ConstructionRecipe const& recipe) {
    if (recipe.kind == Kind::name) {
      return leaf(recipe.name);
    }
    std::vector<RecipeValue> args;
    for (auto const& op : recipe.operands) {
      args.push_back(evaluate(op));
    }
    switch (recipe.kind) {
      case Kind::twist1:
      case Kind::twist2: {
        auto A = recipe.kind == Kind::twist1 ? twist1(args[0].lattice)
                                             : twist2(args[0].lattice);
        return {A.lattice(), A};
      }
      case Kind::ordinal_sum:
        return {ordinal_sum(args[0].lattice, args[1].lattice), std::nullopt};
      case Kind::horizontal_sum: {
        std::vector<FiniteAlgebra> summands;
        for (std::size_t i = 0; i < args.size(); ++i) {
          summands.push_back(need_algebra(args[i], recipe.operands[i]));
        }
        auto A = horizontal_sum(summands);
        return {A.lattice(), A};
      }
      case Kind::product: {
        auto A = product(need_algebra(args[0], recipe.operands[0]),
                         need_algebra(args[1], recipe.operands[1]));
        return {A.lattice(), A};
      }
      default:
        throw PreconditionError("construction '" + recipe.to_string()
                                + "' cannot be evaluated from text");
    }
  }

  FiniteAlgebra build(std::string const& text) {
    auto recipe = parse_recipe(text);
    auto value  = evaluate(recipe);
    auto A      = need_algebra(value, recipe);
    A.rename(recipe.to_string());
    return A;
  }

}  // namespace pbz
