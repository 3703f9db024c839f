#include "pbz/term.hpp"

#include <algorithm>  // for sort, unique, find
#include <cctype>     // for isalpha, isalnum, isspace
#include <stdexcept>  // for out_of_range

namespace pbz {

  ////////////////////////////////////////////////////////////////////////
  // Term
  ////////////////////////////////////////////////////////////////////////

  Term Term::var(std::string name) {
    return Term(Op::var, std::move(name), {});
  }
  Term Term::zero() {
    return Term(Op::zero, {}, {});
  }
  Term Term::one() {
    return Term(Op::one, {}, {});
  }
  Term Term::meet(Term a, Term b) {
    return Term(Op::meet, {}, {std::move(a), std::move(b)});
  }
  Term Term::join(Term a, Term b) {
    return Term(Op::join, {}, {std::move(a), std::move(b)});
  }
  Term Term::kleene(Term a) {
    return Term(Op::kleene, {}, {std::move(a)});
  }
  Term Term::brouwer(Term a) {
    return Term(Op::brouwer, {}, {std::move(a)});
  }

  void Term::collect(std::vector<std::string>& out) const {
    if (_op == Op::var) {
      out.push_back(_name);
    }
    for (auto const& a : _args) {
      a.collect(out);
    }
  }

  std::vector<std::string> Term::variables() const {
    std::vector<std::string> result;
    collect(result);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  // context: 0 top, 1 right operand of v, 2 operand of ^ (left), 3 right
  // operand of ^, 4 operand of a postfix operator
  void Term::print(std::string& out, int context) const {
    switch (_op) {
      case Op::var:
        out += _name;
        return;
      case Op::zero:
        out += '0';
        return;
      case Op::one:
        out += '1';
        return;
      case Op::kleene:
      case Op::brouwer:
        _args[0].print(out, 4);
        out += _op == Op::kleene ? '\'' : '~';
        return;
      case Op::join: {
        bool const parens = context >= 1;
        if (parens) {
          out += '(';
        }
        _args[0].print(out, 0);
        out += " v ";
        _args[1].print(out, 1);
        if (parens) {
          out += ')';
        }
        return;
      }
      case Op::meet: {
        bool const parens = context >= 3;
        if (parens) {
          out += '(';
        }
        _args[0].print(out, 2);
        out += " ^ ";
        _args[1].print(out, 3);
        if (parens) {
          out += ')';
        }
        return;
      }
    }
  }

  std::string Term::to_string() const {
    std::string out;
    print(out, 0);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identities
  ////////////////////////////////////////////////////////////////////////

  Identity::Identity(Term l, Term r, Kind k)
      : lhs(std::move(l)),
        rhs(std::move(r)),
        kind(k),
        encoded_lhs(k == Kind::inequality ? Term::meet(lhs, rhs) : lhs),
        encoded_rhs(k == Kind::inequality ? lhs : rhs) {}

  Identity Identity::as_equation() const {
    return Identity(encoded_lhs, encoded_rhs, Kind::equation);
  }

  std::vector<std::string> Identity::variables() const {
    auto result = lhs.variables();
    auto more   = rhs.variables();
    result.insert(result.end(), more.begin(), more.end());
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  std::string Identity::to_string() const {
    return lhs.to_string() + (kind == Kind::equation ? " = " : " <= ")
           + rhs.to_string();
  }

  std::vector<std::string> QuasiIdentity::variables() const {
    auto result = conclusion.variables();
    for (auto const& p : premises) {
      auto more = p.variables();
      result.insert(result.end(), more.begin(), more.end());
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  std::string QuasiIdentity::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < premises.size(); ++i) {
      out += (i == 0 ? "" : " & ") + premises[i].to_string();
    }
    if (!premises.empty()) {
      out += " => ";
    }
    return out + conclusion.to_string();
  }

  ////////////////////////////////////////////////////////////////////////
  // Parser
  ////////////////////////////////////////////////////////////////////////

  namespace {
    enum class Tok {
      lparen,
      rparen,
      meet,
      join,
      kleene,
      brouwer,
      box,
      diamond,
      eq,
      leq,
      amp,
      implies,
      zero,
      one,
      ident,
      end
    };

    struct Token {
      Tok         kind;
      std::string text;
      std::size_t pos;
    };

    std::vector<Token> tokenize(std::string const& s) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < s.size()) {
        char const c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          continue;
        }
        auto two = [&](char const* t) {
          return s.compare(i, 2, t) == 0;
        };
        std::size_t const start = i;
        if (two("[]")) {
          out.push_back({Tok::box, "[]", start});
          i += 2;
        } else if (two("<>")) {
          out.push_back({Tok::diamond, "<>", start});
          i += 2;
        } else if (two("<=")) {
          out.push_back({Tok::leq, "<=", start});
          i += 2;
        } else if (two("=>")) {
          out.push_back({Tok::implies, "=>", start});
          i += 2;
        } else if (c == '=') {
          out.push_back({Tok::eq, "=", start});
          ++i;
        } else if (c == '(') {
          out.push_back({Tok::lparen, "(", start});
          ++i;
        } else if (c == ')') {
          out.push_back({Tok::rparen, ")", start});
          ++i;
        } else if (c == '^') {
          out.push_back({Tok::meet, "^", start});
          ++i;
        } else if (c == '\'') {
          out.push_back({Tok::kleene, "'", start});
          ++i;
        } else if (c == '~') {
          out.push_back({Tok::brouwer, "~", start});
          ++i;
        } else if (c == '&') {
          out.push_back({Tok::amp, "&", start});
          ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) {
            ++i;
          }
          std::string text = s.substr(start, i - start);
          if (text == "0") {
            out.push_back({Tok::zero, text, start});
          } else if (text == "1") {
            out.push_back({Tok::one, text, start});
          } else {
            throw ParseError("unknown symbol '" + text + "'", start);
          }
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          while (i < s.size()
                 && (std::isalnum(static_cast<unsigned char>(s[i]))
                     || s[i] == '_')) {
            ++i;
          }
          std::string text = s.substr(start, i - start);
          out.push_back({text == "v" ? Tok::join : Tok::ident, text, start});
        } else {
          throw ParseError(std::string("unknown symbol '") + c + "'", start);
        }
      }
      out.push_back({Tok::end, "", s.size()});
      return out;
    }

    class Parser {
     public:
      explicit Parser(std::string const& text) : _toks(tokenize(text)) {}

      Term term() {
        Term t = factor();
        while (peek() == Tok::join) {
          ++_at;
          t = Term::join(std::move(t), factor());
        }
        return t;
      }

      Identity identity() {
        Term lhs = term();
        if (peek() == Tok::eq) {
          ++_at;
          return Identity(std::move(lhs), term(), Identity::Kind::equation);
        }
        if (peek() == Tok::leq) {
          ++_at;
          return Identity(std::move(lhs), term(), Identity::Kind::inequality);
        }
        fail("expected '=' or '<='");
      }

      QuasiIdentity law() {
        std::vector<Identity> parts{identity()};
        while (peek() == Tok::amp) {
          ++_at;
          parts.push_back(identity());
        }
        if (peek() == Tok::implies) {
          ++_at;
          Identity conclusion = identity();
          return QuasiIdentity{std::move(parts), std::move(conclusion)};
        }
        if (parts.size() > 1) {
          fail("expected '=>' after premises");
        }
        return QuasiIdentity{{}, std::move(parts.front())};
      }

      void finish() {
        if (peek() != Tok::end) {
          fail("unexpected '" + _toks[_at].text + "'");
        }
      }

     private:
      Tok peek() const {
        return _toks[_at].kind;
      }

      [[noreturn]] void fail(std::string const& message) const {
        throw ParseError(message, _toks[_at].pos);
      }

      Term factor() {
        Term t = unary();
        while (peek() == Tok::meet) {
          ++_at;
          t = Term::meet(std::move(t), unary());
        }
        return t;
      }

      Term unary() {
        std::vector<Tok> prefixes;
        while (peek() == Tok::box || peek() == Tok::diamond) {
          prefixes.push_back(peek());
          ++_at;
        }
        Term t = atom();
        while (peek() == Tok::kleene || peek() == Tok::brouwer) {
          t = peek() == Tok::kleene ? Term::kleene(std::move(t))
                                    : Term::brouwer(std::move(t));
          ++_at;
        }
        for (auto it = prefixes.rbegin(); it != prefixes.rend(); ++it) {
          t = *it == Tok::box ? Term::box(std::move(t))
                              : Term::diamond(std::move(t));
        }
        return t;
      }

      Term atom() {
        switch (peek()) {
          case Tok::zero:
            ++_at;
            return Term::zero();
          case Tok::one:
            ++_at;
            return Term::one();
          case Tok::ident:
            return Term::var(_toks[_at++].text);
          case Tok::lparen: {
            ++_at;
            Term t = term();
            if (peek() != Tok::rparen) {
              fail("expected ')'");
            }
            ++_at;
            return t;
          }
          case Tok::end:
            fail("unexpected end of input");
          default:
            fail("unexpected '" + _toks[_at].text + "'");
        }
      }

      std::vector<Token> _toks;
      std::size_t        _at = 0;
    };
  }  // namespace

  Term parse_term(std::string const& text) {
    Parser p(text);
    Term   t = p.term();
    p.finish();
    return t;
  }

  Identity parse_identity(std::string const& text) {
    Parser   p(text);
    Identity i = p.identity();
    p.finish();
    return i;
  }

  QuasiIdentity parse_law(std::string const& text) {
    Parser        p(text);
    QuasiIdentity q = p.law();
    p.finish();
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  Element eval(FiniteAlgebra const& A, Term const& t, Assignment const& env) {
    switch (t.op()) {
      case Term::Op::var: {
        auto it = env.find(t.name());
        if (it == env.end()) {
          throw std::out_of_range("unbound variable '" + t.name() + "'");
        }
        return it->second;
      }
      case Term::Op::zero:
        return A.zero();
      case Term::Op::one:
        return A.one();
      case Term::Op::meet:
        return A.meet(eval(A, t.args()[0], env), eval(A, t.args()[1], env));
      case Term::Op::join:
        return A.join(eval(A, t.args()[0], env), eval(A, t.args()[1], env));
      case Term::Op::kleene:
        return A.kleene(eval(A, t.args()[0], env));
      case Term::Op::brouwer:
        return A.brouwer(eval(A, t.args()[0], env));
    }
    return A.zero();
  }

  CompiledTerm::CompiledTerm(Term const&                     t,
                             std::vector<std::string> const& slots) {
    auto emit = [&](auto&& self, Term const& u) -> void {
      for (auto const& a : u.args()) {
        self(self, a);
      }
      std::size_t slot = 0;
      if (u.op() == Term::Op::var) {
        auto it = std::find(slots.begin(), slots.end(), u.name());
        if (it == slots.end()) {
          throw std::out_of_range("unbound variable '" + u.name() + "'");
        }
        slot = static_cast<std::size_t>(it - slots.begin());
      }
      _code.push_back({u.op(), slot});
    };
    emit(emit, t);
    _stack.reserve(_code.size());
  }

  Element CompiledTerm::eval(FiniteAlgebra const& A,
                             Element const*       values) const {
    _stack.clear();
    for (auto const& in : _code) {
      switch (in.op) {
        case Term::Op::var:
          _stack.push_back(values[in.slot]);
          break;
        case Term::Op::zero:
          _stack.push_back(A.zero());
          break;
        case Term::Op::one:
          _stack.push_back(A.one());
          break;
        case Term::Op::kleene:
          _stack.back() = A.kleene(_stack.back());
          break;
        case Term::Op::brouwer:
          _stack.back() = A.brouwer(_stack.back());
          break;
        case Term::Op::meet: {
          Element const b = _stack.back();
          _stack.pop_back();
          _stack.back() = A.meet(_stack.back(), b);
          break;
        }
        case Term::Op::join: {
          Element const b = _stack.back();
          _stack.pop_back();
          _stack.back() = A.join(_stack.back(), b);
          break;
        }
      }
    }
    return _stack.back();
  }

  namespace {
    struct CompiledIdentity {
      CompiledIdentity(Identity const&                 i,
                       std::vector<std::string> const& slots)
          : lhs(i.lhs, slots), rhs(i.rhs, slots), kind(i.kind) {}

      bool holds(FiniteAlgebra const& A, Element const* values) const {
        Element const l = lhs.eval(A, values);
        Element const r = rhs.eval(A, values);
        return kind == Identity::Kind::equation ? l == r : A.leq(l, r);
      }

      CompiledTerm   lhs;
      CompiledTerm   rhs;
      Identity::Kind kind;
    };

    // Odometer over all assignments; the last variable turns fastest.
    template <typename F>
    HoldsResult search_assignments(FiniteAlgebra const&            A,
                                   std::vector<std::string> const& vars,
                                   F&&                             ok) {
      std::size_t const    k = vars.size();
      std::vector<Element> values(k, 0);
      while (true) {
        if (!ok(values.data())) {
          Assignment env;
          for (std::size_t i = 0; i < k; ++i) {
            env[vars[i]] = values[i];
          }
          return {false, env};
        }
        std::size_t i = k;
        while (i > 0) {
          --i;
          if (++values[i] < A.size()) {
            break;
          }
          values[i] = 0;
          if (i == 0) {
            return {};
          }
        }
        if (k == 0) {
          return {};
        }
      }
    }
  }  // namespace

  HoldsResult holds(FiniteAlgebra const& A, Identity const& i) {
    auto const       vars = i.variables();
    CompiledIdentity c(i, vars);
    return search_assignments(
        A, vars, [&](Element const* v) { return c.holds(A, v); });
  }

  HoldsResult holds(FiniteAlgebra const& A, QuasiIdentity const& q) {
    auto const                    vars = q.variables();
    std::vector<CompiledIdentity> premises;
    for (auto const& p : q.premises) {
      premises.emplace_back(p, vars);
    }
    CompiledIdentity conclusion(q.conclusion, vars);
    return search_assignments(A, vars, [&](Element const* v) {
      for (auto const& p : premises) {
        if (!p.holds(A, v)) {
          return true;
        }
      }
      return conclusion.holds(A, v);
    });
  }

  std::string format_assignment(FiniteAlgebra const& A, Assignment const& env) {
    std::string out;
    for (auto const& [name, value] : env) {
      if (!out.empty()) {
        out += ", ";
      }
      out += name + "=" + A.label(value);
    }
    return out;
  }

}  // namespace pbz
