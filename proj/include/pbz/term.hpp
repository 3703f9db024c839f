// Terms over the signature {^, v, ', ~, 0, 1}, their concrete syntax, and
// identity checking by exhaustive assignment.
//
// Concrete syntax (postfix unaries bind tightest, then prefix [] and <>,
// then ^, then v):
//
//   law      := identity ("&" identity)* "=>" identity | identity
//   identity := term ("=" | "<=") term
//   term     := factor ("v" factor)*
//   factor   := unary ("^" unary)*
//   unary    := ("[]" | "<>")* atom postfix*
//   postfix  := "'" | "~"
//   atom     := "0" | "1" | ident | "(" term ")"
//
// []t abbreviates t'~ and <>t abbreviates t~~.

#ifndef PBZ_TERM_HPP_
#define PBZ_TERM_HPP_

#include <cstddef>    // for size_t
#include <map>        // for map
#include <optional>   // for optional
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "pbz/algebra.hpp"

namespace pbz {

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& message, std::size_t position)
        : std::runtime_error(message + " at position "
                             + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  class Term {
   public:
    enum class Op { var, zero, one, meet, join, kleene, brouwer };

    static Term var(std::string name);
    static Term zero();
    static Term one();
    static Term meet(Term a, Term b);
    static Term join(Term a, Term b);
    static Term kleene(Term a);
    static Term brouwer(Term a);
    static Term box(Term a) {
      return brouwer(kleene(std::move(a)));
    }
    static Term diamond(Term a) {
      return brouwer(brouwer(std::move(a)));
    }

    Op op() const noexcept {
      return _op;
    }
    std::string const& name() const noexcept {
      return _name;
    }
    std::vector<Term> const& args() const noexcept {
      return _args;
    }

    // Sorted, without repetition.
    std::vector<std::string> variables() const;
    std::string              to_string() const;

    bool operator==(Term const&) const = default;

   private:
    Term(Op op, std::string name, std::vector<Term> args)
        : _op(op), _name(std::move(name)), _args(std::move(args)) {}

    void collect(std::vector<std::string>& out) const;
    void print(std::string& out, int context) const;

    Op                _op;
    std::string       _name;
    std::vector<Term> _args;
  };

  struct Identity {
    enum class Kind { equation, inequality };

    Identity(Term lhs, Term rhs, Kind kind = Kind::equation);

    Term lhs;
    Term rhs;
    Kind kind;
    // For an inequality t <= s, the equation t ^ s = t; otherwise lhs = rhs.
    Term encoded_lhs;
    Term encoded_rhs;

    // The identity read as the equation encoded_lhs = encoded_rhs.
    Identity as_equation() const;
    std::vector<std::string> variables() const;
    std::string              to_string() const;

    bool operator==(Identity const&) const = default;
  };

  struct QuasiIdentity {
    std::vector<Identity> premises;
    Identity              conclusion;

    std::vector<std::string> variables() const;
    std::string              to_string() const;

    bool operator==(QuasiIdentity const&) const = default;
  };

  Term          parse_term(std::string const& text);
  Identity      parse_identity(std::string const& text);
  // Accepts a plain identity as a quasi-identity with no premises.
  QuasiIdentity parse_law(std::string const& text);

  using Assignment = std::map<std::string, Element>;

  // Throws std::out_of_range on an unbound variable.
  Element eval(FiniteAlgebra const& A, Term const& t, Assignment const& env);

  // A term flattened to postfix code over variable slots, for fast repeated
  // evaluation.
  class CompiledTerm {
   public:
    // `slots` fixes the variable order; every variable of t must occur.
    CompiledTerm(Term const& t, std::vector<std::string> const& slots);

    Element eval(FiniteAlgebra const& A, Element const* values) const;

   private:
    struct Instr {
      Term::Op     op;
      std::size_t  slot;
    };
    std::vector<Instr>            _code;
    mutable std::vector<Element>  _stack;
  };

  struct HoldsResult {
    bool holds = true;
    // First failing assignment in lexicographic order, variables sorted by
    // name and the first variable most significant.
    std::optional<Assignment> counterexample;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  HoldsResult holds(FiniteAlgebra const& A, Identity const& i);
  HoldsResult holds(FiniteAlgebra const& A, QuasiIdentity const& q);
  inline HoldsResult holds_quasi(FiniteAlgebra const& A,
                                 QuasiIdentity const& q) {
    return holds(A, q);
  }

  // "x=a, y=b" using the algebra's labels.
  std::string format_assignment(FiniteAlgebra const& A, Assignment const& env);

}  // namespace pbz

#endif  // PBZ_TERM_HPP_
