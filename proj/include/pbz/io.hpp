// The line-oriented algebra file format and DOT export.
//
//   algebra <name>
//   elements <a> <b> ...
//   covers <a> < <b> ; <b> < <c> ...
//   kleene <a>:<b> ...
//   brouwer <a>:<b> ...
//   bounds <zero> <one>
//
// '#' starts a comment. A file may hold several algebras, each starting
// with an `algebra` line. covers, kleene and brouwer may span several lines.

#ifndef PBZ_IO_HPP_
#define PBZ_IO_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <vector>     // for vector

#include "pbz/algebra.hpp"

namespace pbz {

  class FormatError : public std::runtime_error {
   public:
    FormatError(std::size_t line, std::string const& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // Syntax only; the result still has to be validated. Throws FormatError.
  std::vector<AlgebraData> parse_algebra_data(std::string const& text);

  // Parses and validates. Throws FormatError or InvalidAlgebra.
  std::vector<FiniteAlgebra> parse_algebras(std::string const& text);
  // Exactly one algebra expected.
  FiniteAlgebra parse_algebra(std::string const& text);

  // Throws MalformedInput if a label cannot be written in the format.
  std::string print_algebra(FiniteAlgebra const& A);

  std::string read_file(std::string const& path);
  void        write_file(std::string const& path, std::string const& text);

  // Hasse diagram drawn bottom to top; Kleene complement as dashed
  // undirected edges, Brouwer complement in the node labels.
  std::string to_dot(FiniteAlgebra const& A);

}  // namespace pbz

#endif  // PBZ_IO_HPP_
