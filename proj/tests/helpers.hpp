#ifndef PBZ_TESTS_HELPERS_HPP_
#define PBZ_TESTS_HELPERS_HPP_

#include <string>
#include <vector>

#include "pbz/algebra.hpp"
#include "pbz/catalog.hpp"
#include "pbz/io.hpp"

namespace testing {

  inline pbz::FiniteAlgebra cat(std::string const& name) {
    return pbz::catalog_get(name);
  }

  inline pbz::Element el(pbz::FiniteAlgebra const& A, std::string const& s) {
    return A.element(s);
  }

  inline pbz::Subset els(pbz::FiniteAlgebra const&        A,
                         std::vector<std::string> const& names) {
    pbz::Subset out;
    for (auto const& s : names) {
      out.push_back(A.element(s));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Same algebra with elements renumbered by `perm` (new index of a is
  // perm[a]).
  inline pbz::FiniteAlgebra permuted(pbz::FiniteAlgebra const&        A,
                                     std::vector<pbz::Element> const& perm) {
    std::size_t const        n = A.size();
    std::vector<std::string> labels(n);
    std::vector<std::uint8_t> leq(n * n);
    std::vector<pbz::Element> k(n), b(n);
    for (pbz::Element a = 0; a < n; ++a) {
      labels[perm[a]] = A.label(a);
      k[perm[a]]      = perm[A.kleene(a)];
      b[perm[a]]      = perm[A.brouwer(a)];
      for (pbz::Element c = 0; c < n; ++c) {
        leq[perm[a] * n + perm[c]] = A.leq(a, c);
      }
    }
    return pbz::FiniteAlgebra(A.name(),
                              pbz::BoundedLattice(labels, leq), k, b);
  }

}  // namespace testing

#endif  // PBZ_TESTS_HELPERS_HPP_
