// Exhaustive generation of finite lattices and BZ-lattices up to
// isomorphism, counterexample search, and claims checked over the
// enumerated corpus.

#ifndef PBZ_ENUMERATE_HPP_
#define PBZ_ENUMERATE_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "pbz/algebra.hpp"
#include "pbz/axioms.hpp"
#include "pbz/isomorphism.hpp"
#include "pbz/term.hpp"

namespace pbz {

  inline constexpr std::size_t kLatticeCap = 10;

  // Bounded lattices with n elements, one per isomorphism class, sorted by
  // canonical form. Each is stored in its canonical labelling with labels
  // "0", "1" for the bounds and "e<i>" otherwise. Memoized. Throws
  // PreconditionError if n exceeds kLatticeCap.
  std::vector<BoundedLattice> const& lattices_of_size(std::size_t n);

  struct EnumerationSpec {
    std::size_t min_size = 2;
    std::size_t max_size = 6;
    // Every listed class must hold. The enumerated universe is always the
    // BZ-lattices.
    std::vector<AlgebraClass>  classes;
    std::vector<QuasiIdentity> laws;  // must all hold
    bool                       chains_only           = false;
    bool                       distributive_only     = false;
    bool                       antiortholattice_only = false;
    unsigned                   jobs                  = 1;
    // Size caps, by structural filter.
    std::size_t cap_general          = 8;
    std::size_t cap_antiortholattice = 10;
    std::size_t cap_chain            = 12;

    std::size_t cap() const;
    std::string to_string() const;
  };

  struct EnumerationStats {
    std::size_t lattices    = 0;  // lattices decorated
    std::size_t involutions = 0;  // order-reversing involutions found
    std::size_t structures  = 0;  // complete (', ~) pairs before filters
    std::size_t rejected    = 0;  // non-pseudo-Kleene involutions, filtered pairs
    std::size_t algebras    = 0;  // distinct algebras emitted

    EnumerationStats& operator+=(EnumerationStats const& that);
  };

  // All BZ-lattices of exactly n elements passing the filters, one per
  // isomorphism class, sorted by canonical form. Throws PreconditionError if
  // n exceeds the spec's cap.
  std::vector<FiniteAlgebra> enumerate_algebras(std::size_t            n,
                                                EnumerationSpec const& spec,
                                                EnumerationStats* stats
                                                = nullptr);

  // Sizes min_size..max_size in order.
  std::vector<FiniteAlgebra> enumerate_corpus(EnumerationSpec const& spec,
                                              EnumerationStats* stats
                                              = nullptr);

  struct SearchResult {
    std::optional<FiniteAlgebra> found;
    std::optional<Assignment>    counterexample;
    EnumerationStats             stats;
    std::size_t                  examined = 0;
    // Largest size searched completely; equals max_size on exhaustion.
    std::size_t     searched_up_to = 0;
    EnumerationSpec spec;

    std::string summary() const;
  };

  // Smallest algebra (by size, then canonical form) passing the spec's
  // filters and failing `target`.
  SearchResult search_counterexample(QuasiIdentity const&   target,
                                     EnumerationSpec const& spec);

  struct ClaimFailure {
    FiniteAlgebra algebra;
    std::string   message;
  };

  struct ClaimReport {
    std::string               claim;
    std::size_t               checked = 0;
    std::vector<ClaimFailure> failures;
    std::vector<std::string>  notes;

    bool ok() const noexcept {
      return failures.empty();
    }
    std::string summary() const;
  };

  struct Claim {
    std::string     name;
    std::string     description;
    EnumerationSpec spec;  // default corpus
    // Empty string when the claim holds on A, else the reason.
    std::function<std::string(FiniteAlgebra const&)> check;
  };

  std::vector<Claim> const& registered_claims();
  Claim const&              claim(std::string const& name);  // UnknownName

  // Runs a claim over the corpus described by `spec`, or by the claim's
  // default corpus.
  ClaimReport verify_over_corpus(std::string const&     claim_name,
                                 EnumerationSpec const& spec);
  ClaimReport verify_over_corpus(std::string const& claim_name);

}  // namespace pbz

#endif  // PBZ_ENUMERATE_HPP_
