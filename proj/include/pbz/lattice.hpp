// Finite bounded lattices given by their full order table.

#ifndef PBZ_LATTICE_HPP_
#define PBZ_LATTICE_HPP_

#include <cstddef>    // for size_t
#include <cstdint>    // for uint8_t, uint16_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

namespace pbz {

  // Elements are positions in the universe of their owning structure. Labels
  // are presentation only.
  using Element = std::uint16_t;
  using Subset  = std::vector<Element>;  // always sorted ascending

  // One violated structural rule, with the lexicographically least witness.
  struct Violation {
    std::string          rule;
    std::vector<Element> witness;

    bool operator==(Violation const&) const = default;
  };

  struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
    bool has(std::string const& rule) const;
    std::string to_string(std::vector<std::string> const& labels) const;
  };

  // Input data that cannot even be interpreted (size mismatch, index out of
  // range, unknown label). Distinct from InvalidAlgebra, which carries the
  // semantic violations of well-formed data.
  class MalformedInput : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An operation was applied outside its domain (e.g. sharp sets of a
  // structure that is not a BZ-lattice).
  class PreconditionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidAlgebra : public std::runtime_error {
   public:
    InvalidAlgebra(ValidationReport report, std::string const& what)
        : std::runtime_error(what), _report(std::move(report)) {}

    ValidationReport const& report() const noexcept {
      return _report;
    }

   private:
    ValidationReport _report;
  };

  // Checks that `leq` (row-major n*n) is a bounded lattice order, appending
  // one violation per failed rule. Rules: reflexivity, antisymmetry,
  // transitivity, meet-existence, join-existence, bounds.
  void check_lattice_order(std::size_t                      n,
                           std::vector<std::uint8_t> const& leq,
                           ValidationReport&                report);

  class BoundedLattice {
   public:
    // Throws InvalidAlgebra if leq is not a bounded lattice order, and
    // MalformedInput if the sizes disagree.
    BoundedLattice(std::vector<std::string> labels,
                   std::vector<std::uint8_t> leq);

    // Reflexive-transitive closure of the given cover pairs (lo, hi).
    static BoundedLattice
    from_covers(std::vector<std::string>                    labels,
                std::vector<std::pair<Element, Element>> const& covers);

    // 0 < 1 < ... < n-1
    static BoundedLattice chain(std::size_t n);
    // Boolean lattice of subsets of {0..k-1}; element i is the bitmask i.
    static BoundedLattice boolean(std::size_t atoms);

    std::size_t size() const noexcept {
      return _n;
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string const& label(Element a) const {
      return _labels[a];
    }
    // Index of the element with this label; throws MalformedInput if absent.
    Element element(std::string const& label) const;

    bool leq(Element a, Element b) const noexcept {
      return _leq[a * _n + b] != 0;
    }
    bool lt(Element a, Element b) const noexcept {
      return a != b && leq(a, b);
    }
    bool comparable(Element a, Element b) const noexcept {
      return leq(a, b) || leq(b, a);
    }
    Element meet(Element a, Element b) const noexcept {
      return _meet[a * _n + b];
    }
    Element join(Element a, Element b) const noexcept {
      return _join[a * _n + b];
    }
    Element zero() const noexcept {
      return _zero;
    }
    Element one() const noexcept {
      return _one;
    }

    std::vector<std::uint8_t> const& order_table() const noexcept {
      return _leq;
    }
    // Hasse diagram edges (lower, upper), sorted.
    std::vector<std::pair<Element, Element>> covers() const;

    std::size_t down_size(Element a) const;
    std::size_t up_size(Element a) const;

    bool is_chain() const;
    bool is_distributive() const;
    bool is_modular() const;

    // The sub-poset on `elements` (sorted), which must be a sublattice-like
    // subset that is itself a bounded lattice under the induced order.
    BoundedLattice induced(Subset const& elements) const;

    bool operator==(BoundedLattice const& that) const {
      return _n == that._n && _leq == that._leq && _labels == that._labels;
    }

   private:
    std::size_t               _n;
    std::vector<std::string>  _labels;
    std::vector<std::uint8_t> _leq;
    std::vector<Element>      _meet;
    std::vector<Element>      _join;
    Element                   _zero;
    Element                   _one;
  };

  // Default labels "0", "1", ... for anonymous structures.
  std::vector<std::string> index_labels(std::size_t n);

}  // namespace pbz

#endif  // PBZ_LATTICE_HPP_
