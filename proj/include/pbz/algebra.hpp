// Finite bounded involution lattices with a Brouwer complement: the carrier
// of every check in this library.

#ifndef PBZ_ALGEBRA_HPP_
#define PBZ_ALGEBRA_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "pbz/lattice.hpp"

namespace pbz {

  // Uninterpreted algebra data, as read from a file or written by hand.
  struct AlgebraData {
    std::string                    name;
    std::vector<std::string>       labels;
    std::vector<std::vector<bool>> leq;  // leq[a][b] iff a <= b
    std::vector<Element>           kleene;
    std::vector<Element>           brouwer;
    Element                        zero = 0;
    Element                        one  = 0;
  };

  // Reports every violated invariant of a bounded involution lattice with a
  // total unary map, one entry per rule. Throws MalformedInput if the sizes
  // of the tables disagree or a map value is out of range.
  //
  // Rules beyond those of check_lattice_order: distinct-labels, zero-bound,
  // one-bound, kleene-involution, kleene-order-reversal.
  ValidationReport validate(AlgebraData const& raw);

  class FiniteAlgebra {
   public:
    // Throws InvalidAlgebra unless `validate(raw).ok()`.
    static FiniteAlgebra from_data(AlgebraData const& raw);

    // Throws InvalidAlgebra if kleene is not an order-reversing involution,
    // MalformedInput on size mismatch.
    FiniteAlgebra(std::string          name,
                  BoundedLattice       lattice,
                  std::vector<Element> kleene,
                  std::vector<Element> brouwer);

    std::string const& name() const noexcept {
      return _name;
    }
    void rename(std::string name) {
      _name = std::move(name);
    }
    BoundedLattice const& lattice() const noexcept {
      return _lattice;
    }
    std::size_t size() const noexcept {
      return _lattice.size();
    }
    std::vector<std::string> const& labels() const noexcept {
      return _lattice.labels();
    }
    std::string const& label(Element a) const {
      return _lattice.label(a);
    }
    Element element(std::string const& label) const {
      return _lattice.element(label);
    }

    bool leq(Element a, Element b) const noexcept {
      return _lattice.leq(a, b);
    }
    bool lt(Element a, Element b) const noexcept {
      return _lattice.lt(a, b);
    }
    Element meet(Element a, Element b) const noexcept {
      return _lattice.meet(a, b);
    }
    Element join(Element a, Element b) const noexcept {
      return _lattice.join(a, b);
    }
    Element kleene(Element a) const noexcept {
      return _kleene[a];
    }
    Element brouwer(Element a) const noexcept {
      return _brouwer[a];
    }
    // a'~
    Element box(Element a) const noexcept {
      return _brouwer[_kleene[a]];
    }
    // a~~
    Element diamond(Element a) const noexcept {
      return _brouwer[_brouwer[a]];
    }
    Element zero() const noexcept {
      return _lattice.zero();
    }
    Element one() const noexcept {
      return _lattice.one();
    }

    std::vector<Element> const& kleene_map() const noexcept {
      return _kleene;
    }
    std::vector<Element> const& brouwer_map() const noexcept {
      return _brouwer;
    }

    AlgebraData data() const;

    // Element-wise identity: same labels, order, and maps. The name is
    // ignored.
    bool operator==(FiniteAlgebra const& that) const {
      return _lattice == that._lattice && _kleene == that._kleene
             && _brouwer == that._brouwer;
    }

   private:
    std::string          _name;
    BoundedLattice       _lattice;
    std::vector<Element> _kleene;
    std::vector<Element> _brouwer;
  };

  // Checks that kleene is an order-reversing involution of the lattice.
  void check_involution(BoundedLattice const&       lattice,
                        std::vector<Element> const& kleene,
                        ValidationReport&           report);

}  // namespace pbz

#endif  // PBZ_ALGEBRA_HPP_
