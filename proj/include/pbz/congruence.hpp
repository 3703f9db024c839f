// Congruences of finite algebras: principal congruences, the whole
// congruence lattice, subdirect irreducibility, direct indecomposability,
// and the kernel relations C(p), D(p), E(p) and ~ used in the analysis of
// distributive antiortholattices.

#ifndef PBZ_CONGRUENCE_HPP_
#define PBZ_CONGRUENCE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "pbz/algebra.hpp"

namespace pbz {

  // An equivalence relation on {0, ..., n-1}, stored as one block id per
  // element. Block ids are normalised to order of first occurrence, so equal
  // relations compare equal.
  class Partition {
   public:
    explicit Partition(std::vector<std::size_t> block_of);

    static Partition identity(std::size_t n);  // Delta
    static Partition total(std::size_t n);     // nabla
    // Classes given explicitly; elements not mentioned are singletons.
    static Partition from_classes(std::size_t n,
                                  std::vector<Subset> const& classes);

    std::size_t size() const noexcept {
      return _block.size();
    }
    std::size_t block(Element a) const noexcept {
      return _block[a];
    }
    bool related(Element a, Element b) const noexcept {
      return _block[a] == _block[b];
    }
    std::size_t num_blocks() const noexcept {
      return _num_blocks;
    }
    bool is_identity() const noexcept {
      return _num_blocks == _block.size();
    }
    bool is_total() const noexcept {
      return _num_blocks <= 1;
    }
    std::vector<Subset> classes() const;
    // Related pairs (a, b) with a < b, sorted.
    std::vector<std::pair<Element, Element>> pairs() const;

    // this is contained in that
    bool refines(Partition const& that) const;
    Partition meet(Partition const& that) const;
    // Join in the lattice of equivalences (transitive closure of the union).
    Partition join(Partition const& that) const;

    std::string to_string(std::vector<std::string> const& labels) const;

    bool operator==(Partition const& that) const {
      return _block == that._block;
    }
    bool operator<(Partition const& that) const {
      return _block < that._block;
    }

   private:
    std::vector<std::size_t> _block;
    std::size_t              _num_blocks;
  };

  // A partition compatible with ^, v, ' and ~.
  using Congruence = Partition;

  bool is_congruence(FiniteAlgebra const& A, Partition const& theta);

  // Cg(a, b): closure of {(a, b)} under translations and transitivity.
  Congruence principal_congruence(FiniteAlgebra const& A, Element a,
                                  Element b);

  class CongruenceLattice {
   public:
    explicit CongruenceLattice(std::vector<Congruence> all);

    // Sorted by number of blocks (descending), then by block vector; the
    // first entry is Delta and the last is nabla.
    std::vector<Congruence> const& congruences() const& noexcept {
      return _all;
    }
    // By value on temporaries, so range-for over all_congruences(A)
    // .congruences() is safe.
    std::vector<Congruence> congruences() && {
      return std::move(_all);
    }
    std::size_t size() const noexcept {
      return _all.size();
    }
    Congruence const& bottom() const {
      return _all.front();
    }
    Congruence const& top() const {
      return _all.back();
    }
    bool contains(Congruence const& theta) const;

   private:
    std::vector<Congruence> _all;
  };

  inline constexpr std::size_t kDefaultCongruenceBound = 12;

  // Every congruence, as joins of principal congruences. Throws
  // PreconditionError if the algebra has more than `max_size` elements.
  CongruenceLattice all_congruences(FiniteAlgebra const& A,
                                    std::size_t max_size
                                    = kDefaultCongruenceBound);

  struct SubdirectReport {
    bool                      irreducible = false;
    std::optional<Congruence> monolith;
  };

  SubdirectReport subdirect_irreducibility(FiniteAlgebra const&     A,
                                           CongruenceLattice const& con);
  SubdirectReport subdirect_irreducibility(FiniteAlgebra const& A);
  inline bool is_subdirectly_irreducible(FiniteAlgebra const& A) {
    return subdirect_irreducibility(A).irreducible;
  }

  // No pair of permuting complementary congruences other than Delta and
  // nabla. A trivial algebra is not directly indecomposable.
  bool is_directly_indecomposable(FiniteAlgebra const&     A,
                                  CongruenceLattice const& con);
  bool is_directly_indecomposable(FiniteAlgebra const& A);

  struct KernelRelation {
    Partition partition;
    bool      is_congruence;
  };

  // Pairs agreeing on x^p, x'^p, x~^p, []x^p, <>x^p and <>x'^p.
  KernelRelation relation_C(FiniteAlgebra const& A, Element p);
  // Classes {0}, {1}, strictly negative, strictly positive; all other
  // elements (fixpoints of ', elements incomparable with their complement)
  // are singletons.
  KernelRelation tilde_relation(FiniteAlgebra const& A);
  // x ~ y and (x v x') ^ p = (y v y') ^ p
  KernelRelation relation_D(FiniteAlgebra const& A, Element p);
  // x ~ y and (x v x') v p = (y v y') v p
  KernelRelation relation_E(FiniteAlgebra const& A, Element p);

  // The four properties of C(p) for every p (and q).
  struct CRelationReport {
    bool                   congruence = true;    // C(p) is a congruence
    bool                   meet_of_join = true;  // C(p) & C(q) = C(p v q)
    bool                   complement_meet = true;  // C(p) & C(p') = Delta
    bool                   delta_iff_positive = true;  // C(p) = Delta iff p' <= p
    std::vector<std::string> failures;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  CRelationReport check_c_relations(FiniteAlgebra const& A);

  // Strictly positive elements are closed under meets and lie above every
  // negative element.
  struct PositiveConeReport {
    bool                     meet_closed = true;  // P+ closed under meets
    bool                     above_negative = true;  // a in P+, b in N => b < a
    std::vector<std::string> failures;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  PositiveConeReport check_positive_cone(FiniteAlgebra const& A);

  struct TomtomReport {
    std::vector<std::string> precondition_failures;
    bool                     tilde_congruence = false;
    bool                     d_congruences    = false;
    bool                     e_congruences    = false;
    bool                     d_or_e_trivial   = false;
    std::vector<std::string> failures;

    bool preconditions_hold() const noexcept {
      return precondition_failures.empty();
    }
    bool ok() const noexcept {
      return preconditions_hold() && failures.empty();
    }
  };

  // Checks the four clauses on ~, D(p) and E(p) for every p. Preconditions
  // (subdirectly irreducible antiortholattice satisfying DIST and SDM) are
  // checked and reported; the clauses are evaluated regardless.
  TomtomReport tomtom_check(FiniteAlgebra const& A);

}  // namespace pbz

#endif  // PBZ_CONGRUENCE_HPP_
