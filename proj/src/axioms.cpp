#include "pbz/axioms.hpp"

namespace pbz {

  namespace {
    // Lexicographically least a with !ok(a).
    template <typename F>
    CheckResult all_elements(FiniteAlgebra const& A, F&& ok,
                             std::string clause = {}) {
      for (Element a = 0; a < A.size(); ++a) {
        if (!ok(a)) {
          return CheckResult::fail({a}, clause);
        }
      }
      return {};
    }

    template <typename F>
    CheckResult all_pairs(FiniteAlgebra const& A, F&& ok,
                          std::string clause = {}) {
      for (Element a = 0; a < A.size(); ++a) {
        for (Element b = 0; b < A.size(); ++b) {
          if (!ok(a, b)) {
            return CheckResult::fail({a, b}, clause);
          }
        }
      }
      return {};
    }
  }  // namespace

  CheckResult is_pseudo_kleene(FiniteAlgebra const& A) {
    return all_pairs(A, [&A](Element a, Element b) {
      return A.leq(A.meet(a, A.kleene(a)), A.join(b, A.kleene(b)));
    });
  }

  CheckResult is_ortholattice(FiniteAlgebra const& A) {
    return all_elements(
        A, [&A](Element a) { return A.meet(a, A.kleene(a)) == A.zero(); });
  }

  CheckResult is_orthomodular(FiniteAlgebra const& A) {
    if (auto ol = is_ortholattice(A); !ol) {
      ol.clause = "ortholattice";
      return ol;
    }
    return all_pairs(
        A,
        [&A](Element a, Element b) {
          return !A.leq(a, b) || b == A.join(A.meet(b, A.kleene(a)), a);
        },
        "orthomodular law");
  }

  CheckResult is_paraorthomodular(FiniteAlgebra const& A) {
    return all_pairs(A, [&A](Element a, Element b) {
      return !(A.leq(a, b) && A.meet(A.kleene(a), b) == A.zero()) || a == b;
    });
  }

  CheckResult is_bz(FiniteAlgebra const& A) {
    if (auto pk = is_pseudo_kleene(A); !pk) {
      pk.clause = "pseudo-kleene";
      return pk;
    }
    if (auto r = all_elements(
            A,
            [&A](Element a) { return A.meet(a, A.brouwer(a)) == A.zero(); },
            "i");
        !r) {
      return r;
    }
    if (auto r = all_elements(
            A, [&A](Element a) { return A.leq(a, A.diamond(a)); }, "ii");
        !r) {
      return r;
    }
    if (auto r = all_pairs(
            A,
            [&A](Element a, Element b) {
              return !A.leq(a, b) || A.leq(A.brouwer(b), A.brouwer(a));
            },
            "iii");
        !r) {
      return r;
    }
    return all_elements(
        A,
        [&A](Element a) { return A.kleene(A.brouwer(a)) == A.diamond(a); },
        "iv");
  }

  CheckResult is_bz_star(FiniteAlgebra const& A) {
    return all_elements(A, [&A](Element a) {
      Element const a1 = A.kleene(a);
      return A.leq(A.brouwer(A.meet(a, a1)),
                   A.join(A.brouwer(a), A.brouwer(a1)));
    });
  }

  CheckResult is_diamond_orthomodular(FiniteAlgebra const& A) {
    return all_pairs(A, [&A](Element a, Element b) {
      Element const da = A.diamond(a);
      Element const db = A.diamond(b);
      return A.leq(A.meet(A.join(A.brouwer(a), A.meet(da, db)), da), db);
    });
  }

  CheckResult is_pbz_star(FiniteAlgebra const& A) {
    if (auto r = is_bz(A); !r) {
      r.clause = "bz " + r.clause;
      return r;
    }
    if (auto r = is_bz_star(A); !r) {
      r.clause = "bz-star";
      return r;
    }
    auto r = is_diamond_orthomodular(A);
    if (!r) {
      r.clause = "diamond-orthomodular";
    }
    return r;
  }

  CheckResult has_trivial_kleene_sharp(FiniteAlgebra const& A) {
    return all_elements(A, [&A](Element a) {
      return a == A.zero() || a == A.one()
             || A.meet(a, A.kleene(a)) != A.zero();
    });
  }

  CheckResult is_antiortholattice(FiniteAlgebra const& A) {
    if (auto r = has_trivial_kleene_sharp(A); !r) {
      r.clause = "nontrivial kleene-sharp element";
      return r;
    }
    return is_pbz_star(A);
  }

  Subset kleene_sharp(FiniteAlgebra const& A) {
    Subset result;
    for (Element a = 0; a < A.size(); ++a) {
      if (A.meet(a, A.kleene(a)) == A.zero()) {
        result.push_back(a);
      }
    }
    return result;
  }

  SharpSets sharp_sets(FiniteAlgebra const& A) {
    if (!is_bz(A)) {
      throw PreconditionError("sharp sets of '" + A.name()
                              + "' requested but it is not a BZ-lattice");
    }
    SharpSets result;
    result.kleene = kleene_sharp(A);
    for (Element a = 0; a < A.size(); ++a) {
      if (a == A.diamond(a)) {
        result.diamond.push_back(a);
      }
      if (A.join(a, A.brouwer(a)) == A.one()) {
        result.brouwer.push_back(a);
      }
    }
    return result;
  }

  Subset diamond_sharp_by_complements(FiniteAlgebra const& A) {
    Subset result;
    for (Element a = 0; a < A.size(); ++a) {
      if (A.kleene(a) == A.brouwer(a)) {
        result.push_back(a);
      }
    }
    return result;
  }

  std::vector<BasicsFailure> check_basics(FiniteAlgebra const& A) {
    if (!is_bz(A)) {
      throw PreconditionError("basic BZ arithmetic requested for '" + A.name()
                              + "', which is not a BZ-lattice");
    }
    std::vector<BasicsFailure> failures;
    auto const& L = A;
    auto one = [&](char const* clause, auto&& ok) {
      if (auto r = all_elements(L, ok); !r) {
        failures.push_back({clause, r.witness});
      }
    };
    auto two = [&](char const* clause, auto&& ok) {
      if (auto r = all_pairs(L, ok); !r) {
        failures.push_back({clause, r.witness});
      }
    };
    auto n  = [&A](Element a) { return A.brouwer(a); };
    auto k  = [&A](Element a) { return A.kleene(a); };
    one("i", [&](Element a) { return n(n(n(a))) == n(a); });
    one("ii", [&](Element a) { return A.leq(n(a), k(a)); });
    two("iii", [&](Element a, Element b) {
      return n(A.join(a, b)) == A.meet(n(a), n(b));
    });
    two("iv", [&](Element a, Element b) {
      return A.leq(A.join(n(a), n(b)), n(A.meet(a, b)));
    });
    one("v", [&](Element a) { return k(A.box(k(a))) == A.diamond(a); });
    two("vi", [&](Element a, Element b) {
      return A.box(A.meet(a, b)) == A.meet(A.box(a), A.box(b));
    });
    two("vii", [&](Element a, Element b) {
      return A.diamond(A.join(a, b)) == A.join(A.diamond(a), A.diamond(b));
    });
    two("viii", [&](Element a, Element b) {
      return A.leq(A.diamond(A.meet(a, b)),
                   A.meet(A.diamond(a), A.diamond(b)));
    });
    one("ix", [&](Element a) { return !A.leq(k(a), a) || n(a) == A.zero(); });
    return failures;
  }

  namespace {
    constexpr std::array<AlgebraClass, kClassCount> kAllClasses
        = {AlgebraClass::bounded_involution_lattice,
           AlgebraClass::pseudo_kleene,
           AlgebraClass::ortholattice,
           AlgebraClass::orthomodular,
           AlgebraClass::paraorthomodular,
           AlgebraClass::bz,
           AlgebraClass::bz_star,
           AlgebraClass::diamond_orthomodular,
           AlgebraClass::pbz_star,
           AlgebraClass::antiortholattice};

    constexpr std::array<std::string_view, kClassCount> kClassNames
        = {"bounded-involution-lattice",
           "pseudo-kleene",
           "ortholattice",
           "orthomodular",
           "paraorthomodular",
           "bz",
           "bz-star",
           "diamond-orthomodular",
           "pbz-star",
           "antiortholattice"};
  }  // namespace

  std::array<AlgebraClass, kClassCount> const& all_classes() {
    return kAllClasses;
  }

  std::string_view class_name(AlgebraClass c) {
    return kClassNames[static_cast<std::size_t>(c)];
  }

  std::optional<AlgebraClass> class_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kClassCount; ++i) {
      if (kClassNames[i] == name) {
        return kAllClasses[i];
      }
    }
    return std::nullopt;
  }

  AlgebraClassReport classify(FiniteAlgebra const& A) {
    AlgebraClassReport report;
    auto set = [&report](AlgebraClass c, CheckResult r) {
      report.verdicts[static_cast<std::size_t>(c)] = std::move(r);
    };
    // validated on construction
    set(AlgebraClass::bounded_involution_lattice, {});
    set(AlgebraClass::pseudo_kleene, is_pseudo_kleene(A));
    set(AlgebraClass::ortholattice, is_ortholattice(A));
    set(AlgebraClass::orthomodular, is_orthomodular(A));
    set(AlgebraClass::paraorthomodular, is_paraorthomodular(A));
    auto bz = is_bz(A);
    set(AlgebraClass::bz, bz);
    auto star = is_bz_star(A);
    if (!bz) {
      set(AlgebraClass::bz_star, CheckResult::fail(bz.witness, "not BZ"));
    } else {
      set(AlgebraClass::bz_star, star);
    }
    set(AlgebraClass::diamond_orthomodular, is_diamond_orthomodular(A));
    set(AlgebraClass::pbz_star, is_pbz_star(A));
    set(AlgebraClass::antiortholattice, is_antiortholattice(A));
    report.kleene_antiortholattice = has_trivial_kleene_sharp(A).holds;
    return report;
  }

}  // namespace pbz
