// Faithful, cofaithful, subgenerator and generator acts, irreducibility,
// and finite (Rees) cogeneration of explicit families.

#ifndef ACTA_CLASSIFY_HPP_
#define ACTA_CLASSIFY_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "act.hpp"
#include "congruence.hpp"

namespace acta {

  //! R_S(X) = {(s, t) | a·s = a·t for all a in X} as a congruence on S_S.
  //!
  //! The one argument form uses X = A. Throws EmptySubset and
  //! EntryOutOfRange.
  Congruence right_annihilator(Act const& A);
  Congruence right_annihilator(Act const& A, std::span<index_t const> subset);

  //! R_S(A) = Δ.
  bool is_faithful(Act const& A);

  //! A least subset B with R_S(B) = Δ, and the injective hom
  //! s -> (b_1 s, ..., b_n s) from S_S into A^n.
  struct CofaithfulWitness {
    std::vector<index_t>              subset;
    //! embedding[s] is the tuple for s.
    std::vector<std::vector<index_t>> embedding;

    std::size_t n() const noexcept {
      return subset.size();
    }
  };

  //! Subsets are tried by increasing size, lexicographically; absent iff A
  //! is not faithful.
  std::optional<CofaithfulWitness> cofaithful_witness(Act const& A);

  //! The least a with a·s = a·t only when s = t, if any.
  std::optional<index_t> is_subgenerator(Act const& A);

  //! True iff |A| >= 2 and A has a monolith.
  bool is_subdirectly_irreducible(Act const& A);

  //! True iff |A| >= 2 and any two non-diagonal congruences meet to a
  //! non-diagonal one.
  //!
  //! Every non-diagonal congruence contains a principal one, so only
  //! principal congruences are compared.
  bool is_irreducible(Act const& A);

  struct FiniteCogenerationResult {
    bool holds = true;
    //! Set when no family was given: on a finite act the condition holds
    //! for every family, so the answer says nothing.
    bool trivial = false;
    //! Positions in the family of a smallest subfamily meeting to Δ.
    std::vector<std::size_t> subfamily;
  };

  //! Without a family the result is trivially true. With a family of
  //! congruences on A meeting to Δ, a smallest subfamily that still does.
  //! Throws FamilyMeetNotDiagonal, MixedActs, NotACongruence, and
  //! SizeLimitExceeded when the subset search runs past its budget.
  FiniteCogenerationResult finitely_cogenerated_check(Act const& A);
  FiniteCogenerationResult finitely_cogenerated_check(Act const& A,
                                                      std::span<Congruence const> family);

  //! The same for Rees congruences, given by their subacts: the meet is Δ
  //! iff the subacts intersect in at most one element. Also throws
  //! NotASubact.
  FiniteCogenerationResult finitely_rees_cogenerated_check(Act const& A);
  FiniteCogenerationResult finitely_rees_cogenerated_check(Act const& A,
                                                           std::span<Subact const> family);

  struct Classification {
    bool                                faithful = false;
    std::optional<std::vector<index_t>> cofaithful;
    std::optional<std::size_t>          cofaithful_n;
    std::optional<index_t>              subgenerator;
    bool                                generator                 = false;
    bool                                subdirectly_irreducible   = false;
    bool                                irreducible               = false;
    bool                                finitely_cogenerated      = true;
    bool                                finitely_cogenerated_trivial = true;
    bool                                finitely_rees_cogenerated = true;
    bool                                finitely_rees_cogenerated_trivial = true;
  };

  //! Every predicate, checked against generator => subgenerator =>
  //! cofaithful => faithful. Throws ChainViolation if that fails.
  Classification classification_report(Act const& A);

}  // namespace acta

#endif  // ACTA_CLASSIFY_HPP_
