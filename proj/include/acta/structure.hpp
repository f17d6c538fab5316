// Large and ∩-large subacts, socles, the radical and simplicity.

#ifndef ACTA_STRUCTURE_HPP_
#define ACTA_STRUCTURE_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "act.hpp"
#include "congruence.hpp"

namespace acta {

  //! True iff θ ∩ ρ_B != Δ for every non-diagonal congruence θ on A, where
  //! ρ_B is the Rees congruence of B.
  //!
  //! The condition only gets easier as θ grows and every non-diagonal θ
  //! contains some ρ(a, b), so only principal congruences are checked.
  //! Throws NotASubact.
  bool is_large(Subact const& B, Act const& A);

  //! The fixed point Θ required by the zero-based notions.
  //!
  //! Throws NoZero unless the monoid has a zero and A has exactly one
  //! fixed point.
  index_t zero_element(Act const& A);

  //! True iff B ∩ C != {Θ} for every subact C != {Θ}. Throws NoZero,
  //! NotASubact, and NonZeroRequired when B = {Θ}.
  bool is_intersection_large(Subact const& B, Act const& A);

  //! Every large subact of A, in the order of all_subacts.
  std::vector<Subact> large_subacts(Act const& A);

  //! The intersection of the large subacts, absent when it is empty.
  std::optional<Subact> socle(Act const& A);

  //! True iff A has exactly one fixed point Θ and no subacts other than A
  //! and {Θ}.
  bool is_theta_simple(Act const& A);
  bool is_theta_simple(Act const& A, Subact const& B);

  //! True iff A has no proper subacts.
  bool is_simple(Act const& A);
  bool is_simple(Act const& A, Subact const& B);

  //! The θ-simple subacts of A, in the order of all_subacts.
  std::vector<Subact> theta_simple_subacts(Act const& A);

  //! The union of the θ-simple subacts; it always contains Θ. Throws NoZero.
  Subact s_socle(Act const& A);

  struct Radical {
    //! Absent when the maximal subacts have empty intersection.
    std::optional<Subact> radical;
    //! Maximal among the proper subacts.
    std::vector<Subact> maximal_subacts;
  };

  //! The intersection of the maximal subacts, or A when there are none.
  Radical radical(Act const& A);

  //! True iff every indecomposable component of A is simple.
  bool is_completely_reducible(Act const& A);

  //! Whether the injective hom h: source -> target is essential, decided as
  //! largeness of its image. Throws NotInjective.
  bool is_essential_mono(Act const& source, Act const& target, Hom const& h);

  struct StructureReport {
    std::optional<Subact> socle;
    std::optional<Subact> s_socle;  // absent without a zero
    std::optional<Subact> radical;
    std::vector<Subact>   maximal_subacts;
    std::vector<Subact>   large_subacts;
    std::vector<Subact>   theta_simple_subacts;
  };

  StructureReport structure_report(Act const& A);

}  // namespace acta

#endif  // ACTA_STRUCTURE_HPP_
