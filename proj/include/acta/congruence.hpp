// Congruences on finite acts and the congruence lattice.

#ifndef ACTA_CONGRUENCE_HPP_
#define ACTA_CONGRUENCE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <utility>   // for pair
#include <vector>    // for vector

#include "act.hpp"
#include "error.hpp"

namespace acta {

  //! An equivalence relation on the elements of an act, stored as the
  //! least element of each class.
  //!
  //! Two congruences on the same act are equal iff their label sequences
  //! are equal. Construction through the functions of this header
  //! guarantees compatibility with the action; the type itself only
  //! guarantees canonical labels.
  class Congruence {
   public:
    Congruence() = default;

    //! Canonicalizes an arbitrary class labelling (any values; equal values
    //! mean the same class) and checks compatibility with A. Throws
    //! MixedActs or NotACongruence.
    static Congruence from_partition(Act const& A, std::span<index_t const> classes);

    //! Canonicalizes a labelling without checking compatibility.
    static Congruence from_partition_unchecked(std::span<index_t const> classes);

    std::size_t size() const noexcept {
      return _labels.size();
    }

    std::vector<index_t> const& labels() const noexcept {
      return _labels;
    }

    index_t label(index_t a) const noexcept {
      return _labels[a];
    }

    bool related(index_t a, index_t b) const noexcept {
      return _labels[a] == _labels[b];
    }

    std::size_t num_classes() const noexcept;

    bool is_diagonal() const noexcept;

    bool is_full() const noexcept;

    //! True iff every pair related by that is related by this.
    bool contains(Congruence const& that) const;

    //! The classes, each sorted, ordered by least element.
    std::vector<std::vector<index_t>> classes() const;

    auto operator<=>(Congruence const&) const = default;

   private:
    explicit Congruence(std::vector<index_t> labels) : _labels(std::move(labels)) {}

    std::vector<index_t> _labels;
  };

  bool is_compatible(Act const& A, std::span<index_t const> classes);

  Congruence diagonal(Act const& A);
  Congruence diagonal(std::size_t m);
  Congruence full(Act const& A);
  Congruence full(std::size_t m);

  //! The smallest congruence containing every given pair.
  Congruence generated_congruence(Act const& A, std::span<std::pair<index_t, index_t> const> pairs);

  //! ρ(a, b), the smallest congruence relating a and b.
  Congruence principal_congruence(Act const& A, index_t a, index_t b);

  //! B x B united with the diagonal. Throws NotASubact.
  Congruence rees_congruence(Act const& A, Subact const& B);

  //! Elements with equal images are related.
  Congruence kernel(Hom const& h);

  Congruence meet(Congruence const& x, Congruence const& y);

  //! Meet of a list of congruences on an m element act; the empty meet is ∇.
  Congruence meet_all(std::size_t m, std::span<Congruence const> list);

  //! Transitive closure of the union, closed under the action.
  Congruence join(Act const& A, Congruence const& x, Congruence const& y);

  //! Default bound on |A| for all_congruences.
  inline constexpr std::size_t DEFAULT_MAX_LATTICE = 10;

  //! The bound in force: ACTA_MAX_LATTICE if set, else DEFAULT_MAX_LATTICE.
  std::size_t max_lattice_size();

  //! Every congruence on A, in ascending label order, so ∇ comes first and
  //! Δ last.
  //!
  //! Built as the join closure of the principal congruences. Throws
  //! SizeLimitExceeded when |A| exceeds the bound.
  std::vector<Congruence> all_congruences(Act const& A, std::optional<std::size_t> bound = {});

  //! ρ(a, b) for all a < b, without duplicates, ascending.
  std::vector<Congruence> principal_congruences(Act const& A);

  //! The minimal non-diagonal congruences; every one of them is principal.
  std::vector<Congruence> minimal_congruences(Act const& A);

  //! The least non-diagonal congruence if there is one.
  //!
  //! Computed as the meet of the principal congruences, which lie below
  //! every non-diagonal congruence. Absent when |A| = 1.
  std::optional<Congruence> monolith(Act const& A);

  //! σ ⊇ θ on A paired with the corresponding congruence on A/θ.
  struct CongruenceAbove {
    Congruence above;
    Congruence on_factor;
  };

  //! All congruences containing θ, computed from Con(A/θ) by lifting
  //! σ to {(a, b) | ([a], [b]) in σ}. Ordered by the lifted labels.
  std::vector<CongruenceAbove> congruences_above(Act const& A, Congruence const& theta);

  //! Positions of a smallest subfamily whose meet equals target, trying
  //! subsets by increasing size in lexicographic order.
  //!
  //! Absent when no subfamily works or when more than budget subsets
  //! would have to be tried.
  std::optional<std::vector<std::size_t>>
  smallest_subfamily_with_meet(std::span<Congruence const> family, Congruence const& target,
                               std::size_t budget = 1'000'000);

}  // namespace acta

#endif  // ACTA_CONGRUENCE_HPP_
