// Finite right acts over a finite monoid, and the constructions on them.

#ifndef ACTA_ACT_HPP_
#define ACTA_ACT_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "error.hpp"
#include "monoid.hpp"

namespace acta {

  class Congruence;

  //! A finite right act A over a monoid S.
  //!
  //! ``act(a, s)`` is a·s. Every instance satisfies a·1 = a and
  //! a·(st) = (a·s)·t, and has at least one element.
  class Act {
   public:
    //! Validates an m x n action table over M.
    //!
    //! Throws EmptyAct, Shape, EntryOutOfRange, NotUnital (witness a) or
    //! NotCompatible (witness a, s, t).
    static Act from_table(Monoid M, Table const& action, std::vector<std::string> names = {});

    Monoid const& monoid() const noexcept {
      return _monoid;
    }

    std::size_t size() const noexcept {
      return _size;
    }

    index_t act(index_t a, index_t s) const noexcept {
      return _action[a * _monoid.size() + s];
    }

    std::span<index_t const> row(index_t a) const noexcept {
      return {_action.data() + a * _monoid.size(), _monoid.size()};
    }

    std::span<index_t const> flat_table() const noexcept {
      return _action;
    }

    Table table() const;

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::string name(index_t a) const;

    //! Elements a with a·s = a for all s, ascending.
    std::vector<index_t> fixed_points() const;

    //! The fixed point, when there is exactly one.
    std::optional<index_t> zero() const;

    //! Equal monoids and equal action tables; names are ignored.
    bool operator==(Act const& that) const noexcept {
      return _size == that._size && _action == that._action && _monoid == that._monoid;
    }

   private:
    Act(Monoid M, std::size_t m, std::vector<index_t> action, std::vector<std::string> names)
        : _monoid(std::move(M)), _size(m), _action(std::move(action)), _names(std::move(names)) {}

    Monoid                   _monoid;
    std::size_t              _size;
    std::vector<index_t>     _action;
    std::vector<std::string> _names;
  };

  Act validate_act(Monoid M, Table const& action, std::vector<std::string> names = {});

  //! A subset of an act closed under the action. Elements are sorted.
  struct Subact {
    std::vector<index_t> elements;

    std::size_t size() const noexcept {
      return elements.size();
    }

    bool contains(index_t a) const;

    auto operator<=>(Subact const&) const = default;
  };

  //! Checks closure and sorts; throws NotASubact for empty or non-closed sets.
  Subact make_subact(Act const& A, std::vector<index_t> elements);

  bool is_subact(Act const& A, std::span<index_t const> elements);

  //! A map between acts commuting with the action.
  //!
  //! Only the map is stored; the acts are passed alongside wherever they
  //! are needed.
  struct Hom {
    std::vector<index_t> map;
    bool                 injective  = false;
    bool                 surjective = false;

    auto operator<=>(Hom const&) const = default;
  };

  //! Validates map as a homomorphism A -> B and fills in the flags.
  //! Throws MixedMonoids, Shape or NotAHom.
  Hom make_hom(Act const& A, Act const& B, std::vector<index_t> map);

  bool is_hom(Act const& A, Act const& B, std::span<index_t const> map);

  //! Subact of the images of a hom.
  Subact image(Act const& B, Hom const& h);

  //! S acting on itself by right multiplication.
  Act regular_act(Monoid const& M);

  //! The one element act over M.
  Act trivial_act(Monoid const& M);

  //! aS = {a·s | s in S}.
  Subact cyclic_subact(Act const& A, index_t a);

  //! Smallest subact containing the given elements (empty input not allowed).
  Subact generated_subact(Act const& A, std::span<index_t const> generators);

  //! Every subact of A, found by closing the cyclic subacts under union.
  //!
  //! Ordered by size, then lexicographically; the last entry is A itself.
  std::vector<Subact> all_subacts(Act const& A);

  //! A subact viewed as an act in its own right.
  //!
  //! Element i of the result is ``B.elements[i]``; names carry over.
  Act restrict_to(Act const& A, Subact const& B);

  //! Product of finitely many acts over one monoid.
  //!
  //! The tuple (x_0, ..., x_{k-1}) is stored at the mixed-radix index
  //! x_0 r_1 ... r_{k-1} + ... + x_{k-2} r_{k-1} + x_{k-1}, where r_i is
  //! the size of factor i, so tuples appear in lexicographic order.
  struct ProductAct {
    Act                      act;
    std::vector<std::size_t> radices;
    std::vector<Hom>         projections;

    index_t              encode(std::span<index_t const> tuple) const;
    std::vector<index_t> decode(index_t x) const;
  };

  ProductAct product(std::span<Act const> acts);

  //! Disjoint union; factor i occupies the indices starting at offsets[i].
  struct CoproductAct {
    Act                      act;
    std::vector<std::size_t> offsets;
    std::vector<Hom>         injections;
  };

  CoproductAct coproduct(std::span<Act const> acts);

  //! A/θ with its canonical surjection. Class j is the j-th class in
  //! order of least element.
  struct FactorAct {
    Act act;
    Hom projection;
  };

  //! Throws MixedActs if θ has the wrong size and NotACongruence if θ is
  //! not compatible with the action.
  FactorAct factor_act(Act const& A, Congruence const& theta);

  //! The indecomposable components of A, ordered by least element.
  std::vector<Subact> decompose_indecomposable(Act const& A);

  //! An isomorphism A -> B if there is one. Throws MixedMonoids.
  std::optional<Hom> act_isomorphism(Act const& A, Act const& B);

  bool act_isomorphic(Act const& A, Act const& B);

  enum class CanonMethod { automatic, permutations, backtrack };

  //! The lexicographically least flat action table over all relabelings of
  //! the elements of A (the monoid is not relabeled).
  //!
  //! ``automatic`` tries every permutation when |A| <= 6 and otherwise uses
  //! a backtracking search that prunes on partially built tables.
  std::vector<index_t> canonical_action_table(Act const& A,
                                              CanonMethod method = CanonMethod::automatic);

  //! A relabeled so that its table is the canonical one.
  Act canonical_form(Act const& A);

}  // namespace acta

#endif  // ACTA_ACT_HPP_
