// Finite monoids given by multiplication tables.

#ifndef ACTA_MONOID_HPP_
#define ACTA_MONOID_HPP_

#include <cstddef>   // for size_t
#include <memory>    // for shared_ptr
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "error.hpp"

namespace acta {

  using Table = std::vector<std::vector<index_t>>;

  //! An immutable finite monoid.
  //!
  //! Elements are the indices 0, ..., n - 1 and the product s * t is
  //! ``table[s][t]``. The identity is located at construction and stored
  //! explicitly, so it need not be index 0. Copies share the same table.
  class Monoid {
   public:
    //! Validates a multiplication table and locates the identity and zero.
    //!
    //! Checks are made in the order: shape, entry range, associativity,
    //! identity. Throws Error with kind Shape, EntryOutOfRange,
    //! NotAssociative (witness s, t, u) or NoIdentity.
    static Monoid from_table(Table const& table, std::vector<std::string> names = {});

    std::size_t size() const noexcept {
      return _data->n;
    }

    index_t product(index_t s, index_t t) const noexcept {
      return _data->table[s * _data->n + t];
    }

    index_t identity() const noexcept {
      return _data->identity;
    }

    std::optional<index_t> zero() const noexcept {
      return _data->zero;
    }

    //! Row-major flat table.
    std::span<index_t const> flat_table() const noexcept {
      return _data->table;
    }

    Table table() const;

    //! Display names; empty when none were given.
    std::vector<std::string> const& names() const noexcept {
      return _data->names;
    }

    //! The display name of s, or its index as a string.
    std::string name(index_t s) const;

    bool is_commutative() const noexcept;

    std::vector<index_t> idempotents() const;

    //! Equality of multiplication tables; names are ignored.
    bool operator==(Monoid const& that) const noexcept;

   private:
    struct Data {
      std::size_t              n;
      std::vector<index_t>     table;
      index_t                  identity;
      std::optional<index_t>   zero;
      std::vector<std::string> names;
    };

    explicit Monoid(std::shared_ptr<Data const> data) : _data(std::move(data)) {}

    std::shared_ptr<Data const> _data;
  };

  //! Same as Monoid::from_table.
  Monoid validate_monoid(Table const& table, std::vector<std::string> names = {});

  enum class ChainOp { min, max };

  //! The chain {1, ..., k} under min or max, optionally with an external
  //! identity adjoined as the last index.
  //!
  //! Value v is stored at index v - 1.
  Monoid chain_semilattice(std::size_t k, ChainOp op, bool adjoin_identity);

  //! The semilattice {1, 0, e, f} with ef = fe = 0, at indices 0, 1, 2, 3.
  Monoid semilattice_1oef();

  //! The lexicographically least flat table over all relabelings.
  //!
  //! Isomorphic monoids have equal canonical tables. Throws SizeLimitExceeded
  //! above 8 elements.
  std::vector<index_t> canonical_table(Monoid const& M);

  //! Relabels M so that its table equals canonical_table(M). Names are kept
  //! attached to the elements they label.
  Monoid canonical_form(Monoid const& M);

}  // namespace acta

#endif  // ACTA_MONOID_HPP_
