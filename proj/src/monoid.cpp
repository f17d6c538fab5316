#include "acta/monoid.hpp"

#include <algorithm>  // for next_permutation, lexicographical_compare
#include <numeric>    // for iota
#include <string>     // for to_string

namespace acta {

  Monoid Monoid::from_table(Table const& table, std::vector<std::string> names) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw Error(ErrorKind::Shape, "a monoid table must have at least one row");
    }
    for (auto const& row : table) {
      if (row.size() != n) {
        throw Error(ErrorKind::Shape, "the table must be square, found a row of length "
                                          + std::to_string(row.size()) + " in a table with "
                                          + std::to_string(n) + " rows");
      }
    }
    if (!names.empty() && names.size() != n) {
      throw Error(ErrorKind::Shape, "expected " + std::to_string(n) + " names, found "
                                        + std::to_string(names.size()));
    }
    Data data{n, {}, UNDEFINED, std::nullopt, std::move(names)};
    data.table.reserve(n * n);
    for (index_t s = 0; s < n; ++s) {
      for (index_t t = 0; t < n; ++t) {
        if (table[s][t] >= n) {
          throw Error(ErrorKind::EntryOutOfRange,
                      "entry (" + std::to_string(s) + ", " + std::to_string(t)
                          + ") = " + std::to_string(table[s][t]) + " is out of range",
                      {s, t});
        }
        data.table.push_back(table[s][t]);
      }
    }
    auto mul = [&data, n](index_t s, index_t t) { return data.table[s * n + t]; };

    for (index_t s = 0; s < n; ++s) {
      for (index_t t = 0; t < n; ++t) {
        for (index_t u = 0; u < n; ++u) {
          if (mul(mul(s, t), u) != mul(s, mul(t, u))) {
            throw Error(ErrorKind::NotAssociative,
                        "(s t) u != s (t u) for (s, t, u) = (" + std::to_string(s) + ", "
                            + std::to_string(t) + ", " + std::to_string(u) + ")",
                        {s, t, u});
          }
        }
      }
    }

    for (index_t e = 0; e < n; ++e) {
      bool ok = true;
      for (index_t s = 0; s < n && ok; ++s) {
        ok = mul(e, s) == s && mul(s, e) == s;
      }
      if (ok) {
        // two identities would coincide: e = e e' = e'
        data.identity = e;
        break;
      }
    }
    if (data.identity == UNDEFINED) {
      throw Error(ErrorKind::NoIdentity, "no two-sided identity");
    }

    for (index_t z = 0; z < n; ++z) {
      bool ok = true;
      for (index_t s = 0; s < n && ok; ++s) {
        ok = mul(z, s) == z && mul(s, z) == z;
      }
      if (ok) {
        data.zero = z;
        break;
      }
    }
    return Monoid(std::make_shared<Data const>(std::move(data)));
  }

  Monoid validate_monoid(Table const& table, std::vector<std::string> names) {
    return Monoid::from_table(table, std::move(names));
  }

  Table Monoid::table() const {
    std::size_t const n = size();
    Table         result(n, std::vector<index_t>(n));
    for (index_t s = 0; s < n; ++s) {
      for (index_t t = 0; t < n; ++t) {
        result[s][t] = product(s, t);
      }
    }
    return result;
  }

  std::string Monoid::name(index_t s) const {
    return _data->names.empty() ? std::to_string(s) : _data->names[s];
  }

  bool Monoid::is_commutative() const noexcept {
    for (index_t s = 0; s < size(); ++s) {
      for (index_t t = s + 1; t < size(); ++t) {
        if (product(s, t) != product(t, s)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<index_t> Monoid::idempotents() const {
    std::vector<index_t> result;
    for (index_t s = 0; s < size(); ++s) {
      if (product(s, s) == s) {
        result.push_back(s);
      }
    }
    return result;
  }

  bool Monoid::operator==(Monoid const& that) const noexcept {
    return _data == that._data || (size() == that.size() && _data->table == that._data->table);
  }

  Monoid chain_semilattice(std::size_t k, ChainOp op, bool adjoin_identity) {
    if (k == 0) {
      throw Error(ErrorKind::Shape, "a chain needs at least one element");
    }
    std::size_t const        n = k + (adjoin_identity ? 1 : 0);
    Table                    table(n, std::vector<index_t>(n));
    std::vector<std::string> names;
    for (index_t v = 0; v < k; ++v) {
      names.push_back(std::to_string(v + 1));
    }
    if (adjoin_identity) {
      names.emplace_back("ε");
    }
    for (index_t s = 0; s < n; ++s) {
      for (index_t t = 0; t < n; ++t) {
        if (s == k) {
          table[s][t] = t;
        } else if (t == k) {
          table[s][t] = s;
        } else {
          table[s][t] = op == ChainOp::min ? std::min(s, t) : std::max(s, t);
        }
      }
    }
    return Monoid::from_table(table, std::move(names));
  }

  Monoid semilattice_1oef() {
    // 1 = 0, 0 = 1, e = 2, f = 3
    Table table = {{0, 1, 2, 3}, {1, 1, 1, 1}, {2, 1, 2, 1}, {3, 1, 1, 3}};
    return Monoid::from_table(table, {"1", "0", "e", "f"});
  }

  namespace {
    // Table of M relabeled by old -> perm[old].
    std::vector<index_t> relabeled(Monoid const& M, std::vector<index_t> const& perm) {
      std::size_t const    n = M.size();
      std::vector<index_t> result(n * n);
      for (index_t s = 0; s < n; ++s) {
        for (index_t t = 0; t < n; ++t) {
          result[perm[s] * n + perm[t]] = perm[M.product(s, t)];
        }
      }
      return result;
    }

    std::vector<index_t> canonical_permutation(Monoid const& M) {
      std::size_t const n = M.size();
      if (n > 8) {
        throw Error(ErrorKind::SizeLimitExceeded,
                    "canonical forms are limited to monoids with at most 8 elements");
      }
      std::vector<index_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<index_t> best_perm  = perm;
      std::vector<index_t> best_table = relabeled(M, perm);
      while (std::next_permutation(perm.begin(), perm.end())) {
        auto candidate = relabeled(M, perm);
        if (candidate < best_table) {
          best_table = std::move(candidate);
          best_perm  = perm;
        }
      }
      return best_perm;
    }
  }  // namespace

  std::vector<index_t> canonical_table(Monoid const& M) {
    return relabeled(M, canonical_permutation(M));
  }

  Monoid canonical_form(Monoid const& M) {
    auto const        perm = canonical_permutation(M);
    auto const        flat = relabeled(M, perm);
    std::size_t const n    = M.size();
    Table             table(n, std::vector<index_t>(n));
    for (index_t s = 0; s < n; ++s) {
      for (index_t t = 0; t < n; ++t) {
        table[s][t] = flat[s * n + t];
      }
    }
    std::vector<std::string> names;
    if (!M.names().empty()) {
      names.resize(n);
      for (index_t s = 0; s < n; ++s) {
        names[perm[s]] = M.names()[s];
      }
    }
    return Monoid::from_table(table, std::move(names));
  }

}  // namespace acta
