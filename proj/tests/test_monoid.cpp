#include <catch2/catch.hpp>

#include "acta/monoid.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using acta::ErrorKind;
using acta::index_t;
using acta::Monoid;

TEST_CASE("trivial monoid has identity and zero 0", "[monoid]") {
  auto M = Monoid::from_table({{0}});
  CHECK(M.size() == 1);
  CHECK(M.identity() == 0);
  CHECK(M.zero() == 0u);
}

TEST_CASE("two element semilattice has its zero forced", "[monoid]") {
  auto M = fixture::semilattice2();
  CHECK(M.identity() == 0);
  CHECK(M.zero() == 1u);
}

TEST_CASE("the identity need not sit at index 0", "[monoid]") {
  auto M = Monoid::from_table({{0, 0}, {0, 1}});
  CHECK(M.identity() == 1);
  CHECK(M.zero() == 0u);
}

TEST_CASE("validation errors", "[monoid]") {
  CHECK(error_kind([] { Monoid::from_table({}); }) == ErrorKind::Shape);
  CHECK(error_kind([] { Monoid::from_table({{0, 1}, {1}}); }) == ErrorKind::Shape);
  CHECK(error_kind([] { Monoid::from_table({{0, 2}, {1, 1}}); }) == ErrorKind::EntryOutOfRange);
  CHECK(error_kind([] { Monoid::from_table({{0, 0}, {0, 0}}); }) == ErrorKind::NoIdentity);
  CHECK(error_kind([] { Monoid::from_table({{0}}, {"a", "b"}); }) == ErrorKind::Shape);
}

TEST_CASE("an associativity defect is reported with its triple", "[monoid]") {
  acta::Table const table = {{1, 0}, {0, 0}};
  try {
    Monoid::from_table(table);
    FAIL("accepted a non-associative table");
  } catch (acta::Error const& e) {
    REQUIRE(e.kind() == ErrorKind::NotAssociative);
    auto const& w = e.witness();
    REQUIRE(w.size() == 3);
    CHECK(table[table[w[0]][w[1]]][w[2]] != table[w[0]][table[w[1]][w[2]]]);
  }
}

TEST_CASE("validation accepts exactly the monoid tables, all tables up to order 3",
          "[monoid][exhaustive]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t accepted = 0;
    oracle::for_each_word(n * n, n, [&](auto const& w) {
      acta::Table t(n, std::vector<index_t>(n));
      for (index_t s = 0; s < n; ++s) {
        for (index_t u = 0; u < n; ++u) {
          t[s][u] = w[s * n + u];
        }
      }
      bool const expected = oracle::monoid_table_ok(w, n);
      bool       ok       = true;
      try {
        auto M = Monoid::from_table(t);
        for (index_t s = 0; s < n; ++s) {
          REQUIRE(M.product(M.identity(), s) == s);
          REQUIRE(M.product(s, M.identity()) == s);
          if (M.zero()) {
            REQUIRE(M.product(*M.zero(), s) == *M.zero());
            REQUIRE(M.product(s, *M.zero()) == *M.zero());
          }
        }
        if (!M.zero()) {
          for (index_t z = 0; z < n; ++z) {
            bool absorbing = true;
            for (index_t s = 0; s < n; ++s) {
              absorbing = absorbing && M.product(z, s) == z && M.product(s, z) == z;
            }
            REQUIRE_FALSE(absorbing);
          }
        }
      } catch (acta::Error const&) {
        ok = false;
      }
      REQUIRE(ok == expected);
      accepted += ok;
    });
    CHECK(accepted > 0);
  }
}

TEST_CASE("chain semilattices", "[monoid]") {
  auto trivial = acta::chain_semilattice(1, acta::ChainOp::max, false);
  CHECK(trivial.size() == 1);

  auto M = fixture::chain3max();
  CHECK(M.size() == 3);
  CHECK(M.identity() == 0);
  CHECK(M.zero() == 2u);

  auto N = acta::chain_semilattice(3, acta::ChainOp::min, true);
  REQUIRE(N.size() == 4);
  CHECK(N.identity() == 3);
  CHECK(N.zero() == 0u);
  for (index_t s = 0; s < 3; ++s) {
    for (index_t t = 0; t < 3; ++t) {
      CHECK(N.product(s, t) == std::min(s, t));
    }
  }

  for (std::size_t k = 1; k <= 6; ++k) {
    for (auto op : {acta::ChainOp::min, acta::ChainOp::max}) {
      for (bool adjoin : {false, true}) {
        auto C = acta::chain_semilattice(k, op, adjoin);
        CHECK_NOTHROW(Monoid::from_table(C.table()));
        CHECK(C.size() == k + adjoin);
      }
    }
  }
  CHECK(error_kind([] { acta::chain_semilattice(0, acta::ChainOp::max, false); })
        == ErrorKind::Shape);
}

TEST_CASE("the semilattice {1, 0, e, f}", "[monoid]") {
  using namespace fixture;
  auto M = oef();
  CHECK(M.identity() == ONE);
  CHECK(M.zero() == ZERO);
  CHECK(M.product(E, F) == ZERO);
  CHECK(M.product(F, E) == ZERO);
  CHECK(M.product(E, E) == E);
  CHECK(M.product(F, F) == F);
  CHECK(M.name(E) == "e");
  CHECK(M.is_commutative());
}

TEST_CASE("canonical tables are relabeling invariant", "[monoid][exhaustive]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& flat : oracle::monoid_classes(n)) {
      acta::Table t(n, std::vector<index_t>(n));
      for (index_t s = 0; s < n; ++s) {
        for (index_t u = 0; u < n; ++u) {
          t[s][u] = flat[s * n + u];
        }
      }
      auto const M         = Monoid::from_table(t);
      auto const canonical = acta::canonical_table(M);
      CHECK(canonical == flat);
      CHECK(acta::canonical_table(acta::canonical_form(M)) == canonical);
      for (auto const& p : oracle::permutations(n)) {
        auto const    f = oracle::flat_monoid_under(flat, n, p);
        acta::Table   r(n, std::vector<index_t>(n));
        for (index_t s = 0; s < n; ++s) {
          for (index_t u = 0; u < n; ++u) {
            r[s][u] = f[s * n + u];
          }
        }
        CHECK(acta::canonical_table(Monoid::from_table(r)) == canonical);
      }
    }
  }
}
