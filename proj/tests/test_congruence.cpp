#include <cstdlib>  // for setenv, unsetenv

#include <catch2/catch.hpp>

#include "acta/congruence.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using acta::Congruence;
using acta::ErrorKind;
using acta::index_t;
using Labels = std::vector<index_t>;
using namespace fixture;

TEST_CASE("diagonal and full", "[congruence]") {
  CHECK(acta::diagonal(1) == acta::full(1));
  CHECK(acta::diagonal(points(3)).labels() == Labels{0, 1, 2});
  CHECK(acta::full(points(3)).labels() == Labels{0, 0, 0});
  CHECK(acta::diagonal(3).is_diagonal());
  CHECK(acta::full(3).is_full());
  CHECK(acta::diagonal(3).num_classes() == 3);
}

TEST_CASE("labels are canonical", "[congruence]") {
  auto A = points(4);
  auto c = Congruence::from_partition(A, Labels{7, 3, 7, 3});
  CHECK(c.labels() == Labels{0, 1, 0, 1});
  CHECK(c.classes() == std::vector<Labels>{{0, 2}, {1, 3}});
  for (index_t a = 0; a < 4; ++a) {
    CHECK(c.label(c.label(a)) == c.label(a));
  }
  CHECK(error_kind([&] { Congruence::from_partition(A, Labels{0, 0}); })
        == ErrorKind::MixedActs);
  auto S = acta::regular_act(oef());
  CHECK(error_kind([&] { Congruence::from_partition(S, Labels{0, 0, 1, 1}); })
        == ErrorKind::NotACongruence);
}

TEST_CASE("principal congruences", "[congruence]") {
  auto A = points(3);
  CHECK(acta::principal_congruence(A, 1, 1).is_diagonal());
  CHECK(acta::principal_congruence(A, 0, 1).labels() == Labels{0, 0, 2});
  auto S = acta::regular_act(oef());
  // e e = e and f e = 0 force e ~ 0 as well.
  CHECK(acta::principal_congruence(S, E, F).labels() == Labels{0, 1, 1, 1});
  CHECK(acta::principal_congruence(S, E, F).labels() == oracle::principal(S, E, F));
  CHECK(acta::principal_congruence(S, ONE, E).labels()
        == Congruence::from_partition(S, Labels{0, 1, 0, 1}).labels());
}

TEST_CASE("Rees congruences", "[congruence]") {
  auto S = acta::regular_act(chain3max());
  CHECK(acta::rees_congruence(S, acta::make_subact(S, {2})).is_diagonal());
  CHECK(acta::rees_congruence(S, acta::make_subact(S, {0, 1, 2})).is_full());
  CHECK(acta::rees_congruence(S, acta::make_subact(S, {1, 2})).labels() == Labels{0, 1, 1});
  CHECK(error_kind([&] { acta::rees_congruence(S, acta::Subact{{0}}); })
        == ErrorKind::NotASubact);
}

TEST_CASE("kernels", "[congruence]") {
  auto S = acta::regular_act(oef());
  CHECK(acta::kernel(acta::make_hom(S, S, {0, 1, 2, 3})).is_diagonal());
  auto T = theta(oef());
  CHECK(acta::kernel(acta::make_hom(S, T, {0, 0, 0, 0})).is_full());
  auto lambda_e = acta::make_hom(S, S, {E, ZERO, E, ZERO});
  CHECK(acta::kernel(lambda_e).labels() == Labels{0, 1, 0, 1});
}

TEST_CASE("meet and join", "[congruence]") {
  auto S        = acta::regular_act(oef());
  auto ker_e    = acta::kernel(acta::make_hom(S, S, {E, ZERO, E, ZERO}));
  auto ker_f    = acta::kernel(acta::make_hom(S, S, {F, ZERO, ZERO, F}));
  CHECK(acta::meet(ker_e, acta::full(S)) == ker_e);
  CHECK(acta::join(S, ker_e, acta::diagonal(S)) == ker_e);
  CHECK(acta::meet(ker_e, ker_f).is_diagonal());
  CHECK(acta::meet_all(4, std::vector<Congruence>{}).is_full());

  auto A = points(3);
  CHECK(acta::join(A, acta::principal_congruence(A, 0, 1), acta::principal_congruence(A, 1, 2))
            .is_full());
  CHECK(error_kind([&] { acta::meet(acta::diagonal(2), acta::diagonal(3)); })
        == ErrorKind::MixedActs);
  CHECK(error_kind([&] { acta::join(A, acta::diagonal(2), acta::diagonal(2)); })
        == ErrorKind::MixedActs);
}

TEST_CASE("congruence lattices", "[congruence]") {
  CHECK(acta::all_congruences(points(1)) == std::vector<Congruence>{acta::diagonal(1)});
  auto two = acta::all_congruences(points(2));
  CHECK(two == std::vector<Congruence>{acta::full(2), acta::diagonal(2)});
  auto three = acta::all_congruences(points(3));
  CHECK(three.size() == 5);
  CHECK(three.front().is_full());
  CHECK(three.back().is_diagonal());
  CHECK(acta::all_congruences(points(4)).size() == 15);
}

TEST_CASE("the lattice size guard", "[congruence]") {
  ::unsetenv("ACTA_MAX_LATTICE");
  CHECK(acta::max_lattice_size() == acta::DEFAULT_MAX_LATTICE);
  CHECK(error_kind([] { acta::all_congruences(points(11)); }) == ErrorKind::SizeLimitExceeded);
  CHECK(error_kind([] { acta::all_congruences(points(4), 3); })
        == ErrorKind::SizeLimitExceeded);
  ::setenv("ACTA_MAX_LATTICE", "3", 1);
  CHECK(acta::max_lattice_size() == 3);
  CHECK(error_kind([] { acta::all_congruences(points(4)); }) == ErrorKind::SizeLimitExceeded);
  ::unsetenv("ACTA_MAX_LATTICE");
}

TEST_CASE("monoliths", "[congruence]") {
  CHECK_FALSE(acta::monolith(points(1)));
  CHECK(acta::monolith(points(2)) == acta::full(2));
  CHECK_FALSE(acta::monolith(points(3)));
  CHECK(acta::minimal_congruences(points(3)).size() == 3);
  // ρ(1, 2) and ρ(2, 3) meet to Δ.
  CHECK_FALSE(acta::monolith(acta::regular_act(chain3max())));
  CHECK(acta::minimal_congruences(acta::regular_act(chain3max())).size() == 2);
  auto m = acta::monolith(ef0());
  CHECK_FALSE(m);
  auto S2 = acta::regular_act(semilattice2());
  CHECK(acta::monolith(S2) == acta::full(2));
}

TEST_CASE("congruences above", "[congruence]") {
  auto A   = points(3);
  auto all = acta::congruences_above(A, acta::diagonal(A));
  REQUIRE(all.size() == 5);
  for (auto const& c : all) {
    CHECK(c.above == c.on_factor);
  }
  auto top = acta::congruences_above(A, acta::full(A));
  REQUIRE(top.size() == 1);
  CHECK(top[0].above.is_full());
  CHECK(top[0].on_factor == acta::diagonal(1));

  auto rho  = acta::principal_congruence(A, 0, 1);
  auto mid  = acta::congruences_above(A, rho);
  REQUIRE(mid.size() == 2);
  std::vector<Congruence> factor;
  for (auto const& c : mid) {
    CHECK(c.above.contains(rho));
    factor.push_back(c.on_factor);
  }
  std::sort(factor.begin(), factor.end());
  CHECK(factor == acta::all_congruences(points(2)));
}

TEST_CASE("smallest subfamilies with a given meet", "[congruence]") {
  auto A     = points(3);
  auto atoms = acta::minimal_congruences(A);
  auto pick  = acta::smallest_subfamily_with_meet(atoms, acta::diagonal(A));
  REQUIRE(pick);
  CHECK(pick->size() == 2);
  CHECK_FALSE(acta::smallest_subfamily_with_meet(atoms, acta::diagonal(A), 1));
  CHECK_FALSE(acta::smallest_subfamily_with_meet(std::vector<Congruence>{atoms[0]},
                                                 acta::diagonal(A)));
}
