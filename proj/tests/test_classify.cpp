#include <catch2/catch.hpp>

#include "acta/classify.hpp"
#include "acta/cogeneration.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using acta::Act;
using acta::Congruence;
using acta::ErrorKind;
using acta::index_t;
using acta::Subact;
using Elements = std::vector<index_t>;
using namespace fixture;

namespace {
  // K = {1, 2, 3} under min with an adjoined identity ε, as a subact of S_S.
  Act chain_k() {
    auto M = acta::chain_semilattice(3, acta::ChainOp::min, true);
    return acta::restrict_to(acta::regular_act(M), Subact{{0, 1, 2}});
  }
}  // namespace

TEST_CASE("right annihilators", "[classify]") {
  for (auto const& M : {trivial(), z2(), oef(), chain3max()}) {
    auto S = acta::regular_act(M);
    CHECK(acta::right_annihilator(S, Elements{M.identity()}).is_diagonal());
  }
  auto S = acta::regular_act(oef());
  CHECK(acta::right_annihilator(S, Elements{E, F}).is_diagonal());
  CHECK(acta::right_annihilator(S, Elements{ZERO}).is_full());
  CHECK(acta::right_annihilator(ef0(), Elements{0, 1}).is_diagonal());
  CHECK(acta::right_annihilator(ef0(), Elements{0}).labels()
        == oracle::annihilator(ef0(), {0}));
  CHECK(error_kind([&] { acta::right_annihilator(S, Elements{}); }) == ErrorKind::EmptySubset);
  CHECK(error_kind([&] { acta::right_annihilator(S, Elements{7}); })
        == ErrorKind::EntryOutOfRange);
}

TEST_CASE("faithful acts", "[classify]") {
  for (auto const& M : {trivial(), z2(), oef(), chain3max()}) {
    CHECK(acta::is_faithful(acta::regular_act(M)));
  }
  CHECK(acta::is_faithful(ef0()));
  CHECK_FALSE(acta::is_faithful(theta(oef())));
}

TEST_CASE("cofaithful witnesses", "[classify]") {
  auto S = acta::regular_act(oef());
  auto w = acta::cofaithful_witness(S);
  REQUIRE(w);
  CHECK(w->subset == Elements{ONE});
  CHECK(w->n() == 1);

  auto x = acta::cofaithful_witness(ef0());
  REQUIRE(x);
  CHECK(x->subset == Elements{0, 1});
  CHECK(x->n() == 2);
  for (index_t a = 0; a < 3; ++a) {
    CHECK_FALSE(acta::right_annihilator(ef0(), Elements{a}).is_diagonal());
  }
  REQUIRE(x->embedding.size() == 4);
  for (index_t s = 0; s < 4; ++s) {
    CHECK(x->embedding[s] == Elements{ef0().act(0, s), ef0().act(1, s)});
  }
  CHECK_FALSE(acta::cofaithful_witness(theta(oef())));
}

TEST_CASE("subgenerators", "[classify]") {
  auto S = acta::regular_act(oef());
  CHECK(acta::is_subgenerator(S) == ONE);
  CHECK_FALSE(acta::is_subgenerator(ef0()));
  auto Q = acta::coproduct(std::vector<Act>{S, theta(oef())});
  CHECK(acta::is_subgenerator(Q.act) == Q.offsets[0] + ONE);
  CHECK(acta::is_subgenerator(acta::regular_act(chain3max())) == 0u);
}

TEST_CASE("subdirectly irreducible and irreducible", "[classify]") {
  CHECK(acta::is_subdirectly_irreducible(points(2)));
  CHECK(acta::is_irreducible(points(2)));
  CHECK_FALSE(acta::is_subdirectly_irreducible(points(3)));
  CHECK_FALSE(acta::is_irreducible(points(3)));
  CHECK_FALSE(acta::is_subdirectly_irreducible(points(1)));
  CHECK_FALSE(acta::is_irreducible(points(1)));
  CHECK(acta::is_subdirectly_irreducible(acta::regular_act(semilattice2())));
}

TEST_CASE("finitely cogenerated checks", "[classify]") {
  auto trivial = acta::finitely_cogenerated_check(points(3));
  CHECK(trivial.holds);
  CHECK(trivial.trivial);

  auto A     = points(3);
  auto delta = acta::finitely_cogenerated_check(A, std::vector<Congruence>{acta::diagonal(A)});
  CHECK(delta.subfamily == std::vector<std::size_t>{0});
  CHECK_FALSE(delta.trivial);

  auto atoms = acta::finitely_cogenerated_check(A, acta::minimal_congruences(A));
  CHECK(atoms.subfamily.size() == 2);

  // Kernels of k -> min(k, m) for m = 1, 2, 3; the last is the identity.
  auto K = chain_k();
  std::vector<Congruence> kernels;
  for (index_t m = 0; m < 3; ++m) {
    std::vector<index_t> f;
    for (index_t k = 0; k < 3; ++k) {
      f.push_back(std::min(k, m));
    }
    kernels.push_back(acta::kernel(acta::make_hom(K, K, f)));
  }
  CHECK(acta::finitely_cogenerated_check(K, kernels).subfamily
        == std::vector<std::size_t>{2});

  CHECK(error_kind([&] {
          acta::finitely_cogenerated_check(A, std::vector<Congruence>{acta::full(A)});
        })
        == ErrorKind::FamilyMeetNotDiagonal);
  CHECK(error_kind([&] {
          acta::finitely_cogenerated_check(A, std::vector<Congruence>{acta::diagonal(2)});
        })
        == ErrorKind::MixedActs);
  auto bad = Congruence::from_partition_unchecked(std::vector<index_t>{0, 0, 1, 1});
  CHECK(error_kind([&] {
          acta::finitely_cogenerated_check(acta::regular_act(oef()),
                                           std::vector<Congruence>{bad});
        })
        == ErrorKind::NotACongruence);
}

TEST_CASE("finitely Rees cogenerated checks", "[classify]") {
  // On one point the empty subfamily already meets to Δ.
  auto T = theta(oef());
  CHECK(acta::finitely_rees_cogenerated_check(T, std::vector<Subact>{Subact{{0}}})
            .subfamily.empty());

  auto K = chain_k();
  std::vector<Subact> chain = {Subact{{0}}, Subact{{0, 1}}, Subact{{0, 1, 2}}};
  CHECK(acta::finitely_rees_cogenerated_check(K, chain).subfamily.size() == 1);

  // A singleton subact alone already gives Δ.
  auto A = points(3);
  CHECK(acta::finitely_rees_cogenerated_check(A, std::vector<Subact>{Subact{{0}}, Subact{{1}}})
            .subfamily.size()
        == 1);
  auto two = acta::finitely_rees_cogenerated_check(
      A, std::vector<Subact>{Subact{{0, 1}}, Subact{{1, 2}}});
  CHECK(two.subfamily.size() == 2);
  CHECK(acta::finitely_rees_cogenerated_check(A).trivial);
  CHECK(error_kind([&] {
          acta::finitely_rees_cogenerated_check(A, std::vector<Subact>{Subact{{0, 1}}});
        })
        == ErrorKind::FamilyMeetNotDiagonal);
}

TEST_CASE("classification reports", "[classify]") {
  for (auto const& M : {trivial(), z2(), oef(), chain3max()}) {
    auto c = acta::classification_report(acta::regular_act(M));
    CHECK(c.faithful);
    CHECK(c.cofaithful);
    CHECK(c.subgenerator);
    CHECK(c.generator);
  }
  auto x = acta::classification_report(ef0());
  CHECK(x.faithful);
  CHECK(x.cofaithful_n == 2u);
  CHECK_FALSE(x.subgenerator);
  CHECK_FALSE(x.generator);

  auto t = acta::classification_report(theta(oef()));
  CHECK_FALSE(t.faithful);
  CHECK_FALSE(t.cofaithful);
  CHECK_FALSE(t.subgenerator);
  CHECK_FALSE(t.generator);
  CHECK(t.finitely_cogenerated);
  CHECK(t.finitely_cogenerated_trivial);
}
