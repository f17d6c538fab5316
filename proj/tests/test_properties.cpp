// Exhaustive comparisons against the brute-force oracles over a bounded
// universe of monoids and acts.

#include <catch2/catch.hpp>

#include <algorithm>  // for sort, includes
#include <set>        // for set

#include "acta/classify.hpp"
#include "acta/cogeneration.hpp"
#include "acta/structure.hpp"
#include "acta/universe.hpp"
#include "oracles.hpp"

using acta::Act;
using acta::Congruence;
using acta::index_t;
using acta::Subact;

namespace {
  acta::Universe const& universe() {
    static acta::Universe const U = acta::build_universe();
    return U;
  }

  // Every act of the default universe with at most max_size elements.
  template <typename F>
  void for_each_act(std::size_t max_size, F&& f) {
    auto const& U = universe();
    for (std::size_t i = 0; i < U.monoids.size(); ++i) {
      for (auto const& A : U.acts[i]) {
        if (A.size() <= max_size) {
          f(A, i);
        }
      }
    }
  }

  oracle::Labels labels(Congruence const& c) {
    return oracle::canonical_labels(c.labels());
  }

  std::vector<oracle::Labels> labels(std::vector<Congruence> const& list) {
    std::vector<oracle::Labels> result;
    for (auto const& c : list) {
      result.push_back(labels(c));
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<std::vector<index_t>> elements(std::vector<Subact> const& list) {
    std::vector<std::vector<index_t>> result;
    for (auto const& B : list) {
      result.push_back(B.elements);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  bool has_unique_zero(Act const& A) {
    return A.monoid().zero().has_value() && A.fixed_points().size() == 1;
  }
}  // namespace

TEST_CASE("hom enumeration agrees with all maps", "[properties][hom]") {
  auto const& U = universe();
  for (std::size_t i = 0; i < U.monoids.size(); ++i) {
    for (auto const& A : U.acts[i]) {
      for (auto const& B : U.acts[i]) {
        auto const expected = oracle::homs(A, B);
        auto const homs     = acta::enumerate_homs(A, B);
        REQUIRE(homs.size() == expected.size());
        CHECK(acta::count_homs(A, B) == expected.size());
        for (std::size_t k = 0; k < homs.size(); ++k) {
          CHECK(homs[k].map == expected[k]);
          auto const& h = homs[k].map;
          CHECK(homs[k].injective == (std::set<index_t>(h.begin(), h.end()).size() == h.size()));
          CHECK(homs[k].surjective
                == (std::set<index_t>(h.begin(), h.end()).size() == B.size()));
        }
      }
    }
  }
}

TEST_CASE("congruence lattices agree with all partitions", "[properties][congruence]") {
  for_each_act(4, [](Act const& A, std::size_t) {
    auto const expected = oracle::congruences(A);
    auto const lattice  = acta::all_congruences(A);
    CHECK(labels(lattice) == expected);
    for (std::size_t k = 1; k < lattice.size(); ++k) {
      CHECK(lattice[k - 1].labels() < lattice[k].labels());
    }
    for (index_t a = 0; a < A.size(); ++a) {
      for (index_t b = 0; b < A.size(); ++b) {
        CHECK(labels(acta::principal_congruence(A, a, b)) == oracle::principal(A, a, b));
      }
    }
    for (auto const& x : lattice) {
      for (auto const& y : lattice) {
        CHECK(x.contains(y) == oracle::contains(labels(x), labels(y)));
        CHECK(labels(acta::meet(x, y)) == oracle::meet(labels(x), labels(y)));
        auto const j = acta::join(A, x, y);
        // The join is the least congruence containing both.
        for (auto const& z : expected) {
          bool const above = oracle::contains(z, labels(x)) && oracle::contains(z, labels(y));
          if (above) {
            CHECK(oracle::contains(z, labels(j)));
          }
        }
        CHECK((j.contains(x) && j.contains(y)));
      }
    }
  });
}

TEST_CASE("minimal congruences and monoliths", "[properties][congruence]") {
  for_each_act(4, [](Act const& A, std::size_t) {
    auto const all = oracle::congruences(A);
    std::vector<oracle::Labels> minimal;
    for (auto const& x : all) {
      if (oracle::is_diagonal(x)) {
        continue;
      }
      bool least = true;
      for (auto const& y : all) {
        least = least
                && (oracle::is_diagonal(y) || y == x || !oracle::contains(x, y));
      }
      if (least) {
        minimal.push_back(x);
      }
    }
    std::sort(minimal.begin(), minimal.end());
    CHECK(labels(acta::minimal_congruences(A)) == minimal);
    auto const mono = acta::monolith(A);
    CHECK(mono.has_value() == (minimal.size() == 1));
    if (mono) {
      for (auto const& y : all) {
        if (!oracle::is_diagonal(y)) {
          CHECK(oracle::contains(y, labels(*mono)));
        }
      }
    }
    CHECK(acta::is_subdirectly_irreducible(A) == (A.size() >= 2 && minimal.size() == 1));
    bool irreducible = A.size() >= 2;
    for (auto const& x : all) {
      for (auto const& y : all) {
        if (!oracle::is_diagonal(x) && !oracle::is_diagonal(y)) {
          irreducible = irreducible && !oracle::is_diagonal(oracle::meet(x, y));
        }
      }
    }
    CHECK(acta::is_irreducible(A) == irreducible);
  });
}

TEST_CASE("the homomorphism theorem and the correspondence above theta",
          "[properties][congruence]") {
  for_each_act(4, [](Act const& A, std::size_t) {
    auto const lattice = acta::all_congruences(A);
    for (auto const& theta : lattice) {
      auto const F = acta::factor_act(A, theta);
      CHECK(F.act.size() == theta.num_classes());
      CHECK(F.projection.surjective);
      CHECK(acta::kernel(F.projection) == theta);
      CHECK(acta::is_hom(A, F.act, F.projection.map));

      auto const above = acta::congruences_above(A, theta);
      std::set<std::vector<index_t>> lifted, on_factor;
      std::size_t expected = 0;
      for (auto const& sigma : lattice) {
        expected += sigma.contains(theta);
      }
      CHECK(above.size() == expected);
      CHECK(above.size() == acta::all_congruences(F.act).size());
      for (auto const& x : above) {
        CHECK(x.above.contains(theta));
        lifted.insert(x.above.labels());
        on_factor.insert(x.on_factor.labels());
        for (auto const& y : above) {
          CHECK(x.above.contains(y.above) == x.on_factor.contains(y.on_factor));
        }
      }
      CHECK(lifted.size() == above.size());
      CHECK(on_factor.size() == above.size());
    }
  });
}

TEST_CASE("cotraces agree with the meet of all kernels", "[properties][cotrace]") {
  auto const& U = universe();
  for (std::size_t i = 0; i < U.monoids.size(); ++i) {
    auto const& acts = U.acts[i];
    for (auto const& A : acts) {
      if (A.size() > 3) {
        continue;
      }
      for (auto const& C : acts) {
        std::vector<Act> const one{C};
        auto const cotr = acta::cotrace(A, one);
        CHECK(labels(cotr) == oracle::cotrace(A, one));
        CHECK(acta::is_cogenerated(one, A) == cotr.is_diagonal());
        auto const w = acta::minimal_witness(C, A);
        CHECK(w.has_value() == cotr.is_diagonal());
        if (!w) {
          continue;
        }
        // The least number of homs whose kernels meet to Δ.
        auto const homs  = oracle::homs(A, C);
        std::optional<std::size_t> least;
        for (std::size_t k = 0; k <= homs.size() && !least; ++k) {
          std::vector<std::size_t> pick(k);
          for (std::size_t t = 0; t < k; ++t) {
            pick[t] = t;
          }
          while (true) {
            oracle::Labels m = oracle::full(A.size());
            for (auto p : pick) {
              m = oracle::meet(m, oracle::kernel(homs[p]));
            }
            if (oracle::is_diagonal(m)) {
              least = k;
              break;
            }
            std::size_t t = k;
            while (t > 0 && pick[t - 1] == homs.size() - k + t - 1) {
              --t;
            }
            if (t == 0) {
              break;
            }
            ++pick[t - 1];
            for (std::size_t u = t; u < k; ++u) {
              pick[u] = pick[u - 1] + 1;
            }
          }
        }
        CHECK(w->proven_minimal);
        CHECK(w->family.size() == least);
      }
    }
  }
}

TEST_CASE("subacts, cyclic subacts and decompositions", "[properties][act]") {
  for_each_act(4, [](Act const& A, std::size_t) {
    auto const expected = oracle::subacts(A);
    CHECK(elements(acta::all_subacts(A)) == expected);
    for (index_t a = 0; a < A.size(); ++a) {
      auto const cyclic = acta::cyclic_subact(A, a).elements;
      std::vector<index_t> least;
      for (auto const& B : expected) {
        if (oracle::in(B, a) && (least.empty() || B.size() < least.size())) {
          least = B;
        }
      }
      CHECK(cyclic == least);
      for (auto const& B : expected) {
        if (oracle::in(B, a)) {
          CHECK(oracle::subset(cyclic, B));
        }
      }
    }

    auto const parts = acta::decompose_indecomposable(A);
    std::vector<index_t> covered;
    for (auto const& P : parts) {
      CHECK(acta::is_subact(A, P.elements));
      CHECK(oracle::indecomposable(A, P.elements));
      covered.insert(covered.end(), P.elements.begin(), P.elements.end());
    }
    std::sort(covered.begin(), covered.end());
    CHECK(covered == oracle::diagonal(A.size()));
  });
}

TEST_CASE("products and coproducts of pairs are acts", "[properties][act]") {
  auto const& U = universe();
  for (std::size_t i = 0; i < U.monoids.size(); ++i) {
    for (auto const& A : U.acts[i]) {
      for (auto const& B : U.acts[i]) {
        if (A.size() * B.size() > 9) {
          continue;
        }
        std::vector<Act> const pair{A, B};
        auto const P = acta::product(pair);
        CHECK(P.act.size() == A.size() * B.size());
        CHECK_NOTHROW(acta::validate_act(P.act.monoid(), P.act.table()));
        for (std::size_t k = 0; k < 2; ++k) {
          CHECK(P.projections[k].surjective);
          CHECK(acta::is_hom(P.act, pair[k], P.projections[k].map));
        }
        for (index_t x = 0; x < P.act.size(); ++x) {
          CHECK(P.encode(P.decode(x)) == x);
        }
        auto const C = acta::coproduct(pair);
        CHECK(C.act.size() == A.size() + B.size());
        CHECK_NOTHROW(acta::validate_act(C.act.monoid(), C.act.table()));
        for (std::size_t k = 0; k < 2; ++k) {
          CHECK(C.injections[k].injective);
          CHECK(acta::is_hom(pair[k], C.act, C.injections[k].map));
        }
      }
    }
  }
}

TEST_CASE("large subacts and socles agree with all congruences", "[properties][structure]") {
  for_each_act(4, [](Act const& A, std::size_t) {
    std::vector<std::vector<index_t>> large;
    for (auto const& B : acta::all_subacts(A)) {
      bool const expected = oracle::is_large(A, B.elements);
      CHECK(acta::is_large(B, A) == expected);
      if (expected) {
        large.push_back(B.elements);
      }
    }
    std::sort(large.begin(), large.end());
    CHECK(elements(acta::large_subacts(A)) == large);
    auto const soc      = acta::socle(A);
    auto const expected = oracle::socle(A);
    CHECK(soc.has_value() == !expected.empty());
    if (soc) {
      CHECK(soc->elements == expected);
    }

    if (!has_unique_zero(A)) {
      return;
    }
    auto const S = acta::s_socle(A).elements;
    std::vector<index_t> simple_union;
    for (auto const& B : acta::all_subacts(A)) {
      if (B.size() < 2) {
        continue;
      }
      auto const sub = acta::restrict_to(A, B);
      bool       theta_simple = sub.fixed_points().size() == 1;
      for (auto const& C : oracle::subacts(sub)) {
        theta_simple = theta_simple && (C.size() == 1 || C.size() == sub.size());
      }
      CHECK(acta::is_theta_simple(A, B) == theta_simple);
      if (theta_simple) {
        simple_union.insert(simple_union.end(), B.elements.begin(), B.elements.end());
      }
      if (oracle::is_large(A, B.elements)) {
        CHECK(acta::is_intersection_large(B, A));
      }
    }
    simple_union.push_back(acta::zero_element(A));
    std::sort(simple_union.begin(), simple_union.end());
    simple_union.erase(std::unique(simple_union.begin(), simple_union.end()),
                       simple_union.end());
    CHECK(S == simple_union);
    if (soc) {
      CHECK(std::includes(soc->elements.begin(), soc->elements.end(), S.begin(), S.end()));
    }
  });
}

TEST_CASE("essential monomorphisms agree with all factor maps", "[properties][structure]") {
  auto const& U = universe();
  for (std::size_t i = 0; i < U.monoids.size(); ++i) {
    for (auto const& B : U.acts[i]) {
      for (auto const& A : U.acts[i]) {
        for (auto const& h : acta::enumerate_homs(B, A)) {
          if (h.injective) {
            CHECK(acta::is_essential_mono(B, A, h) == oracle::essential_by_factors(A, h.map));
          }
        }
      }
    }
  }
}

TEST_CASE("annihilators and the classification predicates", "[properties][classify]") {
  for_each_act(4, [](Act const& A, std::size_t) {
    std::size_t const n = A.monoid().size();
    std::size_t       least_cofaithful = 0;
    std::optional<index_t> least_subgenerator;
    for (std::size_t mask = 1; mask < (std::size_t(1) << A.size()); ++mask) {
      std::vector<index_t> X;
      for (index_t a = 0; a < A.size(); ++a) {
        if (mask >> a & 1) {
          X.push_back(a);
        }
      }
      auto const r = oracle::annihilator(A, X);
      CHECK(labels(acta::right_annihilator(A, X)) == r);
      if (oracle::is_diagonal(r)) {
        if (least_cofaithful == 0 || X.size() < least_cofaithful) {
          least_cofaithful = X.size();
        }
        if (X.size() == 1 && (!least_subgenerator || X[0] < *least_subgenerator)) {
          least_subgenerator = X[0];
        }
      }
    }
    bool const faithful = least_cofaithful != 0;
    CHECK(acta::is_faithful(A) == faithful);
    auto const w = acta::cofaithful_witness(A);
    CHECK(w.has_value() == faithful);
    if (w) {
      CHECK(w->n() == least_cofaithful);
      CHECK(w->embedding.size() == n);
    }
    CHECK(acta::is_subgenerator(A) == least_subgenerator);

    // A generator maps onto S_S; search all maps for one.
    auto const S         = acta::regular_act(A.monoid());
    bool       generator = false;
    for (auto const& h : oracle::homs(A, S)) {
      generator = generator || std::set<index_t>(h.begin(), h.end()).size() == n;
    }
    CHECK(acta::is_generator(A) == generator);
  });
}
