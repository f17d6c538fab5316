// Small named instances shared by the tests.

#ifndef ACTA_TESTS_FIXTURES_HPP_
#define ACTA_TESTS_FIXTURES_HPP_

#include "acta/act.hpp"
#include "acta/monoid.hpp"

namespace fixture {

  using acta::Act;
  using acta::index_t;
  using acta::Monoid;

  inline Monoid trivial() {
    return Monoid::from_table({{0}});
  }

  // {1, a} with aa = a; 1 at index 0.
  inline Monoid semilattice2() {
    return Monoid::from_table({{0, 1}, {1, 1}}, {"1", "a"});
  }

  inline Monoid z2() {
    return Monoid::from_table({{0, 1}, {1, 0}});
  }

  // Indices 0, 1, 2, 3 are 1, 0, e, f.
  inline Monoid oef() {
    return acta::semilattice_1oef();
  }

  inline constexpr index_t ONE = 0, ZERO = 1, E = 2, F = 3;

  // {1, 2, 3} under max; value v at index v - 1.
  inline Monoid chain3max() {
    return acta::chain_semilattice(3, acta::ChainOp::max, false);
  }

  // A set of m points with the trivial action.
  inline Act points(std::size_t m) {
    acta::Table t;
    for (index_t a = 0; a < m; ++a) {
      t.push_back({a});
    }
    return Act::from_table(trivial(), t);
  }

  // {e, f, 0} inside S_S over {1, 0, e, f}, in that order.
  inline Act ef0() {
    return Act::from_table(oef(), {{0, 2, 0, 2}, {1, 2, 2, 1}, {2, 2, 2, 2}}, {"e", "f", "0"});
  }

  // One fixed point over M.
  inline Act theta(Monoid const& M) {
    return acta::trivial_act(M);
  }

}  // namespace fixture

#endif  // ACTA_TESTS_FIXTURES_HPP_
