#include <algorithm>  // for sort
#include <set>        // for set
#include <string>     // for to_string

#include "acta/universe.hpp"

namespace acta {

  namespace {
    void check_cap(std::size_t value, std::size_t cap, char const* what) {
      if (value > cap) {
        throw Error(ErrorKind::CapExceeded, std::string(what) + " bound " + std::to_string(value)
                                                + " exceeds the cap " + std::to_string(cap));
      }
    }

    Table unflatten(std::vector<index_t> const& flat, std::size_t rows, std::size_t cols) {
      Table table(rows, std::vector<index_t>(cols));
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          table[i][j] = flat[i * cols + j];
        }
      }
      return table;
    }

    // Tables with the identity at 0, filled cell by cell; a triple is
    // checked as soon as the three products it involves are known.
    class MonoidSearch {
     public:
      explicit MonoidSearch(std::size_t n) : _n(n), _t(n * n, UNDEFINED) {
        for (index_t s = 0; s < n; ++s) {
          _t[s]      = s;
          _t[s * n]  = s;
        }
      }

      template <typename Visit>
      void run(Visit&& visit) {
        fill(_n + 1, visit);
      }

     private:
      bool associative_so_far() const {
        for (index_t s = 1; s < _n; ++s) {
          for (index_t t = 1; t < _n; ++t) {
            index_t const st = _t[s * _n + t];
            if (st == UNDEFINED) {
              continue;
            }
            for (index_t u = 1; u < _n; ++u) {
              index_t const tu = _t[t * _n + u];
              if (tu == UNDEFINED) {
                continue;
              }
              index_t const l = _t[st * _n + u], r = _t[s * _n + tu];
              if (l != UNDEFINED && r != UNDEFINED && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename Visit>
      void fill(std::size_t cell, Visit& visit) {
        if (cell >= _n * _n) {
          visit(_t);
          return;
        }
        if (cell % _n == 0) {
          fill(cell + 1, visit);
          return;
        }
        for (index_t v = 0; v < _n; ++v) {
          _t[cell] = v;
          if (associative_so_far()) {
            fill(cell + 1, visit);
          }
        }
        _t[cell] = UNDEFINED;
      }

      std::size_t          _n;
      std::vector<index_t> _t;
    };

    // Action tables filled cell by cell with a·1 = a fixed and
    // a·(st) = (a·s)·t checked whenever all of it is known.
    class ActSearch {
     public:
      ActSearch(Monoid const& M, std::size_t m)
          : _M(M), _n(M.size()), _m(m), _t(m * _n, UNDEFINED) {
        for (index_t a = 0; a < m; ++a) {
          _t[a * _n + M.identity()] = a;
        }
      }

      template <typename Visit>
      void run(Visit&& visit) {
        fill(0, visit);
      }

     private:
      bool compatible_so_far() const {
        for (index_t a = 0; a < _m; ++a) {
          for (index_t s = 0; s < _n; ++s) {
            index_t const as = _t[a * _n + s];
            if (as == UNDEFINED) {
              continue;
            }
            for (index_t t = 0; t < _n; ++t) {
              index_t const l = _t[as * _n + t], r = _t[a * _n + _M.product(s, t)];
              if (l != UNDEFINED && r != UNDEFINED && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename Visit>
      void fill(std::size_t cell, Visit& visit) {
        if (cell == _m * _n) {
          visit(_t);
          return;
        }
        if (_t[cell] != UNDEFINED) {
          fill(cell + 1, visit);
          return;
        }
        for (index_t v = 0; v < _m; ++v) {
          _t[cell] = v;
          if (compatible_so_far()) {
            fill(cell + 1, visit);
          }
        }
        _t[cell] = UNDEFINED;
      }

      Monoid const&        _M;
      std::size_t          _n, _m;
      std::vector<index_t> _t;
    };
  }  // namespace

  std::vector<Monoid> enumerate_monoids(std::size_t n, std::size_t cap) {
    check_cap(n, cap, "monoid");
    std::vector<Monoid> result;
    for (std::size_t k = 1; k <= n; ++k) {
      std::set<std::vector<index_t>> seen;
      MonoidSearch(k).run([&](std::vector<index_t> const& flat) {
        seen.insert(canonical_table(Monoid::from_table(unflatten(flat, k, k))));
      });
      for (auto const& flat : seen) {
        result.push_back(Monoid::from_table(unflatten(flat, k, k)));
      }
    }
    return result;
  }

  std::vector<Act> enumerate_acts(Monoid const& M, std::size_t m, std::size_t cap) {
    check_cap(m, cap, "act");
    std::size_t const n = M.size();
    std::vector<Act>  result;
    for (std::size_t k = 1; k <= m; ++k) {
      std::set<std::vector<index_t>> seen;
      ActSearch(M, k).run([&](std::vector<index_t> const& flat) {
        seen.insert(canonical_action_table(Act::from_table(M, unflatten(flat, k, n))));
      });
      for (auto const& flat : seen) {
        result.push_back(Act::from_table(M, unflatten(flat, k, n)));
      }
    }
    return result;
  }

  Universe build_universe(UniverseOptions const& options) {
    check_cap(options.max_monoid, options.cap, "monoid");
    check_cap(options.max_act, options.cap, "act");
    Universe U;
    U.monoid_bound = options.max_monoid;
    U.act_bound    = options.max_act;
    U.monoids      = enumerate_monoids(options.max_monoid, options.cap);
    if (options.include_named) {
      Monoid const named = canonical_form(semilattice_1oef());
      if (std::find(U.monoids.begin(), U.monoids.end(), named) == U.monoids.end()) {
        U.monoids.push_back(named);
      }
    }
    std::stable_sort(U.monoids.begin(), U.monoids.end(), [](auto const& x, auto const& y) {
      if (x.size() != y.size()) {
        return x.size() < y.size();
      }
      return std::lexicographical_compare(x.flat_table().begin(), x.flat_table().end(),
                                          y.flat_table().begin(), y.flat_table().end());
    });
    for (auto const& M : U.monoids) {
      U.acts.push_back(enumerate_acts(M, options.max_act, options.cap));
    }
    return U;
  }

}  // namespace acta
