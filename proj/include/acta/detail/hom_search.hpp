// Backtracking search for homomorphisms between acts.

#ifndef ACTA_DETAIL_HOM_SEARCH_HPP_
#define ACTA_DETAIL_HOM_SEARCH_HPP_

#include <cstddef>  // for size_t
#include <span>     // for span
#include <vector>   // for vector

#include "acta/act.hpp"

namespace acta::detail {

  // Assigning h(x) = y forces h(x·s) = y·s for every s, so each choice is
  // made for one element and propagated over its cyclic subact. The next
  // choice is made for the first unassigned element of the priority list,
  // then for the least unassigned element. With an empty priority list,
  // complete maps are produced in lexicographic order.
  class HomSearch {
   public:
    HomSearch(Act const& source, Act const& target, bool injective = false)
        : _source(source),
          _target(target),
          _injective(injective),
          _map(source.size(), UNDEFINED),
          _used(injective ? target.size() : 0, false) {}

    // Fixes h(x) = y before the search. Returns false on a conflict.
    bool pin(index_t x, index_t y) {
      return assign(x, y);
    }

    // Calls prune(map) after every successful propagation; a false result
    // abandons the branch. Calls visit(map) on each complete map; a false
    // result stops the search. Returns false iff visit stopped the search.
    template <typename Prune, typename Visit>
    bool run(std::span<index_t const> priority, Prune&& prune, Visit&& visit) {
      _priority.assign(priority.begin(), priority.end());
      if (!prune(static_cast<std::vector<index_t> const&>(_map))) {
        return true;
      }
      return descend(prune, visit);
    }

    template <typename Visit>
    bool run(Visit&& visit) {
      return run(
          {}, [](std::vector<index_t> const&) { return true; }, visit);
    }

   private:
    template <typename Prune, typename Visit>
    bool descend(Prune& prune, Visit& visit) {
      index_t x = UNDEFINED;
      for (index_t p : _priority) {
        if (_map[p] == UNDEFINED) {
          x = p;
          break;
        }
      }
      if (x == UNDEFINED) {
        while (_next < _map.size() && _map[_next] != UNDEFINED) {
          ++_next;
        }
        if (_next == _map.size()) {
          return visit(static_cast<std::vector<index_t> const&>(_map));
        }
        x = _next;
      }
      std::size_t const mark      = _trail.size();
      std::size_t const next_mark = _next;
      for (index_t y = 0; y < _target.size(); ++y) {
        if (assign(x, y) && prune(static_cast<std::vector<index_t> const&>(_map))) {
          if (!descend(prune, visit)) {
            return false;
          }
        }
        undo(mark);
        _next = next_mark;
      }
      return true;
    }

    bool assign(index_t x, index_t y) {
      if (_map[x] != UNDEFINED) {
        return _map[x] == y;
      }
      if (!set(x, y)) {
        return false;
      }
      _queue.clear();
      _queue.push_back(x);
      std::size_t const n = _source.monoid().size();
      for (std::size_t i = 0; i < _queue.size(); ++i) {
        index_t const u = _queue[i];
        index_t const v = _map[u];
        for (index_t s = 0; s < n; ++s) {
          index_t const us = _source.act(u, s);
          index_t const vs = _target.act(v, s);
          if (_map[us] == UNDEFINED) {
            if (!set(us, vs)) {
              return false;
            }
            _queue.push_back(us);
          } else if (_map[us] != vs) {
            return false;
          }
        }
      }
      return true;
    }

    bool set(index_t x, index_t y) {
      if (_injective) {
        if (_used[y]) {
          return false;
        }
        _used[y] = true;
      }
      _map[x] = y;
      _trail.push_back(x);
      return true;
    }

    void undo(std::size_t mark) {
      while (_trail.size() > mark) {
        index_t const x = _trail.back();
        _trail.pop_back();
        if (_injective) {
          _used[_map[x]] = false;
        }
        _map[x] = UNDEFINED;
      }
    }

    Act const&           _source;
    Act const&           _target;
    bool                 _injective;
    std::vector<index_t> _map;
    std::vector<bool>    _used;
    std::vector<index_t> _trail;
    std::vector<index_t> _queue;
    std::vector<index_t> _priority;
    std::size_t          _next = 0;
  };

}  // namespace acta::detail

#endif  // ACTA_DETAIL_HOM_SEARCH_HPP_
