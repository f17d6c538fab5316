#include "acta/congruence.hpp"

#include <algorithm>      // for sort, unique
#include <cstdlib>        // for getenv, strtoull
#include <deque>          // for deque
#include <map>            // for map
#include <numeric>        // for iota
#include <set>            // for set
#include <string>         // for to_string
#include <unordered_map>  // for unordered_map

namespace acta {

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t m) : _parent(m) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      index_t find(index_t x) {
        while (_parent[x] != x) {
          x = _parent[x] = _parent[_parent[x]];
        }
        return x;
      }

      bool unite(index_t x, index_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        _parent[std::max(x, y)] = std::min(x, y);
        return true;
      }

      // Roots are least elements since unite keeps the smaller root.
      std::vector<index_t> labels() {
        std::vector<index_t> result(_parent.size());
        for (index_t x = 0; x < _parent.size(); ++x) {
          result[x] = find(x);
        }
        return result;
      }

     private:
      std::vector<index_t> _parent;
    };

    // Merges the pairs and then (x·s, y·s) for every merged (x, y).
    std::vector<index_t> close(Act const& A, std::vector<std::pair<index_t, index_t>> pending) {
      UnionFind uf(A.size());
      std::size_t const n = A.monoid().size();
      std::vector<std::pair<index_t, index_t>> stack;
      for (auto [x, y] : pending) {
        if (uf.unite(x, y)) {
          stack.emplace_back(x, y);
        }
      }
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (index_t s = 0; s < n; ++s) {
          index_t const xs = A.act(x, s), ys = A.act(y, s);
          if (uf.unite(xs, ys)) {
            stack.emplace_back(xs, ys);
          }
        }
      }
      return uf.labels();
    }

    void check_sizes(Congruence const& x, Congruence const& y) {
      if (x.size() != y.size()) {
        throw Error(ErrorKind::MixedActs, "the congruences are on acts of different sizes");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  Congruence Congruence::from_partition_unchecked(std::span<index_t const> classes) {
    std::size_t const    m = classes.size();
    std::vector<index_t> labels(m);
    if (std::all_of(classes.begin(), classes.end(), [m](index_t c) { return c < m; })) {
      std::vector<index_t> least(m, UNDEFINED);
      for (index_t a = 0; a < m; ++a) {
        index_t& slot = least[classes[a]];
        if (slot == UNDEFINED) {
          slot = a;
        }
        labels[a] = slot;
      }
    } else {
      std::unordered_map<index_t, index_t> least;
      for (index_t a = 0; a < m; ++a) {
        labels[a] = least.try_emplace(classes[a], a).first->second;
      }
    }
    return Congruence(std::move(labels));
  }

  Congruence Congruence::from_partition(Act const& A, std::span<index_t const> classes) {
    if (classes.size() != A.size()) {
      throw Error(ErrorKind::MixedActs, "expected " + std::to_string(A.size())
                                            + " labels, found " + std::to_string(classes.size()));
    }
    Congruence result = from_partition_unchecked(classes);
    if (!is_compatible(A, result.labels())) {
      throw Error(ErrorKind::NotACongruence, "the partition is not compatible with the action");
    }
    return result;
  }

  std::size_t Congruence::num_classes() const noexcept {
    std::size_t result = 0;
    for (index_t a = 0; a < _labels.size(); ++a) {
      result += _labels[a] == a;
    }
    return result;
  }

  bool Congruence::is_diagonal() const noexcept {
    return num_classes() == size();
  }

  bool Congruence::is_full() const noexcept {
    return std::all_of(_labels.begin(), _labels.end(), [](index_t x) { return x == 0; });
  }

  bool Congruence::contains(Congruence const& that) const {
    check_sizes(*this, that);
    for (index_t a = 0; a < size(); ++a) {
      if (_labels[a] != _labels[that._labels[a]]) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<index_t>> Congruence::classes() const {
    std::vector<std::vector<index_t>> result;
    std::vector<index_t>              position(size(), UNDEFINED);
    for (index_t a = 0; a < size(); ++a) {
      if (_labels[a] == a) {
        position[a] = result.size();
        result.emplace_back();
      }
      result[position[_labels[a]]].push_back(a);
    }
    return result;
  }

  bool is_compatible(Act const& A, std::span<index_t const> classes) {
    if (classes.size() != A.size()) {
      return false;
    }
    // Each element against the first element of its class suffices.
    std::unordered_map<index_t, index_t> first;
    for (index_t a = 0; a < A.size(); ++a) {
      index_t const b = first.try_emplace(classes[a], a).first->second;
      for (index_t s = 0; s < A.monoid().size(); ++s) {
        if (classes[A.act(a, s)] != classes[A.act(b, s)]) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  Congruence diagonal(std::size_t m) {
    std::vector<index_t> labels(m);
    std::iota(labels.begin(), labels.end(), 0);
    return Congruence::from_partition_unchecked(labels);
  }

  Congruence diagonal(Act const& A) {
    return diagonal(A.size());
  }

  Congruence full(std::size_t m) {
    return Congruence::from_partition_unchecked(std::vector<index_t>(m, 0));
  }

  Congruence full(Act const& A) {
    return full(A.size());
  }

  Congruence generated_congruence(Act const& A,
                                  std::span<std::pair<index_t, index_t> const> pairs) {
    for (auto [a, b] : pairs) {
      if (a >= A.size() || b >= A.size()) {
        throw Error(ErrorKind::EntryOutOfRange, "pair outside the act", {a, b});
      }
    }
    return Congruence::from_partition_unchecked(
        close(A, std::vector<std::pair<index_t, index_t>>(pairs.begin(), pairs.end())));
  }

  Congruence principal_congruence(Act const& A, index_t a, index_t b) {
    std::pair<index_t, index_t> const pair{a, b};
    return generated_congruence(A, std::span(&pair, 1));
  }

  Congruence rees_congruence(Act const& A, Subact const& B) {
    if (!is_subact(A, B.elements)) {
      throw Error(ErrorKind::NotASubact, "the set is empty or not closed under the action");
    }
    std::vector<index_t> labels(A.size());
    std::iota(labels.begin(), labels.end(), 0);
    for (index_t b : B.elements) {
      labels[b] = B.elements.front();
    }
    return Congruence::from_partition_unchecked(labels);
  }

  Congruence kernel(Hom const& h) {
    return Congruence::from_partition_unchecked(h.map);
  }

  Congruence meet(Congruence const& x, Congruence const& y) {
    check_sizes(x, y);
    std::size_t const    m = x.size();
    std::vector<index_t> labels(m);
    // Labels are least elements, so a is the least of its meet class iff
    // no earlier element has the same pair of labels.
    if (m <= 64) {
      std::vector<index_t> least(m * m, UNDEFINED);
      for (index_t a = 0; a < m; ++a) {
        index_t& slot = least[x.label(a) * m + y.label(a)];
        if (slot == UNDEFINED) {
          slot = a;
        }
        labels[a] = slot;
      }
    } else {
      std::map<std::pair<index_t, index_t>, index_t> least;
      for (index_t a = 0; a < m; ++a) {
        labels[a] = least.try_emplace({x.label(a), y.label(a)}, a).first->second;
      }
    }
    return Congruence::from_partition_unchecked(labels);
  }

  Congruence meet_all(std::size_t m, std::span<Congruence const> list) {
    Congruence result = full(m);
    for (auto const& x : list) {
      result = meet(result, x);
    }
    return result;
  }

  Congruence join(Act const& A, Congruence const& x, Congruence const& y) {
    check_sizes(x, y);
    if (x.size() != A.size()) {
      throw Error(ErrorKind::MixedActs, "the congruences are not on this act");
    }
    std::vector<std::pair<index_t, index_t>> pairs;
    for (index_t a = 0; a < A.size(); ++a) {
      pairs.emplace_back(a, x.label(a));
      pairs.emplace_back(a, y.label(a));
    }
    return Congruence::from_partition_unchecked(close(A, std::move(pairs)));
  }

  ////////////////////////////////////////////////////////////////////////
  // The lattice
  ////////////////////////////////////////////////////////////////////////

  std::size_t max_lattice_size() {
    if (char const* env = std::getenv("ACTA_MAX_LATTICE")) {
      char*              end   = nullptr;
      unsigned long long value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        return value;
      }
    }
    return DEFAULT_MAX_LATTICE;
  }

  std::vector<Congruence> principal_congruences(Act const& A) {
    std::set<Congruence> found;
    for (index_t a = 0; a < A.size(); ++a) {
      for (index_t b = a + 1; b < A.size(); ++b) {
        found.insert(principal_congruence(A, a, b));
      }
    }
    return {found.begin(), found.end()};
  }

  std::vector<Congruence> all_congruences(Act const& A, std::optional<std::size_t> bound) {
    std::size_t const limit = bound.value_or(max_lattice_size());
    if (A.size() > limit) {
      throw Error(ErrorKind::SizeLimitExceeded,
                  "the act has " + std::to_string(A.size())
                      + " elements, the congruence lattice bound is " + std::to_string(limit));
    }
    auto const              principal = principal_congruences(A);
    std::set<Congruence>    found     = {diagonal(A)};
    std::deque<Congruence>  queue     = {diagonal(A)};
    while (!queue.empty()) {
      Congruence const x = std::move(queue.front());
      queue.pop_front();
      for (auto const& p : principal) {
        if (x.contains(p)) {
          continue;
        }
        Congruence y = join(A, x, p);
        if (found.insert(y).second) {
          queue.push_back(std::move(y));
        }
      }
    }
    return {found.begin(), found.end()};
  }

  std::vector<Congruence> minimal_congruences(Act const& A) {
    auto const              principal = principal_congruences(A);
    std::vector<Congruence> result;
    for (auto const& x : principal) {
      bool minimal = true;
      for (auto const& y : principal) {
        if (y != x && x.contains(y)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::optional<Congruence> monolith(Act const& A) {
    if (A.size() < 2) {
      return std::nullopt;
    }
    auto const principal = principal_congruences(A);
    Congruence m         = meet_all(A.size(), principal);
    if (m.is_diagonal()) {
      return std::nullopt;
    }
    return m;
  }

  std::vector<CongruenceAbove> congruences_above(Act const& A, Congruence const& theta) {
    auto const factor = factor_act(A, theta);
    auto const& pi    = factor.projection.map;
    std::vector<CongruenceAbove> result;
    for (auto const& sigma : all_congruences(factor.act)) {
      std::vector<index_t> lifted(A.size());
      for (index_t a = 0; a < A.size(); ++a) {
        lifted[a] = sigma.label(pi[a]);
      }
      result.push_back({Congruence::from_partition_unchecked(lifted), sigma});
    }
    std::sort(result.begin(), result.end(), [](auto const& x, auto const& y) {
      return x.above < y.above;
    });
    return result;
  }

  std::optional<std::vector<std::size_t>>
  smallest_subfamily_with_meet(std::span<Congruence const> family, Congruence const& target,
                               std::size_t budget) {
    std::size_t const m     = target.size();
    std::size_t const total = family.size();
    std::size_t       tried = 0;
    for (std::size_t k = 0; k <= total; ++k) {
      std::vector<std::size_t> choice(k);
      std::iota(choice.begin(), choice.end(), 0);
      while (true) {
        if (++tried > budget) {
          return std::nullopt;
        }
        Congruence x = full(m);
        for (auto i : choice) {
          x = meet(x, family[i]);
        }
        if (x == target) {
          return choice;
        }
        // next k-subset in lexicographic order
        std::size_t i = k;
        while (i > 0 && choice[i - 1] == total - k + i - 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++choice[i - 1];
        for (std::size_t j = i; j < k; ++j) {
          choice[j] = choice[j - 1] + 1;
        }
      }
    }
    return std::nullopt;
  }

}  // namespace acta
