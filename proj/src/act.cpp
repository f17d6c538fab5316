#include "acta/act.hpp"

#include <algorithm>  // for sort, set_union, lexicographical_compare
#include <numeric>    // for iota
#include <set>        // for set
#include <string>     // for to_string

#include "acta/congruence.hpp"
#include "acta/detail/hom_search.hpp"

namespace acta {

  namespace {
    void check_same_monoid(Act const& A, Act const& B) {
      if (!(A.monoid() == B.monoid())) {
        throw Error(ErrorKind::MixedMonoids, "the acts are over different monoids");
      }
    }

    void check_same_monoid(std::span<Act const> acts) {
      if (acts.empty()) {
        throw Error(ErrorKind::Shape, "expected a nonempty list of acts");
      }
      for (auto const& A : acts) {
        check_same_monoid(acts.front(), A);
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Act
  ////////////////////////////////////////////////////////////////////////

  Act Act::from_table(Monoid M, Table const& action, std::vector<std::string> names) {
    std::size_t const m = action.size();
    std::size_t const n = M.size();
    if (m == 0) {
      throw Error(ErrorKind::EmptyAct, "acts must have at least one element");
    }
    if (!names.empty() && names.size() != m) {
      throw Error(ErrorKind::Shape, "expected " + std::to_string(m) + " names, found "
                                        + std::to_string(names.size()));
    }
    std::vector<index_t> flat;
    flat.reserve(m * n);
    for (index_t a = 0; a < m; ++a) {
      if (action[a].size() != n) {
        throw Error(ErrorKind::Shape, "row " + std::to_string(a) + " has length "
                                          + std::to_string(action[a].size())
                                          + " but the monoid has " + std::to_string(n)
                                          + " elements");
      }
      for (index_t s = 0; s < n; ++s) {
        if (action[a][s] >= m) {
          throw Error(ErrorKind::EntryOutOfRange,
                      "entry (" + std::to_string(a) + ", " + std::to_string(s) + ") = "
                          + std::to_string(action[a][s]) + " is out of range",
                      {a, s});
        }
        flat.push_back(action[a][s]);
      }
    }
    auto at = [&flat, n](index_t a, index_t s) { return flat[a * n + s]; };
    for (index_t a = 0; a < m; ++a) {
      if (at(a, M.identity()) != a) {
        throw Error(ErrorKind::NotUnital, "a·1 != a for a = " + std::to_string(a), {a});
      }
    }
    for (index_t a = 0; a < m; ++a) {
      for (index_t s = 0; s < n; ++s) {
        for (index_t t = 0; t < n; ++t) {
          if (at(at(a, s), t) != at(a, M.product(s, t))) {
            throw Error(ErrorKind::NotCompatible,
                        "(a·s)·t != a·(st) for (a, s, t) = (" + std::to_string(a) + ", "
                            + std::to_string(s) + ", " + std::to_string(t) + ")",
                        {a, s, t});
          }
        }
      }
    }
    return Act(std::move(M), m, std::move(flat), std::move(names));
  }

  Act validate_act(Monoid M, Table const& action, std::vector<std::string> names) {
    return Act::from_table(std::move(M), action, std::move(names));
  }

  Table Act::table() const {
    Table result(_size);
    for (index_t a = 0; a < _size; ++a) {
      auto r = row(a);
      result[a].assign(r.begin(), r.end());
    }
    return result;
  }

  std::string Act::name(index_t a) const {
    return _names.empty() ? std::to_string(a) : _names[a];
  }

  std::vector<index_t> Act::fixed_points() const {
    std::vector<index_t> result;
    for (index_t a = 0; a < _size; ++a) {
      auto r = row(a);
      if (std::all_of(r.begin(), r.end(), [a](index_t b) { return a == b; })) {
        result.push_back(a);
      }
    }
    return result;
  }

  std::optional<index_t> Act::zero() const {
    auto fp = fixed_points();
    if (fp.size() == 1) {
      return fp.front();
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subacts and homs
  ////////////////////////////////////////////////////////////////////////

  bool Subact::contains(index_t a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
  }

  bool is_subact(Act const& A, std::span<index_t const> elements) {
    if (elements.empty()) {
      return false;
    }
    std::vector<bool> member(A.size(), false);
    for (index_t a : elements) {
      if (a >= A.size()) {
        return false;
      }
      member[a] = true;
    }
    for (index_t a : elements) {
      for (index_t b : A.row(a)) {
        if (!member[b]) {
          return false;
        }
      }
    }
    return true;
  }

  Subact make_subact(Act const& A, std::vector<index_t> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!is_subact(A, elements)) {
      throw Error(ErrorKind::NotASubact, "the set is empty or not closed under the action");
    }
    return Subact{std::move(elements)};
  }

  bool is_hom(Act const& A, Act const& B, std::span<index_t const> map) {
    if (map.size() != A.size() || !(A.monoid() == B.monoid())) {
      return false;
    }
    for (index_t x : map) {
      if (x >= B.size()) {
        return false;
      }
    }
    for (index_t a = 0; a < A.size(); ++a) {
      for (index_t s = 0; s < A.monoid().size(); ++s) {
        if (map[A.act(a, s)] != B.act(map[a], s)) {
          return false;
        }
      }
    }
    return true;
  }

  Hom make_hom(Act const& A, Act const& B, std::vector<index_t> map) {
    check_same_monoid(A, B);
    if (map.size() != A.size()) {
      throw Error(ErrorKind::Shape, "a hom needs one image per source element");
    }
    if (!is_hom(A, B, map)) {
      throw Error(ErrorKind::NotAHom, "the map does not commute with the action");
    }
    Hom               h{std::move(map)};
    std::vector<bool> hit(B.size(), false);
    std::size_t       distinct = 0;
    for (index_t x : h.map) {
      if (!hit[x]) {
        hit[x] = true;
        ++distinct;
      }
    }
    h.injective  = distinct == A.size();
    h.surjective = distinct == B.size();
    return h;
  }

  Subact image(Act const& B, Hom const& h) {
    return make_subact(B, h.map);
  }

  Act regular_act(Monoid const& M) {
    return Act::from_table(M, M.table(), M.names());
  }

  Act trivial_act(Monoid const& M) {
    return Act::from_table(M, Table{std::vector<index_t>(M.size(), 0)});
  }

  Subact cyclic_subact(Act const& A, index_t a) {
    auto r = A.row(a);
    return make_subact(A, std::vector<index_t>(r.begin(), r.end()));
  }

  Subact generated_subact(Act const& A, std::span<index_t const> generators) {
    std::vector<index_t> elements;
    for (index_t a : generators) {
      auto r = A.row(a);
      elements.insert(elements.end(), r.begin(), r.end());
    }
    return make_subact(A, std::move(elements));
  }

  std::vector<Subact> all_subacts(Act const& A) {
    std::set<std::vector<index_t>> cyclic;
    for (index_t a = 0; a < A.size(); ++a) {
      cyclic.insert(cyclic_subact(A, a).elements);
    }
    // Every subact is the union of the cyclic subacts of its elements.
    std::set<std::vector<index_t>> found(cyclic.begin(), cyclic.end());
    std::vector<std::vector<index_t>> frontier(cyclic.begin(), cyclic.end());
    while (!frontier.empty()) {
      std::vector<std::vector<index_t>> next;
      for (auto const& x : frontier) {
        for (auto const& c : cyclic) {
          std::vector<index_t> u;
          std::set_union(x.begin(), x.end(), c.begin(), c.end(), std::back_inserter(u));
          if (found.insert(u).second) {
            next.push_back(std::move(u));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<Subact> result;
    result.reserve(found.size());
    for (auto const& x : found) {
      result.push_back(Subact{x});
    }
    std::stable_sort(result.begin(), result.end(), [](Subact const& x, Subact const& y) {
      return x.size() < y.size();
    });
    return result;
  }

  Act restrict_to(Act const& A, Subact const& B) {
    std::vector<index_t> position(A.size(), UNDEFINED);
    for (index_t i = 0; i < B.size(); ++i) {
      position[B.elements[i]] = i;
    }
    Table                    action(B.size());
    std::vector<std::string> names;
    for (index_t i = 0; i < B.size(); ++i) {
      for (index_t b : A.row(B.elements[i])) {
        if (position[b] == UNDEFINED) {
          throw Error(ErrorKind::NotASubact, "the set is not closed under the action");
        }
        action[i].push_back(position[b]);
      }
      if (!A.names().empty()) {
        names.push_back(A.names()[B.elements[i]]);
      }
    }
    return Act::from_table(A.monoid(), action, std::move(names));
  }

  ////////////////////////////////////////////////////////////////////////
  // Products, coproducts, factors
  ////////////////////////////////////////////////////////////////////////

  index_t ProductAct::encode(std::span<index_t const> tuple) const {
    index_t x = 0;
    for (std::size_t i = 0; i < radices.size(); ++i) {
      x = x * static_cast<index_t>(radices[i]) + tuple[i];
    }
    return x;
  }

  std::vector<index_t> ProductAct::decode(index_t x) const {
    std::vector<index_t> tuple(radices.size());
    for (std::size_t i = radices.size(); i-- > 0;) {
      tuple[i] = x % radices[i];
      x /= radices[i];
    }
    return tuple;
  }

  ProductAct product(std::span<Act const> acts) {
    check_same_monoid(acts);
    Monoid const& M    = acts.front().monoid();
    std::size_t   size = 1;
    ProductAct    result{acts.front(), {}, {}};
    for (auto const& A : acts) {
      result.radices.push_back(A.size());
      size *= A.size();
    }
    if (size > std::size_t(UNDEFINED)) {
      throw Error(ErrorKind::SizeLimitExceeded, "the product is too large to index");
    }
    Table                             action(size, std::vector<index_t>(M.size()));
    std::vector<std::vector<index_t>> proj(acts.size(), std::vector<index_t>(size));
    std::vector<index_t>              image(acts.size());
    for (index_t x = 0; x < size; ++x) {
      auto tuple = result.decode(x);
      for (std::size_t i = 0; i < acts.size(); ++i) {
        proj[i][x] = tuple[i];
      }
      for (index_t s = 0; s < M.size(); ++s) {
        for (std::size_t i = 0; i < acts.size(); ++i) {
          image[i] = acts[i].act(tuple[i], s);
        }
        action[x][s] = result.encode(image);
      }
    }
    result.act = Act::from_table(M, action);
    for (std::size_t i = 0; i < acts.size(); ++i) {
      result.projections.push_back(make_hom(result.act, acts[i], std::move(proj[i])));
    }
    return result;
  }

  CoproductAct coproduct(std::span<Act const> acts) {
    check_same_monoid(acts);
    Monoid const&            M = acts.front().monoid();
    Table                    action;
    std::vector<std::size_t> offsets;
    for (auto const& A : acts) {
      index_t const offset = action.size();
      offsets.push_back(offset);
      for (index_t a = 0; a < A.size(); ++a) {
        std::vector<index_t> row;
        for (index_t b : A.row(a)) {
          row.push_back(b + offset);
        }
        action.push_back(std::move(row));
      }
    }
    CoproductAct result{Act::from_table(M, action), offsets, {}};
    for (std::size_t i = 0; i < acts.size(); ++i) {
      std::vector<index_t> map(acts[i].size());
      std::iota(map.begin(), map.end(), static_cast<index_t>(offsets[i]));
      result.injections.push_back(make_hom(acts[i], result.act, std::move(map)));
    }
    return result;
  }

  FactorAct factor_act(Act const& A, Congruence const& theta) {
    if (theta.size() != A.size()) {
      throw Error(ErrorKind::MixedActs, "the congruence is on an act of another size");
    }
    if (!is_compatible(A, theta.labels())) {
      throw Error(ErrorKind::NotACongruence, "the partition is not compatible with the action");
    }
    std::vector<index_t> cls(A.size(), UNDEFINED);
    std::vector<index_t> reps;
    for (index_t a = 0; a < A.size(); ++a) {
      if (theta.label(a) == a) {
        cls[a] = reps.size();
        reps.push_back(a);
      }
    }
    std::vector<index_t> proj(A.size());
    for (index_t a = 0; a < A.size(); ++a) {
      proj[a] = cls[theta.label(a)];
    }
    Table action(reps.size());
    for (index_t j = 0; j < reps.size(); ++j) {
      for (index_t b : A.row(reps[j])) {
        action[j].push_back(proj[b]);
      }
    }
    Act quotient = Act::from_table(A.monoid(), action);
    Hom pi       = make_hom(A, quotient, std::move(proj));
    return FactorAct{std::move(quotient), std::move(pi)};
  }

  std::vector<Subact> decompose_indecomposable(Act const& A) {
    std::vector<index_t> parent(A.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](index_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    // a and a·s share the element a·s, which generates the relation
    // "aS and bS intersect".
    for (index_t a = 0; a < A.size(); ++a) {
      for (index_t b : A.row(a)) {
        index_t x = find(a), y = find(b);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
        }
      }
    }
    std::vector<Subact>  result;
    std::vector<index_t> position(A.size(), UNDEFINED);
    for (index_t a = 0; a < A.size(); ++a) {
      index_t r = find(a);
      if (position[r] == UNDEFINED) {
        position[r] = result.size();
        result.emplace_back();
      }
      result[position[r]].elements.push_back(a);
    }
    return result;
  }

  std::optional<Hom> act_isomorphism(Act const& A, Act const& B) {
    check_same_monoid(A, B);
    if (A.size() != B.size()) {
      return std::nullopt;
    }
    std::optional<Hom> result;
    detail::HomSearch  search(A, B, true);
    search.run([&](std::vector<index_t> const& map) {
      result = make_hom(A, B, map);
      return false;
    });
    return result;
  }

  bool act_isomorphic(Act const& A, Act const& B) {
    return act_isomorphism(A, B).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical forms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // position -> old element, returns flat table of the relabeled act.
    std::vector<index_t> relabeled(Act const& A, std::vector<index_t> const& order) {
      std::size_t const    m = A.size(), n = A.monoid().size();
      std::vector<index_t> inverse(m);
      for (index_t i = 0; i < m; ++i) {
        inverse[order[i]] = i;
      }
      std::vector<index_t> result(m * n);
      for (index_t i = 0; i < m; ++i) {
        for (index_t s = 0; s < n; ++s) {
          result[i * n + s] = inverse[A.act(order[i], s)];
        }
      }
      return result;
    }

    std::vector<index_t> canonical_order_by_permutations(Act const& A) {
      std::vector<index_t> order(A.size());
      std::iota(order.begin(), order.end(), 0);
      std::vector<index_t> best_order = order;
      std::vector<index_t> best       = relabeled(A, order);
      while (std::next_permutation(order.begin(), order.end())) {
        auto candidate = relabeled(A, order);
        if (candidate < best) {
          best       = std::move(candidate);
          best_order = order;
        }
      }
      return best_order;
    }

    // Positions are filled in order. Once positions 0..i-1 are filled, the
    // first cell of rows 0..i-1 that refers to an unfilled element must
    // receive the value i in a least table, so that element is forced into
    // position i. Branching only happens when rows 0..i-1 are closed.
    class CanonSearch {
     public:
      explicit CanonSearch(Act const& A)
          : _A(A),
            _m(A.size()),
            _n(A.monoid().size()),
            _order(),
            _position(A.size(), UNDEFINED) {}

      std::vector<index_t> run() {
        descend();
        return _best_order;
      }

     private:
      // -1: prefix already smaller, 0: undecided, 1: prune.
      int compare_prefix() const {
        if (_best.empty()) {
          return 0;
        }
        index_t const i = _order.size();
        for (index_t j = 0; j < i; ++j) {
          for (index_t s = 0; s < _n; ++s) {
            index_t const target = _A.act(_order[j], s);
            index_t const best   = _best[j * _n + s];
            if (_position[target] == UNDEFINED) {
              return best < i ? 1 : 0;
            }
            if (_position[target] != best) {
              return _position[target] < best ? -1 : 1;
            }
          }
        }
        return 0;
      }

      void push(index_t x) {
        _position[x] = _order.size();
        _order.push_back(x);
      }

      void pop() {
        _position[_order.back()] = UNDEFINED;
        _order.pop_back();
      }

      void descend() {
        if (compare_prefix() == 1) {
          return;
        }
        if (_order.size() == _m) {
          auto table = relabeled(_A, _order);
          if (_best.empty() || table < _best) {
            _best       = std::move(table);
            _best_order = _order;
          }
          return;
        }
        for (index_t j = 0; j < _order.size(); ++j) {
          for (index_t s = 0; s < _n; ++s) {
            index_t const target = _A.act(_order[j], s);
            if (_position[target] == UNDEFINED) {
              push(target);
              descend();
              pop();
              return;
            }
          }
        }
        for (index_t x = 0; x < _m; ++x) {
          if (_position[x] == UNDEFINED) {
            push(x);
            descend();
            pop();
          }
        }
      }

      Act const&           _A;
      std::size_t          _m;
      std::size_t          _n;
      std::vector<index_t> _order;
      std::vector<index_t> _position;
      std::vector<index_t> _best;
      std::vector<index_t> _best_order;
    };

    std::vector<index_t> canonical_order(Act const& A, CanonMethod method) {
      if (method == CanonMethod::permutations
          || (method == CanonMethod::automatic && A.size() <= 6)) {
        return canonical_order_by_permutations(A);
      }
      return CanonSearch(A).run();
    }
  }  // namespace

  std::vector<index_t> canonical_action_table(Act const& A, CanonMethod method) {
    return relabeled(A, canonical_order(A, method));
  }

  Act canonical_form(Act const& A) {
    auto const               order = canonical_order(A, CanonMethod::automatic);
    auto const               flat  = relabeled(A, order);
    std::size_t const        n     = A.monoid().size();
    Table                    action(A.size());
    std::vector<std::string> names;
    for (index_t i = 0; i < A.size(); ++i) {
      action[i].assign(flat.begin() + i * n, flat.begin() + (i + 1) * n);
      if (!A.names().empty()) {
        names.push_back(A.names()[order[i]]);
      }
    }
    return Act::from_table(A.monoid(), action, std::move(names));
  }

}  // namespace acta
