#include "acta/cogeneration.hpp"

#include <algorithm>  // for sort
#include <limits>     // for numeric_limits
#include <numeric>    // for iota
#include <set>        // for set

#include "acta/detail/hom_search.hpp"

namespace acta {

  namespace {
    void check_same_monoid(Act const& A, std::span<Act const> Cs) {
      for (auto const& C : Cs) {
        if (!(A.monoid() == C.monoid())) {
          throw Error(ErrorKind::MixedMonoids, "the acts are over different monoids");
        }
      }
    }

    // Pairs a < b, flattened.
    class PairSet {
     public:
      explicit PairSet(std::size_t m) : _m(m), _bits(m * m, false) {}

      bool get(index_t a, index_t b) const {
        return _bits[a * _m + b];
      }

      void set(index_t a, index_t b) {
        _bits[a * _m + b] = true;
      }

     private:
      std::size_t       _m;
      std::vector<bool> _bits;
    };

    std::vector<std::uint64_t> embed(std::vector<Hom> const&         family,
                                     std::vector<std::size_t> const& radices,
                                     std::size_t                     m) {
      unsigned __int128 total = 1;
      for (auto r : radices) {
        total *= r;
        if (total > std::numeric_limits<std::uint64_t>::max()) {
          return {};
        }
      }
      std::vector<std::uint64_t> result(m, 0);
      for (index_t a = 0; a < m; ++a) {
        for (std::size_t i = 0; i < family.size(); ++i) {
          result[a] = result[a] * radices[i] + family[i].map[a];
        }
      }
      return result;
    }

    bool separates_all(std::vector<Congruence> const& kernels, std::vector<bool> const& keep,
                       std::size_t m) {
      Congruence x = full(m);
      for (std::size_t i = 0; i < kernels.size(); ++i) {
        if (keep[i]) {
          x = meet(x, kernels[i]);
        }
      }
      return x.is_diagonal();
    }

  }  // namespace

  std::vector<Hom> enumerate_homs(Act const& A, Act const& B, std::size_t limit) {
    check_same_monoid(A, std::span(&B, 1));
    std::vector<Hom>  result;
    detail::HomSearch search(A, B);
    search.run([&](std::vector<index_t> const& map) {
      if (result.size() == limit) {
        throw Error(ErrorKind::SizeLimitExceeded,
                    "more than " + std::to_string(limit) + " homs");
      }
      result.push_back(make_hom(A, B, map));
      return true;
    });
    return result;
  }

  std::size_t count_homs(Act const& A, Act const& B) {
    check_same_monoid(A, std::span(&B, 1));
    std::size_t       count = 0;
    detail::HomSearch search(A, B);
    search.run([&count](std::vector<index_t> const&) {
      ++count;
      return true;
    });
    return count;
  }

  std::optional<Hom> separating_hom(Act const& A, Act const& B, index_t a, index_t b) {
    check_same_monoid(A, std::span(&B, 1));
    std::optional<Hom> result;
    index_t const      priority[] = {a, b};
    detail::HomSearch  search(A, B);
    search.run(
        priority,
        [a, b](std::vector<index_t> const& map) {
          return map[a] == UNDEFINED || map[b] == UNDEFINED || map[a] != map[b];
        },
        [&](std::vector<index_t> const& map) {
          result = make_hom(A, B, map);
          return false;
        });
    return result;
  }

  CotraceResult cotrace_with_separators(Act const& A, std::span<Act const> Cs) {
    check_same_monoid(A, Cs);
    std::size_t const   m = A.size();
    PairSet             separated(m);
    CogenerationWitness witness;
    for (index_t a = 0; a < m; ++a) {
      for (index_t b = a + 1; b < m; ++b) {
        if (separated.get(a, b)) {
          continue;
        }
        for (std::size_t i = 0; i < Cs.size(); ++i) {
          auto h = separating_hom(A, Cs[i], a, b);
          if (h) {
            for (index_t x = 0; x < m; ++x) {
              for (index_t y = x + 1; y < m; ++y) {
                if (h->map[x] != h->map[y]) {
                  separated.set(x, y);
                }
              }
            }
            witness.family.push_back(std::move(*h));
            witness.targets.push_back(i);
            break;
          }
        }
      }
    }
    std::vector<index_t> labels(m);
    for (index_t b = 0; b < m; ++b) {
      labels[b] = b;
      for (index_t a = 0; a < b; ++a) {
        if (!separated.get(a, b)) {
          labels[b] = a;
          break;
        }
      }
    }
    return {Congruence::from_partition_unchecked(labels), std::move(witness)};
  }

  Congruence cotrace(Act const& A, std::span<Act const> Cs) {
    return cotrace_with_separators(A, Cs).cotrace;
  }

  std::optional<CogenerationWitness> cogenerates(std::span<Act const> Cs, Act const& A) {
    auto [cotr, witness] = cotrace_with_separators(A, Cs);
    if (!cotr.is_diagonal()) {
      return std::nullopt;
    }
    std::vector<Congruence> kernels;
    for (auto const& h : witness.family) {
      kernels.push_back(kernel(h));
    }
    std::vector<bool> keep(kernels.size(), true);
    for (std::size_t i = kernels.size(); i-- > 0;) {
      keep[i] = false;
      if (!separates_all(kernels, keep, A.size())) {
        keep[i] = true;
      }
    }
    CogenerationWitness      result;
    std::vector<std::size_t> radices;
    for (std::size_t i = 0; i < kernels.size(); ++i) {
      if (keep[i]) {
        result.family.push_back(std::move(witness.family[i]));
        result.targets.push_back(witness.targets[i]);
        radices.push_back(Cs[witness.targets[i]].size());
      }
    }
    result.embedding = embed(result.family, radices, A.size());
    return result;
  }

  bool is_cogenerated(std::span<Act const> Cs, Act const& A) {
    return cotrace(A, Cs).is_diagonal();
  }

  std::optional<MinimalWitness> minimal_witness(Act const& B, Act const& A,
                                                std::size_t budget) {
    std::size_t const m    = A.size();
    auto const        homs = enumerate_homs(A, B);
    // Only kernels matter, and shrinking a kernel never hurts, so the
    // search runs over the minimal kernels.
    std::vector<Congruence> kernels;
    std::vector<Hom const*> reps;
    {
      std::set<Congruence> seen;
      std::vector<Congruence> distinct;
      std::vector<Hom const*> first;
      for (auto const& h : homs) {
        auto k = kernel(h);
        if (seen.insert(k).second) {
          distinct.push_back(std::move(k));
          first.push_back(&h);
        }
      }
      for (std::size_t i = 0; i < distinct.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < distinct.size() && minimal; ++j) {
          minimal = j == i || !distinct[i].contains(distinct[j]);
        }
        if (minimal) {
          kernels.push_back(distinct[i]);
          reps.push_back(first[i]);
        }
      }
    }
    if (!meet_all(m, kernels).is_diagonal()) {
      return std::nullopt;
    }
    MinimalWitness result;
    if (auto exact = smallest_subfamily_with_meet(kernels, diagonal(m), budget)) {
      for (auto i : *exact) {
        result.family.push_back(*reps[i]);
      }
      return result;
    }
    result.proven_minimal = false;
    Congruence current    = full(m);
    while (!current.is_diagonal()) {
      std::size_t best = 0, best_classes = 0;
      for (std::size_t i = 0; i < kernels.size(); ++i) {
        std::size_t c = meet(current, kernels[i]).num_classes();
        if (c > best_classes) {
          best_classes = c;
          best         = i;
        }
      }
      current = meet(current, kernels[best]);
      result.family.push_back(*reps[best]);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subdirect decompositions
  ////////////////////////////////////////////////////////////////////////

  Congruence maximal_separating_congruence(Act const& A, index_t a, index_t b) {
    auto const principal = principal_congruences(A);
    Congruence theta     = diagonal(A);
    bool       changed   = true;
    while (changed) {
      changed = false;
      for (auto const& p : principal) {
        if (theta.contains(p)) {
          continue;
        }
        Congruence candidate = join(A, theta, p);
        if (!candidate.related(a, b)) {
          theta   = std::move(candidate);
          changed = true;
        }
      }
    }
    return theta;
  }

  SubdirectDecomposition subdirect_decomposition(Act const& A) {
    std::size_t const m = A.size();
    if (m < 2) {
      throw Error(ErrorKind::TooSmall, "subdirect decompositions need at least two elements");
    }
    std::set<Congruence> candidates;
    for (index_t a = 0; a < m; ++a) {
      for (index_t b = a + 1; b < m; ++b) {
        candidates.insert(maximal_separating_congruence(A, a, b));
      }
    }
    std::vector<Congruence> ordered(candidates.begin(), candidates.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](auto const& x, auto const& y) {
      return x.num_classes() > y.num_classes();
    });
    std::vector<Congruence> kept;
    Congruence              current = full(m);
    for (auto const& theta : ordered) {
      Congruence next = meet(current, theta);
      if (next != current) {
        kept.push_back(theta);
        current = std::move(next);
      }
    }
    // A factor kept early can become redundant once later ones are added.
    for (std::size_t i = kept.size(); i-- > 0;) {
      std::vector<Congruence> rest;
      for (std::size_t j = 0; j < kept.size(); ++j) {
        if (j != i) {
          rest.push_back(kept[j]);
        }
      }
      if (meet_all(m, rest).is_diagonal()) {
        kept = std::move(rest);
      }
    }

    SubdirectDecomposition result;
    result.all_subdirectly_irreducible = true;
    for (auto& theta : kept) {
      auto factor = factor_act(A, theta);
      auto mono   = monolith(factor.act);
      if (!mono) {
        result.all_subdirectly_irreducible = false;
      }
      result.factors.push_back(
          {theta, std::move(factor.act), mono.value_or(diagonal(theta.num_classes()))});
    }
    result.meet_is_diagonal = meet_all(m, kept).is_diagonal();
    return result;
  }

  std::optional<Hom> generator_witness(Act const& A) {
    Act const S = regular_act(A.monoid());
    for (index_t a = 0; a < A.size(); ++a) {
      detail::HomSearch search(A, S);
      if (!search.pin(a, A.monoid().identity())) {
        continue;
      }
      std::optional<Hom> result;
      search.run([&](std::vector<index_t> const& map) {
        result = make_hom(A, S, map);
        return false;
      });
      if (result) {
        return result;
      }
    }
    return std::nullopt;
  }

  bool is_generator(Act const& A) {
    return generator_witness(A).has_value();
  }

}  // namespace acta
