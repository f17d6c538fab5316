#include "acta/classify.hpp"

#include <algorithm>  // for all_of
#include <numeric>    // for iota
#include <string>     // for string

#include "acta/cogeneration.hpp"

namespace acta {

  namespace {
    FiniteCogenerationResult smallest(std::span<Congruence const> family, std::size_t m) {
      if (!meet_all(m, family).is_diagonal()) {
        throw Error(ErrorKind::FamilyMeetNotDiagonal, "the family does not meet to Δ");
      }
      auto found = smallest_subfamily_with_meet(family, diagonal(m));
      if (!found) {
        throw Error(ErrorKind::SizeLimitExceeded, "too many subfamilies to search");
      }
      FiniteCogenerationResult result;
      result.subfamily = std::move(*found);
      return result;
    }
  }  // namespace

  Congruence right_annihilator(Act const& A, std::span<index_t const> subset) {
    if (subset.empty()) {
      throw Error(ErrorKind::EmptySubset, "the subset is empty");
    }
    for (index_t a : subset) {
      if (a >= A.size()) {
        throw Error(ErrorKind::EntryOutOfRange, "element outside the act", {a});
      }
    }
    std::size_t const    n = A.monoid().size();
    std::vector<index_t> labels(n);
    // s and t are related iff the columns of s and t agree on the subset.
    for (index_t s = 0; s < n; ++s) {
      labels[s] = s;
      for (index_t t = 0; t < s; ++t) {
        if (std::all_of(subset.begin(), subset.end(),
                        [&](index_t a) { return A.act(a, s) == A.act(a, t); })) {
          labels[s] = t;
          break;
        }
      }
    }
    return Congruence::from_partition_unchecked(labels);
  }

  Congruence right_annihilator(Act const& A) {
    std::vector<index_t> all(A.size());
    std::iota(all.begin(), all.end(), 0);
    return right_annihilator(A, all);
  }

  bool is_faithful(Act const& A) {
    return right_annihilator(A).is_diagonal();
  }

  std::optional<CofaithfulWitness> cofaithful_witness(Act const& A) {
    if (!is_faithful(A)) {
      return std::nullopt;
    }
    std::size_t const m = A.size();
    CofaithfulWitness result;
    for (std::size_t k = 1; k <= m && result.subset.empty(); ++k) {
      std::vector<index_t> choice(k);
      std::iota(choice.begin(), choice.end(), 0);
      while (true) {
        if (right_annihilator(A, choice).is_diagonal()) {
          result.subset = choice;
          break;
        }
        std::size_t i = k;
        while (i > 0 && choice[i - 1] == m - k + i - 1) {
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
    for (index_t s = 0; s < A.monoid().size(); ++s) {
      auto& tuple = result.embedding.emplace_back();
      for (index_t b : result.subset) {
        tuple.push_back(A.act(b, s));
      }
    }
    return result;
  }

  std::optional<index_t> is_subgenerator(Act const& A) {
    for (index_t a = 0; a < A.size(); ++a) {
      index_t const single[] = {a};
      if (right_annihilator(A, single).is_diagonal()) {
        return a;
      }
    }
    return std::nullopt;
  }

  bool is_subdirectly_irreducible(Act const& A) {
    return A.size() >= 2 && monolith(A).has_value();
  }

  bool is_irreducible(Act const& A) {
    if (A.size() < 2) {
      return false;
    }
    auto const principal = principal_congruences(A);
    for (std::size_t i = 0; i < principal.size(); ++i) {
      for (std::size_t j = i + 1; j < principal.size(); ++j) {
        if (meet(principal[i], principal[j]).is_diagonal()) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteCogenerationResult finitely_cogenerated_check(Act const&) {
    FiniteCogenerationResult result;
    result.trivial = true;
    return result;
  }

  FiniteCogenerationResult finitely_cogenerated_check(Act const& A,
                                                      std::span<Congruence const> family) {
    for (auto const& theta : family) {
      if (theta.size() != A.size()) {
        throw Error(ErrorKind::MixedActs, "a member of the family is not on this act");
      }
      if (!is_compatible(A, theta.labels())) {
        throw Error(ErrorKind::NotACongruence, "a member of the family is not a congruence");
      }
    }
    return smallest(family, A.size());
  }

  FiniteCogenerationResult finitely_rees_cogenerated_check(Act const& A) {
    return finitely_cogenerated_check(A);
  }

  FiniteCogenerationResult finitely_rees_cogenerated_check(Act const&              A,
                                                           std::span<Subact const> family) {
    std::vector<Congruence> rees;
    for (auto const& B : family) {
      rees.push_back(rees_congruence(A, B));
    }
    return smallest(rees, A.size());
  }

  Classification classification_report(Act const& A) {
    Classification c;
    c.faithful = is_faithful(A);
    if (auto w = cofaithful_witness(A)) {
      c.cofaithful_n = w->n();
      c.cofaithful   = std::move(w->subset);
    }
    c.subgenerator            = is_subgenerator(A);
    c.generator               = is_generator(A);
    c.subdirectly_irreducible = is_subdirectly_irreducible(A);
    c.irreducible             = is_irreducible(A);

    std::string broken;
    if (c.generator && !c.subgenerator) {
      broken = "generator but not subgenerator";
    } else if (c.subgenerator && !c.cofaithful) {
      broken = "subgenerator but not cofaithful";
    } else if (c.cofaithful && !c.faithful) {
      broken = "cofaithful but not faithful";
    }
    if (!broken.empty()) {
      throw Error(ErrorKind::ChainViolation, broken);
    }
    return c;
  }

}  // namespace acta
