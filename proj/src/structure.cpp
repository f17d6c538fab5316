#include "acta/structure.hpp"

#include <algorithm>  // for all_of, includes, set_intersection
#include <iterator>   // for back_inserter

namespace acta {

  namespace {
    void check_subact(Act const& A, Subact const& B) {
      if (!is_subact(A, B.elements)) {
        throw Error(ErrorKind::NotASubact, "the set is empty or not closed under the action");
      }
    }

    bool subset_of(Subact const& x, Subact const& y) {
      return std::includes(y.elements.begin(), y.elements.end(), x.elements.begin(),
                           x.elements.end());
    }

    std::vector<index_t> intersect(std::vector<index_t> const& x,
                                   std::vector<index_t> const& y) {
      std::vector<index_t> result;
      std::set_intersection(
          x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(result));
      return result;
    }

    std::optional<Subact> intersect_all(std::vector<Subact> const& family, std::size_t m) {
      std::vector<index_t> result(m);
      for (index_t a = 0; a < m; ++a) {
        result[a] = a;
      }
      for (auto const& B : family) {
        result = intersect(result, B.elements);
      }
      if (result.empty()) {
        return std::nullopt;
      }
      return Subact{std::move(result)};
    }

    // subs must be the output of all_subacts(A).
    bool theta_simple_among(Act const& A, std::vector<Subact> const& subs, Subact const& L) {
      std::vector<index_t> fixed;
      for (index_t a : L.elements) {
        auto const row = A.row(a);
        if (std::all_of(row.begin(), row.end(), [a](index_t b) { return b == a; })) {
          fixed.push_back(a);
        }
      }
      if (fixed.size() != 1) {
        return false;
      }
      for (auto const& C : subs) {
        if (C != L && subset_of(C, L) && !(C.size() == 1 && C.elements[0] == fixed[0])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool is_large(Subact const& B, Act const& A) {
    check_subact(A, B);
    if (B.size() == A.size()) {
      return true;
    }
    Congruence const rho = rees_congruence(A, B);
    for (auto const& theta : principal_congruences(A)) {
      if (meet(theta, rho).is_diagonal()) {
        return false;
      }
    }
    return true;
  }

  index_t zero_element(Act const& A) {
    if (!A.monoid().zero()) {
      throw Error(ErrorKind::NoZero, "the monoid has no zero");
    }
    auto const z = A.zero();
    if (!z) {
      throw Error(ErrorKind::NoZero, "the act does not have exactly one fixed point");
    }
    return *z;
  }

  bool is_intersection_large(Subact const& B, Act const& A) {
    zero_element(A);
    check_subact(A, B);
    if (B.size() == 1) {
      throw Error(ErrorKind::NonZeroRequired, "the subact is the zero subact");
    }
    // Every subact contains Θ, so B ∩ C != Θ means |B ∩ C| >= 2.
    for (auto const& C : all_subacts(A)) {
      if (C.size() > 1 && intersect(B.elements, C.elements).size() < 2) {
        return false;
      }
    }
    return true;
  }

  std::vector<Subact> large_subacts(Act const& A) {
    std::vector<Subact> result;
    for (auto& B : all_subacts(A)) {
      if (is_large(B, A)) {
        result.push_back(std::move(B));
      }
    }
    return result;
  }

  std::optional<Subact> socle(Act const& A) {
    return intersect_all(large_subacts(A), A.size());
  }

  bool is_theta_simple(Act const& A) {
    auto const subs = all_subacts(A);
    return theta_simple_among(A, subs, subs.back());
  }

  bool is_theta_simple(Act const& A, Subact const& B) {
    check_subact(A, B);
    return is_theta_simple(restrict_to(A, B));
  }

  bool is_simple(Act const& A) {
    return all_subacts(A).size() == 1;
  }

  bool is_simple(Act const& A, Subact const& B) {
    check_subact(A, B);
    return is_simple(restrict_to(A, B));
  }

  std::vector<Subact> theta_simple_subacts(Act const& A) {
    auto const          subs = all_subacts(A);
    std::vector<Subact> result;
    for (auto const& L : subs) {
      if (theta_simple_among(A, subs, L)) {
        result.push_back(L);
      }
    }
    return result;
  }

  Subact s_socle(Act const& A) {
    zero_element(A);
    std::vector<bool> in(A.size(), false);
    for (auto const& L : theta_simple_subacts(A)) {
      for (index_t a : L.elements) {
        in[a] = true;
      }
    }
    Subact result;
    for (index_t a = 0; a < A.size(); ++a) {
      if (in[a]) {
        result.elements.push_back(a);
      }
    }
    return result;
  }

  Radical radical(Act const& A) {
    auto const subs = all_subacts(A);
    Radical    result;
    // The last subact is A itself.
    for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = i + 1; j + 1 < subs.size() && maximal; ++j) {
        maximal = !(subs[j].size() > subs[i].size() && subset_of(subs[i], subs[j]));
      }
      if (maximal) {
        result.maximal_subacts.push_back(subs[i]);
      }
    }
    if (result.maximal_subacts.empty()) {
      result.radical = subs.back();
    } else {
      result.radical = intersect_all(result.maximal_subacts, A.size());
    }
    return result;
  }

  bool is_completely_reducible(Act const& A) {
    for (auto const& C : decompose_indecomposable(A)) {
      if (!is_simple(A, C)) {
        return false;
      }
    }
    return true;
  }

  bool is_essential_mono(Act const& source, Act const& target, Hom const& h) {
    if (!is_hom(source, target, h.map)) {
      throw Error(ErrorKind::NotAHom, "the map is not a homomorphism");
    }
    std::vector<bool> hit(target.size(), false);
    for (index_t y : h.map) {
      if (hit[y]) {
        throw Error(ErrorKind::NotInjective, "the hom is not injective");
      }
      hit[y] = true;
    }
    return is_large(image(target, h), target);
  }

  StructureReport structure_report(Act const& A) {
    StructureReport report;
    report.large_subacts = large_subacts(A);
    report.socle         = intersect_all(report.large_subacts, A.size());
    if (A.monoid().zero() && A.zero()) {
      report.s_socle = s_socle(A);
    }
    auto rad               = radical(A);
    report.radical         = std::move(rad.radical);
    report.maximal_subacts = std::move(rad.maximal_subacts);
    report.theta_simple_subacts = theta_simple_subacts(A);
    return report;
  }

}  // namespace acta
