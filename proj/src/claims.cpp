// The claims checked over a universe. Each claim walks the acts of one
// monoid and tallies instances; the harness splits the work per monoid.

#include <algorithm>   // for all_of, find, includes
#include <atomic>      // for atomic
#include <functional>  // for function
#include <map>         // for map
#include <numeric>     // for iota
#include <sstream>     // for ostringstream
#include <thread>      // for thread
#include <tuple>       // for tuple

#include "acta/classify.hpp"
#include "acta/cogeneration.hpp"
#include "acta/congruence.hpp"
#include "acta/detail/hom_search.hpp"
#include "acta/structure.hpp"
#include "acta/universe.hpp"

namespace acta {

  namespace {
    std::string format(std::span<index_t const> xs) {
      std::ostringstream out;
      out << '[';
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out << (i == 0 ? "" : ",") << xs[i];
      }
      out << ']';
      return out.str();
    }

    std::string format(Table const& table) {
      std::string out = "[";
      for (std::size_t i = 0; i < table.size(); ++i) {
        out += (i == 0 ? "" : ",") + format(table[i]);
      }
      return out + "]";
    }

    std::string format(Congruence const& theta) {
      return format(theta.labels());
    }

    std::string format(Subact const& B) {
      return format(B.elements);
    }

    bool exists_hom(Act const& A, Act const& B, bool injective) {
      detail::HomSearch search(A, B, injective);
      bool              found = false;
      search.run([&found](std::vector<index_t> const&) {
        found = true;
        return false;
      });
      return found;
    }

    bool subset_of(std::span<index_t const> x, std::span<index_t const> y) {
      return std::includes(y.begin(), y.end(), x.begin(), x.end());
    }

    // The non-diagonal congruences of a lattice.
    std::vector<Congruence> proper(std::vector<Congruence> const& lattice) {
      std::vector<Congruence> result;
      for (auto const& theta : lattice) {
        if (!theta.is_diagonal()) {
          result.push_back(theta);
        }
      }
      return result;
    }

    // A least non-diagonal congruence found by comparing every pair.
    std::optional<Congruence> lattice_minimum(std::vector<Congruence> const& lattice) {
      auto const nd = proper(lattice);
      for (auto const& x : nd) {
        if (std::all_of(nd.begin(), nd.end(), [&x](auto const& y) { return y.contains(x); })) {
          return x;
        }
      }
      return std::nullopt;
    }

    class Tally {
     public:
      Tally(ClaimResult& result, Monoid const& M) : _result(result), _M(M) {}

      void confirm() {
        ++_result.checked;
        ++_result.confirmed;
      }

      void skip() {
        ++_result.checked;
        ++_result.skipped;
      }

      void violate(Table act, std::string details) {
        ++_result.checked;
        _result.violations.push_back({_M.table(), std::move(act), std::move(details)});
      }

      template <typename Details>
      void check(bool ok, Act const& A, Details&& details) {
        if (ok) {
          confirm();
        } else {
          violate(A.table(), details());
        }
      }

     private:
      ClaimResult&  _result;
      Monoid const& _M;
    };

    // Per monoid caches. Not shared between threads.
    class Context {
     public:
      Context(Monoid const& M, std::vector<Act> const& acts)
          : monoid(M), acts(acts), regular(regular_act(M)), _k(acts.size()) {
        for (std::size_t i = 0; i < _k; ++i) {
          auto const flat = acts[i].flat_table();
          _index.emplace(std::vector<index_t>(flat.begin(), flat.end()), i);
        }
      }

      std::size_t size() const noexcept {
        return _k;
      }

      std::vector<Congruence> const& congruences(std::size_t i) {
        if (_cons.empty()) {
          _cons.resize(_k);
        }
        if (!_cons[i]) {
          _cons[i] = all_congruences(acts[i]);
        }
        return *_cons[i];
      }

      // Position in the universe of the act isomorphic to X.
      std::size_t index_of(Act const& X) const {
        auto it = _index.find(canonical_action_table(X));
        if (it == _index.end()) {
          throw Error(ErrorKind::SizeLimitExceeded, "an act is missing from the universe");
        }
        return it->second;
      }

      // cotr_{A_i}({A_j, A_k}); j == k gives the one element class.
      Congruence const& cotr(std::size_t i, std::size_t j, std::size_t k) {
        if (j > k) {
          std::swap(j, k);
        }
        if (_cotr.empty()) {
          _cotr.resize(_k * _k * _k);
        }
        auto& slot = _cotr[(i * _k + j) * _k + k];
        if (!slot) {
          if (j == k) {
            slot = cotrace(acts[i], std::span(&acts[j], 1));
          } else {
            slot = meet(cotr(i, j, j), cotr(i, k, k));
          }
        }
        return *slot;
      }

      Congruence const& cotr(std::size_t i, std::size_t j) {
        return cotr(i, j, j);
      }

      bool cogenerated(std::size_t i, std::size_t j, std::size_t k) {
        return cotr(i, j, k).is_diagonal();
      }

      // cotr_{A_x x A_y}({A_j}).
      Congruence const& product_cotr(std::size_t x, std::size_t y, std::size_t j) {
        if (x > y) {
          std::swap(x, y);
        }
        auto key = std::make_tuple(x, y, j);
        auto it  = _product_cotr.find(key);
        if (it == _product_cotr.end()) {
          auto pit = _products.find({x, y});
          if (pit == _products.end()) {
            Act const factors[] = {acts[x], acts[y]};
            pit = _products.emplace(std::make_pair(x, y), product(factors).act).first;
          }
          it = _product_cotr.emplace(key, cotrace(pit->second, std::span(&acts[j], 1))).first;
        }
        return it->second;
      }

      bool embeds(std::size_t from, std::size_t to) {
        if (_embeds.empty()) {
          _embeds.resize(_k * _k);
        }
        auto& slot = _embeds[from * _k + to];
        if (!slot) {
          slot = exists_hom(acts[from], acts[to], true);
        }
        return *slot;
      }

      Monoid const&           monoid;
      std::vector<Act> const& acts;
      Act const               regular;

     private:
      std::size_t                                   _k;
      std::map<std::vector<index_t>, std::size_t>   _index;
      std::vector<std::optional<std::vector<Congruence>>> _cons;
      std::vector<std::optional<Congruence>>        _cotr;
      std::vector<std::optional<bool>>              _embeds;
      std::map<std::pair<std::size_t, std::size_t>, Act> _products;
      std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Congruence> _product_cotr;
    };

    using ClaimFn = void (*)(Context&, Tally&);

    ////////////////////////////////////////////////////////////////////////
    // Cogeneration
    ////////////////////////////////////////////////////////////////////////

    // B cogenerates A iff the cotrace is Δ iff some family of homs has
    // kernels meeting to Δ iff homs out of A separate every pair of
    // distinct elements, which is the separation of the homs S_S -> A.
    void hom_criteria(Context& ctx, Tally& tally) {
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        Act const& A = ctx.acts[i];
        for (std::size_t j = 0; j < ctx.size(); ++j) {
          Act const& B    = ctx.acts[j];
          auto const homs = enumerate_homs(A, B);
          Congruence kernels = full(A);
          for (auto const& h : homs) {
            kernels = meet(kernels, kernel(h));
          }
          bool separates = true;
          for (index_t a = 0; a < A.size(); ++a) {
            for (index_t b = a + 1; b < A.size(); ++b) {
              separates = separates && std::any_of(homs.begin(), homs.end(), [a, b](auto const& h) {
                            return h.map[a] != h.map[b];
                          });
            }
          }
          auto const witness = minimal_witness(B, A);
          bool       witness_ok = true;
          if (witness) {
            Congruence x = full(A);
            for (auto const& h : witness->family) {
              witness_ok = witness_ok && is_hom(A, B, h.map);
              x          = meet(x, kernel(h));
            }
            witness_ok = witness_ok && x.is_diagonal();
          }
          bool const cog = ctx.cotr(i, j).is_diagonal();
          tally.check(ctx.cotr(i, j) == kernels && cog == separates
                          && cog == witness.has_value() && witness_ok,
                      A, [&] {
                        return "target " + format(B.table()) + ": cotrace "
                               + format(ctx.cotr(i, j)) + ", kernel meet " + format(kernels);
                      });
        }
      }
    }

    // Calls visit(A, θ, j, k, cogenerated, contains) for every act A, every
    // θ in Con(A) and every class {A_j, A_k}, where cogenerated says whether
    // the class cogenerates A/θ and contains whether θ ⊇ cotr_A(class).
    template <typename Visit>
    void walk_factors(Context& ctx, Tally& tally, Visit&& visit) {
      std::size_t const K = ctx.size();
      for (std::size_t i = 0; i < K; ++i) {
        Act const& A = ctx.acts[i];
        for (auto const& theta : ctx.congruences(i)) {
          Act const         F = factor_act(A, theta).act;
          std::size_t const r = ctx.index_of(F);
          for (std::size_t j = 0; j < K; ++j) {
            for (std::size_t k = j; k < K; ++k) {
              bool const lhs = ctx.cogenerated(r, j, k);
              // Once directly on the factor rather than on its stored copy.
              bool const direct
                  = j == k ? is_cogenerated(std::span(&ctx.acts[j], 1), F) : lhs;
              bool const rhs = theta.contains(ctx.cotr(i, j, k));
              auto describe  = [&] {
                return "theta " + format(theta) + ", class " + format(ctx.acts[j].table())
                       + (j == k ? "" : " and " + format(ctx.acts[k].table()))
                       + ": factor cogenerated " + std::to_string(lhs) + ", contains cotrace "
                       + std::to_string(rhs);
              };
              if (direct != lhs) {
                tally.violate(A.table(), describe() + ", direct check disagrees");
                continue;
              }
              visit(A, theta, ctx.cotr(i, j, k), lhs, rhs, describe);
            }
          }
        }
      }
    }

    // cotr_A(C) is the least θ with A/θ cogenerated by C: every such θ
    // contains it, and A/cotr_A(C) is cogenerated.
    void cotrace_minimality(Context& ctx, Tally& tally) {
      walk_factors(ctx, tally,
                   [&](Act const& A, Congruence const& theta, Congruence const& cotr,
                       bool cogenerated, bool contains, auto const& describe) {
                     bool const is_cotr = theta == cotr;
                     tally.check((!cogenerated || contains) && (!is_cotr || cogenerated)
                                     && (is_cotr == (cotr.contains(theta) && cogenerated)),
                                 A, describe);
                   });
    }

    // The converse: every θ containing the cotrace has A/θ cogenerated.
    void cotrace_converse(Context& ctx, Tally& tally) {
      walk_factors(ctx, tally,
                   [&](Act const& A, Congruence const&, Congruence const&, bool cogenerated,
                       bool contains, auto const& describe) {
                     if (!contains) {
                       tally.skip();
                     } else {
                       tally.check(cogenerated, A, describe);
                     }
                   });
    }

    // If D is cogenerated by C then cotr_A(C) is contained in cotr_A(D).
    void cog_monotonicity(Context& ctx, Tally& tally) {
      std::size_t const K = ctx.size();
      for (std::size_t j = 0; j < K; ++j) {
        for (std::size_t k = 0; k < K; ++k) {
          bool const hypothesis = ctx.cogenerated(k, j, j);
          for (std::size_t i = 0; i < K; ++i) {
            if (!hypothesis) {
              tally.skip();
              continue;
            }
            tally.check(ctx.cotr(i, k).contains(ctx.cotr(i, j)), ctx.acts[i], [&] {
              return "C " + format(ctx.acts[j].table()) + ", D " + format(ctx.acts[k].table());
            });
          }
        }
      }
    }

    // Cog(C) is closed under monomorphic preimages and finite products.
    void cog_closure(Context& ctx, Tally& tally) {
      std::size_t const K = ctx.size();
      for (std::size_t j = 0; j < K; ++j) {
        for (std::size_t k = j; k < K; ++k) {
          std::vector<std::size_t> members;
          for (std::size_t i = 0; i < K; ++i) {
            if (ctx.cogenerated(i, j, k)) {
              members.push_back(i);
            }
          }
          auto describe = [&] {
            return "class " + format(ctx.acts[j].table())
                   + (j == k ? "" : " and " + format(ctx.acts[k].table()));
          };
          for (std::size_t i = 0; i < K; ++i) {
            bool const in = ctx.cogenerated(i, j, k);
            for (std::size_t from = 0; from < K; ++from) {
              if (!in || !ctx.embeds(from, i)) {
                tally.skip();
                continue;
              }
              tally.check(ctx.cogenerated(from, j, k), ctx.acts[i], [&] {
                return describe() + ": subobject " + format(ctx.acts[from].table())
                       + " not cogenerated";
              });
            }
          }
          for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = x; y < members.size(); ++y) {
              std::size_t const a = members[x], b = members[y];
              bool const ok = meet(ctx.product_cotr(a, b, j), ctx.product_cotr(a, b, k))
                                  .is_diagonal();
              tally.check(ok, ctx.acts[a], [&] {
                return describe() + ": product with " + format(ctx.acts[b].table())
                       + " not cogenerated";
              });
            }
          }
        }
      }
    }

    // Cog(C x D) ⊆ Cog({C, D}) ⊆ Cog(C ⊔ D), checked on the cotraces.
    void cog_sandwich(Context& ctx, Tally& tally) {
      std::size_t const K = ctx.size();
      for (std::size_t j = 0; j < K; ++j) {
        for (std::size_t k = j + 1; k < K; ++k) {
          Act const pair[] = {ctx.acts[j], ctx.acts[k]};
          Act const P      = product(pair).act;
          Act const Q      = coproduct(pair).act;
          for (std::size_t i = 0; i < K; ++i) {
            Act const&       A  = ctx.acts[i];
            Congruence const cp = cotrace(A, std::span(&P, 1));
            Congruence const cq = cotrace(A, std::span(&Q, 1));
            Congruence const& cc = ctx.cotr(i, j, k);
            bool const ok = cp.contains(cc) && cc.contains(cq)
                            && (!cp.is_diagonal() || cc.is_diagonal())
                            && (!cc.is_diagonal() || cq.is_diagonal());
            tally.check(ok, A, [&] {
              return "class " + format(pair[0].table()) + " and " + format(pair[1].table())
                     + ": product " + format(cp) + ", class " + format(cc) + ", coproduct "
                     + format(cq);
            });
          }
        }
      }
    }

    // With homs both ways between C and D, cotr_A({C, D}) equals the cotrace
    // of a single act built from them: C x D, or C ⊔ D when coproduct is set.
    void cogenerator_of_class(Context& ctx, Tally& tally, bool coproduct_form) {
      std::size_t const K = ctx.size();
      for (std::size_t j = 0; j < K; ++j) {
        for (std::size_t k = j + 1; k < K; ++k) {
          Act const  pair[]     = {ctx.acts[j], ctx.acts[k]};
          bool const hypothesis = exists_hom(pair[0], pair[1], false)
                                  && exists_hom(pair[1], pair[0], false);
          if (!hypothesis) {
            for (std::size_t i = 0; i < K; ++i) {
              tally.skip();
            }
            continue;
          }
          Act const P = coproduct_form ? coproduct(pair).act : product(pair).act;
          for (std::size_t i = 0; i < K; ++i) {
            Act const&        A  = ctx.acts[i];
            Congruence const  cp = cotrace(A, std::span(&P, 1));
            Congruence const& cc = ctx.cotr(i, j, k);
            tally.check(cp == cc, A, [&] {
              return "class " + format(pair[0].table()) + " and " + format(pair[1].table())
                     + ": " + (coproduct_form ? "coproduct " : "product ") + format(cp)
                     + ", class " + format(cc);
            });
          }
        }
      }
    }

    void cog_cogenerator(Context& ctx, Tally& tally) {
      cogenerator_of_class(ctx, tally, false);
    }

    void cog_coproduct_cogenerator(Context& ctx, Tally& tally) {
      cogenerator_of_class(ctx, tally, true);
    }

    ////////////////////////////////////////////////////////////////////////
    // Finitely cogenerated acts
    ////////////////////////////////////////////////////////////////////////

    bool indecomposable_by_partition(Act const& A, Subact const& C) {
      std::size_t const k = C.size();
      // Splits of C into two non-empty parts, the first holding C[0].
      for (std::size_t mask = 0; mask + 1 < (std::size_t(1) << (k - 1)); ++mask) {
        std::vector<index_t> left = {C.elements[0]}, right;
        for (std::size_t b = 1; b < k; ++b) {
          ((mask >> (b - 1)) & 1 ? left : right).push_back(C.elements[b]);
        }
        if (right.empty()) {
          continue;
        }
        if (is_subact(A, left) && is_subact(A, right)) {
          return false;
        }
      }
      return true;
    }

    void indecomposable_coproduct(Context& ctx, Tally& tally) {
      for (auto const& A : ctx.acts) {
        auto const        parts = decompose_indecomposable(A);
        std::vector<int>  seen(A.size(), 0);
        bool              ok = true;
        for (auto const& C : parts) {
          ok = ok && is_subact(A, C.elements) && indecomposable_by_partition(A, C);
          for (index_t a : C.elements) {
            ++seen[a];
          }
        }
        ok = ok && std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; });
        tally.check(ok, A, [&] { return std::to_string(parts.size()) + " components"; });
      }
    }

    void minimal_congruence(Context& ctx, Tally& tally) {
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        Act const& A = ctx.acts[i];
        if (A.size() < 2) {
          tally.skip();
          continue;
        }
        auto const              nd = proper(ctx.congruences(i));
        std::vector<Congruence> oracle;
        for (auto const& x : nd) {
          if (std::none_of(nd.begin(), nd.end(),
                           [&x](auto const& y) { return y != x && x.contains(y); })) {
            oracle.push_back(x);
          }
        }
        auto const found = minimal_congruences(A);
        auto const subs  = all_subacts(A);
        bool const minimal_subact
            = std::any_of(subs.begin(), subs.end(), [&subs](auto const& B) {
                return std::none_of(subs.begin(), subs.end(), [&B](auto const& C) {
                  return C != B && subset_of(C.elements, B.elements);
                });
              });
        tally.check(!found.empty() && found == oracle && minimal_subact, A, [&] {
          return std::to_string(found.size()) + " minimal congruences, oracle "
                 + std::to_string(oracle.size());
        });
      }
    }

    // Congruences above θ correspond to congruences on A/θ, and meets are
    // preserved, so a family meets to θ iff its image meets to Δ.
    void factor_correspondence(Context& ctx, Tally& tally) {
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        Act const& A       = ctx.acts[i];
        auto const& lattice = ctx.congruences(i);
        for (auto const& theta : lattice) {
          auto const              above = congruences_above(A, theta);
          std::vector<Congruence> oracle;
          for (auto const& x : lattice) {
            if (x.contains(theta)) {
              oracle.push_back(x);
            }
          }
          bool ok = above.size() == oracle.size();
          for (std::size_t x = 0; ok && x < above.size(); ++x) {
            ok = above[x].above == oracle[x];
          }
          for (std::size_t x = 0; ok && x < above.size(); ++x) {
            for (std::size_t y = x; ok && y < above.size(); ++y) {
              Congruence const down = meet(above[x].above, above[y].above);
              Congruence const up   = meet(above[x].on_factor, above[y].on_factor);
              auto const it = std::find_if(above.begin(), above.end(),
                                           [&up](auto const& c) { return c.on_factor == up; });
              ok = it != above.end() && it->above == down
                   && (down == theta) == up.is_diagonal();
            }
          }
          tally.check(ok, A, [&] { return "theta " + format(theta); });
        }
      }
    }

    // A/ρ_Rad embeds in the product of the A/ρ_M over the maximal subacts
    // M, and each A/ρ_M is θ-simple. The second part is checked when A has
    // a zero, the setting in which Θ is defined.
    void rad_embedding(Context& ctx, Tally& tally) {
      for (auto const& A : ctx.acts) {
        auto const rad = radical(A);
        if (rad.maximal_subacts.empty() || !rad.radical) {
          tally.skip();
          continue;
        }
        FactorAct const  top = factor_act(A, rees_congruence(A, *rad.radical));
        std::vector<Act> factors;
        std::vector<Hom> projections;
        for (auto const& M : rad.maximal_subacts) {
          auto f = factor_act(A, rees_congruence(A, M));
          factors.push_back(std::move(f.act));
          projections.push_back(std::move(f.projection));
        }
        ProductAct const     P = product(factors);
        std::vector<index_t> map(top.act.size(), UNDEFINED);
        std::vector<index_t> tuple(factors.size());
        for (index_t a = 0; a < A.size(); ++a) {
          for (std::size_t i = 0; i < factors.size(); ++i) {
            tuple[i] = projections[i].map[a];
          }
          map[top.projection.map[a]] = P.encode(tuple);
        }
        bool const hom       = is_hom(top.act, P.act, map);
        bool const injective = hom && make_hom(top.act, P.act, map).injective;
        bool       simple    = true;
        if (A.monoid().zero() && A.zero()) {
          simple = std::all_of(factors.begin(), factors.end(),
                               [](auto const& F) { return is_theta_simple(F); });
        }
        tally.check(injective && simple, A, [&] {
          return "radical " + format(*rad.radical) + ", " + std::to_string(factors.size())
                 + " maximal subacts, injective " + std::to_string(injective)
                 + ", factors theta-simple " + std::to_string(simple);
        });
      }
    }

    // The same factors without a zero; reported, not asserted.
    void rad_factors_general(Context& ctx, Tally& tally) {
      for (auto const& A : ctx.acts) {
        auto const rad = radical(A);
        if (rad.maximal_subacts.empty() || !rad.radical
            || (A.monoid().zero() && A.zero())) {
          tally.skip();
          continue;
        }
        std::string bad;
        for (auto const& M : rad.maximal_subacts) {
          if (!is_theta_simple(factor_act(A, rees_congruence(A, M)).act)) {
            bad += (bad.empty() ? "" : " ") + format(M);
          }
        }
        if (bad.empty()) {
          tally.confirm();
        } else {
          tally.violate(A.table(), "radical " + format(*rad.radical)
                                       + ", A/M not theta-simple for M = " + bad);
        }
      }
    }

    void socle_large(Context& ctx, Tally& tally) {
      for (auto const& A : ctx.acts) {
        auto const soc = socle(A);
        if (!soc) {
          tally.violate(A.table(), "socle empty");
        } else if (!is_large(*soc, A)) {
          tally.violate(A.table(), "socle " + format(*soc) + " not large");
        } else {
          tally.confirm();
        }
      }
    }

    void si_consistency(Context& ctx, Tally& tally) {
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        Act const& A = ctx.acts[i];
        if (A.size() < 2) {
          tally.skip();
          continue;
        }
        auto const& lattice = ctx.congruences(i);
        auto const  nd      = proper(lattice);
        bool const  si      = is_subdirectly_irreducible(A);
        auto const  minimum = lattice_minimum(lattice);
        // Some ρ(a, a') is the minimum, and every congruence separating
        // such a pair is Δ.
        bool principal_minimum = false, separating_injective = false;
        for (index_t a = 0; a < A.size(); ++a) {
          for (index_t b = a + 1; b < A.size(); ++b) {
            Congruence const rho = principal_congruence(A, a, b);
            principal_minimum    = principal_minimum
                                || std::all_of(nd.begin(), nd.end(),
                                               [&rho](auto const& y) { return y.contains(rho); });
            separating_injective = separating_injective
                                   || std::all_of(nd.begin(), nd.end(), [a, b](auto const& y) {
                                        return y.related(a, b);
                                      });
          }
        }
        bool const meet_nd     = !meet_all(A.size(), nd).is_diagonal();
        bool const irreducible = is_irreducible(A);
        bool       hereditary  = true;
        if (si) {
          for (auto const& B : all_subacts(A)) {
            if (B.size() >= 2) {
              hereditary = hereditary && is_subdirectly_irreducible(restrict_to(A, B));
            }
          }
        }
        auto const mono = monolith(A);
        bool const ok   = si == minimum.has_value() && si == principal_minimum
                        && si == separating_injective && si == meet_nd && si == irreducible
                        && hereditary && (!si || mono == minimum);
        tally.check(ok, A, [&] {
          return "si " + std::to_string(si) + ", lattice minimum "
                 + std::to_string(minimum.has_value()) + ", irreducible "
                 + std::to_string(irreducible) + ", hereditary " + std::to_string(hereditary);
        });
      }
    }

    void birkhoff(Context& ctx, Tally& tally) {
      for (auto const& A : ctx.acts) {
        if (A.size() < 2) {
          tally.skip();
          continue;
        }
        auto const              dec = subdirect_decomposition(A);
        std::vector<Congruence> thetas;
        bool                    ok = dec.meet_is_diagonal && dec.all_subdirectly_irreducible;
        for (auto const& f : dec.factors) {
          thetas.push_back(f.theta);
          ok = ok && factor_act(A, f.theta).act == f.factor
               && lattice_minimum(all_congruences(f.factor)) == f.monolith;
        }
        ok = ok && meet_all(A.size(), thetas).is_diagonal();
        tally.check(ok, A, [&] { return std::to_string(thetas.size()) + " factors"; });
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Socles and essential monomorphisms
    ////////////////////////////////////////////////////////////////////////

    bool has_zero(Act const& A) {
      return A.monoid().zero() && A.zero();
    }

    void large_implies_cap_large(Context& ctx, Tally& tally) {
      for (auto const& A : ctx.acts) {
        if (!has_zero(A)) {
          tally.skip();
          continue;
        }
        for (auto const& B : large_subacts(A)) {
          if (B.size() < 2) {
            tally.skip();
            continue;
          }
          tally.check(is_intersection_large(B, A), A,
                      [&] { return "large subact " + format(B) + " not cap-large"; });
        }
      }
    }

    // S(A) as a union of θ-simple subacts equals the intersection of the
    // ∩-large subacts and lies in Soc(A).
    void s_socle_claim(Context& ctx, Tally& tally) {
      for (auto const& A : ctx.acts) {
        if (!has_zero(A)) {
          tally.skip();
          continue;
        }
        Subact const         S = s_socle(A);
        std::vector<index_t> meet_form(A.size());
        std::iota(meet_form.begin(), meet_form.end(), 0);
        for (auto const& B : all_subacts(A)) {
          if (B.size() >= 2 && is_intersection_large(B, A)) {
            std::vector<index_t> next;
            std::set_intersection(meet_form.begin(), meet_form.end(), B.elements.begin(),
                                  B.elements.end(), std::back_inserter(next));
            meet_form = std::move(next);
          }
        }
        auto const soc = socle(A);
        bool const ok  = S.elements == meet_form && (!soc || subset_of(S.elements, soc->elements));
        tally.check(ok, A, [&] {
          return "S(A) " + format(S) + ", meet form " + format(meet_form) + ", socle "
                 + (soc ? format(*soc) : "empty");
        });
      }
    }

    // is_essential_mono against the definition, with g ranging over the
    // quotient maps A -> A/θ; any g factors through A/ker g.
    void essential_mono(Context& ctx, Tally& tally) {
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        Act const& A = ctx.acts[i];
        for (auto const& B : all_subacts(A)) {
          Act const source = restrict_to(A, B);
          Hom const h      = make_hom(source, A, B.elements);
          bool      oracle = true;
          for (auto const& theta : ctx.congruences(i)) {
            auto const       g = factor_act(A, theta).projection;
            std::vector<index_t> gh(B.size());
            for (index_t b = 0; b < B.size(); ++b) {
              gh[b] = g.map[h.map[b]];
            }
            bool const gh_injective
                = Congruence::from_partition_unchecked(gh).is_diagonal();
            oracle = oracle && (!gh_injective || g.injective);
          }
          tally.check(is_essential_mono(source, A, h) == oracle, A,
                      [&] { return "subact " + format(B); });
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Faithful acts and the chain
    ////////////////////////////////////////////////////////////////////////

    // Coproducts of one to three right ideals eS, e idempotent, as sorted
    // lists of idempotents.
    std::vector<Act> projective_family(Act const& S, std::size_t max_summands) {
      std::vector<Act> ideals;
      for (index_t e : S.monoid().idempotents()) {
        ideals.push_back(restrict_to(S, cyclic_subact(S, e)));
      }
      std::vector<Act>         result;
      std::vector<std::size_t> choice;
      std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (!choice.empty()) {
          std::vector<Act> summands;
          for (auto c : choice) {
            summands.push_back(ideals[c]);
          }
          result.push_back(coproduct(summands).act);
        }
        if (choice.size() == max_summands) {
          return;
        }
        for (std::size_t c = from; c < ideals.size(); ++c) {
          choice.push_back(c);
          extend(c);
          choice.pop_back();
        }
      };
      extend(0);
      return result;
    }

    // Faithful iff A cogenerates S_S iff A cogenerates every cyclic
    // projective eS, or every coproduct of up to three of them.
    void cogenerates_projectives(Context& ctx, Tally& tally, std::size_t max_summands) {
      auto const family = projective_family(ctx.regular, max_summands);
      for (auto const& A : ctx.acts) {
        bool const faithful = is_faithful(A);
        bool const regular  = is_cogenerated(std::span(&A, 1), ctx.regular);
        bool       all      = true;
        for (auto const& P : family) {
          all = all && is_cogenerated(std::span(&A, 1), P);
        }
        tally.check(faithful == regular && regular == all, A, [&] {
          return "faithful " + std::to_string(faithful) + ", cogenerates S "
                 + std::to_string(regular) + ", cogenerates the projectives "
                 + std::to_string(all);
        });
      }
    }

    void faithful_cogenerates(Context& ctx, Tally& tally) {
      cogenerates_projectives(ctx, tally, 1);
    }

    void faithful_cogenerates_projectives(Context& ctx, Tally& tally) {
      cogenerates_projectives(ctx, tally, 3);
    }

    // The least n with an injective hom S_S -> A^n, found by search.
    std::optional<std::size_t> least_power(Act const& S, Act const& A) {
      for (std::size_t n = 1; n <= A.size(); ++n) {
        std::vector<Act> copies(n, A);
        if (exists_hom(S, product(copies).act, true)) {
          return n;
        }
      }
      return std::nullopt;
    }

    void cofaithful_lemma(Context& ctx, Tally& tally) {
      for (auto const& A : ctx.acts) {
        auto const w = cofaithful_witness(A);
        auto const n = least_power(ctx.regular, A);
        bool       ok = w.has_value() == n.has_value();
        if (ok && w) {
          ok = w->n() == *n && right_annihilator(A, w->subset).is_diagonal();
          std::vector<Act> copies(w->n(), A);
          ProductAct const P = product(copies);
          std::vector<index_t> map;
          for (auto const& tuple : w->embedding) {
            map.push_back(P.encode(tuple));
          }
          ok = ok && is_hom(ctx.regular, P.act, map)
               && make_hom(ctx.regular, P.act, map).injective;
        }
        tally.check(ok, A, [&] {
          return "witness size " + (w ? std::to_string(w->n()) : std::string("none"))
                 + ", least power " + (n ? std::to_string(*n) : std::string("none"));
        });
      }
    }

    // A cofaithful act has a finitely generated faithful subact; over a
    // commutative monoid a faithful subact generated by X gives R_S(X) = Δ.
    void cofaithful_subact(Context& ctx, Tally& tally) {
      bool const commutative = ctx.monoid.is_commutative();
      for (auto const& A : ctx.acts) {
        auto const w = cofaithful_witness(A);
        if (!w) {
          tally.skip();
        } else {
          Subact const B = generated_subact(A, w->subset);
          tally.check(is_faithful(restrict_to(A, B)), A,
                      [&] { return "subact " + format(B) + " not faithful"; });
        }
        if (!commutative) {
          continue;
        }
        for (std::size_t mask = 1; mask < (std::size_t(1) << A.size()); ++mask) {
          std::vector<index_t> X;
          for (index_t a = 0; a < A.size(); ++a) {
            if ((mask >> a) & 1) {
              X.push_back(a);
            }
          }
          if (!is_faithful(restrict_to(A, generated_subact(A, X)))) {
            tally.skip();
            continue;
          }
          tally.check(right_annihilator(A, X).is_diagonal() && cofaithful_witness(A), A,
                      [&] { return "generators " + format(X); });
        }
      }
    }

    void chain(Context& ctx, Tally& tally) {
      for (auto const& A : ctx.acts) {
        try {
          auto const c = classification_report(A);
          bool const ok
              = (!c.generator || c.subgenerator) && (!c.subgenerator || c.cofaithful)
                && (!c.cofaithful || c.faithful) && c.generator == is_generator(A);
          tally.check(ok, A, [] { return std::string("inconsistent classification"); });
        } catch (Error const& e) {
          if (e.kind() != ErrorKind::ChainViolation) {
            throw;
          }
          tally.violate(A.table(), e.what());
        }
      }
    }

    void faithful_cofaithful(Context& ctx, Tally& tally) {
      for (auto const& A : ctx.acts) {
        if (!is_faithful(A)) {
          tally.skip();
          continue;
        }
        tally.check(cofaithful_witness(A).has_value(), A,
                    [] { return std::string("faithful but not cofaithful"); });
      }
    }

    // S_S irreducible makes every cofaithful act a subgenerator. For
    // commutative S that is not, S/ρ ⊔ S/σ with ρ ∩ σ = Δ is cofaithful
    // but not a subgenerator.
    void irreducible_s(Context& ctx, Tally& tally) {
      Act const& S = ctx.regular;
      if (is_irreducible(S)) {
        for (auto const& A : ctx.acts) {
          if (!cofaithful_witness(A)) {
            tally.skip();
            continue;
          }
          tally.check(is_subgenerator(A).has_value(), A,
                      [] { return std::string("cofaithful but not a subgenerator"); });
        }
        return;
      }
      if (S.size() < 2 || !ctx.monoid.is_commutative()) {
        tally.skip();
        return;
      }
      auto const nd = proper(all_congruences(S));
      for (std::size_t x = 0; x < nd.size(); ++x) {
        for (std::size_t y = x + 1; y < nd.size(); ++y) {
          if (!meet(nd[x], nd[y]).is_diagonal()) {
            continue;
          }
          Act const parts[] = {factor_act(S, nd[x]).act, factor_act(S, nd[y]).act};
          Act const A       = coproduct(parts).act;
          tally.check(cofaithful_witness(A) && !is_subgenerator(A), A, [&] {
            return "congruences " + format(nd[x]) + " and " + format(nd[y]);
          });
          return;
        }
      }
      tally.violate(S.table(), "not irreducible, yet no two proper congruences meet to Δ");
    }

    struct Claim {
      ClaimInfo info;
      ClaimFn   fn;
    };

    std::vector<Claim> const& claims() {
      static std::vector<Claim> const list = {
          {{"hom-criteria", ClaimMode::hard,
            "cogeneration by one act via cotrace, hom families and separation agree"},
           hom_criteria},
          {{"cotrace-minimality", ClaimMode::hard,
            "the cotrace is the least theta with A/theta cogenerated by the class"},
           cotrace_minimality},
          {{"cotrace-converse", ClaimMode::report,
            "theta containing the cotrace makes A/theta cogenerated by the class"},
           cotrace_converse},
          {{"cog-monotonicity", ClaimMode::hard,
            "D in Cog(C) implies cotr(C) is contained in cotr(D)"},
           cog_monotonicity},
          {{"cog-closure", ClaimMode::hard,
            "Cog(C) is closed under subobjects and finite products"},
           cog_closure},
          {{"cog-sandwich", ClaimMode::hard, "Cog(C x D) in Cog({C, D}) in Cog(C + D)"},
           cog_sandwich},
          {{"cog-cogenerator", ClaimMode::hard,
            "with homs both ways, the product has the cotrace of the class"},
           cog_cogenerator},
          {{"cog-coproduct-cogenerator", ClaimMode::report,
            "with homs both ways, the coproduct has the cotrace of the class"},
           cog_coproduct_cogenerator},
          {{"indecomposable-coproduct", ClaimMode::hard,
            "A is the disjoint union of finitely many indecomposable subacts"},
           indecomposable_coproduct},
          {{"minimal-congruence", ClaimMode::hard,
            "A with two or more elements has a minimal congruence and a minimal subact"},
           minimal_congruence},
          {{"factor-correspondence", ClaimMode::hard,
            "congruences above theta match Con(A/theta) and preserve meets"},
           factor_correspondence},
          {{"rad-embedding", ClaimMode::hard,
            "A/Rad embeds in the product of the A/M, each theta-simple when A has a zero"},
           rad_embedding},
          {{"rad-factors-general", ClaimMode::report,
            "A/M theta-simple for every maximal M, for acts without a zero"},
           rad_factors_general},
          {{"socle-large", ClaimMode::report, "Soc(A) is non-empty and large"}, socle_large},
          {{"si-consistency", ClaimMode::hard,
            "the characterizations of subdirect irreducibility agree"},
           si_consistency},
          {{"birkhoff", ClaimMode::hard,
            "the subdirect decomposition meets to the diagonal with s.i. factors"},
           birkhoff},
          {{"large-implies-cap-large", ClaimMode::hard, "every large subact is cap-large"},
           large_implies_cap_large},
          {{"s-socle", ClaimMode::hard,
            "the two forms of S(A) agree and S(A) lies in Soc(A)"},
           s_socle_claim},
          {{"essential-mono", ClaimMode::hard,
            "essential monomorphisms are those with large image"},
           essential_mono},
          {{"faithful-cogenerates", ClaimMode::hard,
            "faithful iff cogenerates S iff cogenerates every eS"},
           faithful_cogenerates},
          {{"faithful-cogenerates-projectives", ClaimMode::report,
            "faithful iff cogenerates every coproduct of up to three eS"},
           faithful_cogenerates_projectives},
          {{"cofaithful-lemma", ClaimMode::hard,
            "a least annihilating subset has the size of the least power embedding S"},
           cofaithful_lemma},
          {{"cofaithful-subact", ClaimMode::hard,
            "cofaithful acts have finitely generated faithful subacts, and conversely "
            "over commutative monoids"},
           cofaithful_subact},
          {{"chain", ClaimMode::hard,
            "generator implies subgenerator implies cofaithful implies faithful"},
           chain},
          {{"faithful-cofaithful", ClaimMode::hard, "every faithful finite act is cofaithful"},
           faithful_cofaithful},
          {{"irreducible-s", ClaimMode::hard,
            "S_S irreducible makes cofaithful acts subgenerators; the converse for "
            "commutative S"},
           irreducible_s},
      };
      return list;
    }

    Claim const& find_claim(std::string const& id) {
      for (auto const& c : claims()) {
        if (c.info.id == id) {
          return c;
        }
      }
      throw Error(ErrorKind::UnknownClaim, "no claim named " + id);
    }
  }  // namespace

  std::string to_string(ClaimMode mode) {
    return mode == ClaimMode::hard ? "hard" : "report";
  }

  std::vector<ClaimInfo> const& claim_registry() {
    static std::vector<ClaimInfo> const list = [] {
      std::vector<ClaimInfo> result;
      for (auto const& c : claims()) {
        result.push_back(c.info);
      }
      return result;
    }();
    return list;
  }

  std::vector<ClaimResult> run_claims(Universe const&                 U,
                                      std::vector<std::string> const& selection,
                                      std::size_t                     jobs) {
    std::vector<Claim const*> chosen;
    if (selection.empty()) {
      for (auto const& c : claims()) {
        chosen.push_back(&c);
      }
    } else {
      for (auto const& id : selection) {
        Claim const* c = &find_claim(id);
        if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) {
          chosen.push_back(c);
        }
      }
    }

    std::size_t const M = U.monoids.size();
    // partial[m][c] holds the tallies of claim c over monoid m.
    std::vector<std::vector<ClaimResult>> partial(M, std::vector<ClaimResult>(chosen.size()));
    std::vector<std::exception_ptr>       errors(M);
    std::atomic<std::size_t>              next = 0;
    auto                                  work = [&] {
      for (std::size_t m = next++; m < M; m = next++) {
        try {
          Context ctx(U.monoids[m], U.acts[m]);
          for (std::size_t c = 0; c < chosen.size(); ++c) {
            Tally tally(partial[m][c], U.monoids[m]);
            chosen[c]->fn(ctx, tally);
          }
        } catch (...) {
          errors[m] = std::current_exception();
        }
      }
    };
    std::size_t const threads = std::max<std::size_t>(1, std::min(jobs, M));
    if (threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(work);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }

    std::vector<ClaimResult> results;
    for (std::size_t c = 0; c < chosen.size(); ++c) {
      ClaimResult r;
      r.claim = chosen[c]->info.id;
      r.mode  = chosen[c]->info.mode;
      for (std::size_t m = 0; m < M; ++m) {
        auto& p = partial[m][c];
        r.checked += p.checked;
        r.confirmed += p.confirmed;
        r.skipped += p.skipped;
        for (auto& v : p.violations) {
          r.violations.push_back(std::move(v));
        }
      }
      results.push_back(std::move(r));
    }
    return results;
  }

  bool has_hard_violation(std::vector<ClaimResult> const& results) {
    return std::any_of(results.begin(), results.end(), [](auto const& r) {
      return r.mode == ClaimMode::hard && !r.violations.empty();
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Counterexamples
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Predicate {
      CounterexampleInfo                        info;
      std::optional<std::string> (*test)(Act const&);
    };

    std::vector<Predicate> const& predicates() {
      static std::vector<Predicate> const list = {
          {{"cofaithful-not-subgenerator", "cofaithful but not a subgenerator"},
           [](Act const& A) -> std::optional<std::string> {
             auto const w = cofaithful_witness(A);
             if (w && !is_subgenerator(A)) {
               return "annihilating subset " + format(w->subset);
             }
             return std::nullopt;
           }},
          {{"faithful-not-cofaithful", "faithful but not cofaithful"},
           [](Act const& A) -> std::optional<std::string> {
             if (is_faithful(A) && !cofaithful_witness(A)) {
               return "faithful, no annihilating subset";
             }
             return std::nullopt;
           }},
          {{"subgenerator-not-generator", "subgenerator but not a generator"},
           [](Act const& A) -> std::optional<std::string> {
             auto const a = is_subgenerator(A);
             if (a && !is_generator(A)) {
               return "element " + std::to_string(*a) + " has trivial annihilator";
             }
             return std::nullopt;
           }},
      };
      return list;
    }
  }  // namespace

  std::vector<CounterexampleInfo> const& counterexample_registry() {
    static std::vector<CounterexampleInfo> const list = [] {
      std::vector<CounterexampleInfo> result;
      for (auto const& p : predicates()) {
        result.push_back(p.info);
      }
      return result;
    }();
    return list;
  }

  std::optional<Counterexample> find_counterexample(std::string const&     id,
                                                    UniverseOptions const& options) {
    auto const it = std::find_if(predicates().begin(), predicates().end(),
                                 [&id](auto const& p) { return p.info.id == id; });
    if (it == predicates().end()) {
      throw Error(ErrorKind::UnknownClaim, "no counterexample search named " + id);
    }
    Universe const U = build_universe(options);
    // Smallest by monoid order, then act size, then monoid table and act
    // table; monoids are stored by order then table and acts by size then
    // table.
    std::size_t first = 0;
    while (first < U.monoids.size()) {
      std::size_t last = first;
      while (last < U.monoids.size() && U.monoids[last].size() == U.monoids[first].size()) {
        ++last;
      }
      for (std::size_t size = 1; size <= U.act_bound; ++size) {
        for (std::size_t m = first; m < last; ++m) {
          for (auto const& A : U.acts[m]) {
            if (A.size() != size) {
              continue;
            }
            if (auto details = it->test(A)) {
              return Counterexample{U.monoids[m], A, std::move(*details)};
            }
          }
        }
      }
      first = last;
    }
    return std::nullopt;
  }

}  // namespace acta
