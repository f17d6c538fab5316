// Bounded universes of small monoids and acts, and the claim harness run
// over them.

#ifndef ACTA_UNIVERSE_HPP_
#define ACTA_UNIVERSE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "act.hpp"
#include "monoid.hpp"

namespace acta {

  //! Largest monoid order and act size the enumerators accept by default.
  inline constexpr std::size_t DEFAULT_CAP = 4;

  //! Every monoid of order at most n up to isomorphism, each in canonical
  //! form, ordered by size and then by table. Throws CapExceeded.
  std::vector<Monoid> enumerate_monoids(std::size_t n, std::size_t cap = DEFAULT_CAP);

  //! Every act over M with at most m elements up to isomorphism, each in
  //! canonical form, ordered by size and then by table. Throws CapExceeded.
  std::vector<Act> enumerate_acts(Monoid const& M, std::size_t m, std::size_t cap = DEFAULT_CAP);

  struct UniverseOptions {
    std::size_t max_monoid = 3;
    std::size_t max_act    = 4;
    //! Add the semilattice {1, 0, e, f} when it is not already enumerated.
    bool        include_named = true;
    std::size_t cap           = DEFAULT_CAP;
  };

  struct Universe {
    std::size_t                   monoid_bound = 0;
    std::size_t                   act_bound    = 0;
    std::vector<Monoid>           monoids;
    //! acts[i] are the acts over monoids[i].
    std::vector<std::vector<Act>> acts;
  };

  //! Throws CapExceeded.
  Universe build_universe(UniverseOptions const& options = {});

  enum class ClaimMode { hard, report };

  std::string to_string(ClaimMode mode);

  struct ClaimInfo {
    std::string id;
    ClaimMode   mode;
    std::string summary;
  };

  //! Every registered claim, in the order reports list them.
  std::vector<ClaimInfo> const& claim_registry();

  struct Violation {
    Table       monoid;
    Table       act;
    std::string details;
  };

  //! Tallies for one claim. checked = confirmed + skipped + violations.
  //!
  //! skipped counts instances whose hypothesis does not hold. For a
  //! report-only claim the violations are the flagged instances.
  struct ClaimResult {
    std::string            claim;
    ClaimMode              mode      = ClaimMode::hard;
    std::size_t            checked   = 0;
    std::size_t            confirmed = 0;
    std::size_t            skipped   = 0;
    std::vector<Violation> violations;
  };

  //! Runs the selected claims (all when the list is empty) over U.
  //!
  //! Work is split per monoid over ``jobs`` threads; the result does not
  //! depend on the number of threads. Throws UnknownClaim.
  std::vector<ClaimResult> run_claims(Universe const&                 U,
                                      std::vector<std::string> const& claims = {},
                                      std::size_t                     jobs   = 1);

  //! True iff some hard claim has a violation.
  bool has_hard_violation(std::vector<ClaimResult> const& results);

  struct Counterexample {
    Monoid      monoid;
    Act         act;
    std::string details;
  };

  struct CounterexampleInfo {
    std::string id;
    std::string summary;
  };

  std::vector<CounterexampleInfo> const& counterexample_registry();

  //! The first act of the universe, by monoid order, act size and then
  //! table, satisfying the named predicate. Throws UnknownClaim.
  std::optional<Counterexample> find_counterexample(std::string const& id,
                                                    UniverseOptions const& options = {});

}  // namespace acta

#endif  // ACTA_UNIVERSE_HPP_
