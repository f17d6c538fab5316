// Homomorphisms, cotraces, cogeneration and subdirect decompositions.

#ifndef ACTA_COGENERATION_HPP_
#define ACTA_COGENERATION_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "act.hpp"
#include "congruence.hpp"

namespace acta {

  //! Every hom A -> B in lexicographic order of the maps.
  //!
  //! Throws MixedMonoids, and SizeLimitExceeded when more than ``limit``
  //! homs exist.
  std::vector<Hom> enumerate_homs(Act const& A, Act const& B,
                                  std::size_t limit = std::size_t(1) << 22);

  //! |Hom(A, B)| without storing the maps.
  std::size_t count_homs(Act const& A, Act const& B);

  //! A hom A -> B with h(a) != h(b), if there is one.
  std::optional<Hom> separating_hom(Act const& A, Act const& B, index_t a, index_t b);

  //! The homs into members of a class that witness a cogeneration.
  //!
  //! ``targets[i]`` is the position in the class of the codomain of
  //! ``family[i]``; ``embedding`` is the induced injective map from the
  //! source into the product of those codomains, in the mixed-radix
  //! indexing of ``product``. It is left empty if that product has 2^64 or
  //! more elements.
  struct CogenerationWitness {
    std::vector<Hom>           family;
    std::vector<std::size_t>   targets;
    std::vector<std::uint64_t> embedding;
  };

  //! The cotrace of the class Cs in A together with homs separating every
  //! pair outside it.
  struct CotraceResult {
    Congruence          cotrace;
    CogenerationWitness separators;
  };

  //! The meet of the kernels of all homs from A into members of Cs.
  //!
  //! Computed pair by pair: (a, b) lies outside the cotrace iff some hom
  //! into some member separates a and b. An empty class, or a class with
  //! no homs from A, yields ∇. Throws MixedMonoids.
  CotraceResult cotrace_with_separators(Act const& A, std::span<Act const> Cs);

  Congruence cotrace(Act const& A, std::span<Act const> Cs);

  //! Decides whether Cs cogenerates A, that is whether the cotrace is Δ.
  //! The witness, when present, has no redundant hom.
  std::optional<CogenerationWitness> cogenerates(std::span<Act const> Cs, Act const& A);

  bool is_cogenerated(std::span<Act const> Cs, Act const& A);

  //! A smallest family of homs A -> B whose kernels meet to Δ.
  struct MinimalWitness {
    std::vector<Hom> family;
    bool             proven_minimal = true;
  };

  //! Exact by increasing subset size until ``budget`` subsets have been
  //! tried, then greedy (with ``proven_minimal`` false). Absent when B does
  //! not cogenerate A.
  std::optional<MinimalWitness> minimal_witness(Act const& B, Act const& A,
                                                std::size_t budget = 1'000'000);

  //! One factor of a subdirect decomposition.
  struct SubdirectFactor {
    Congruence theta;
    Act        factor;
    Congruence monolith;  // of the factor
  };

  struct SubdirectDecomposition {
    std::vector<SubdirectFactor> factors;
    bool                         meet_is_diagonal = false;
    bool                         all_subdirectly_irreducible = false;
  };

  //! A congruence maximal among those not relating a and b.
  Congruence maximal_separating_congruence(Act const& A, index_t a, index_t b);

  //! A as a subdirect product of subdirectly irreducible factors.
  //!
  //! For every pair a != b a congruence maximal among those not relating
  //! them is found by climbing the lattice with principal joins. Factors
  //! are then kept greedily by descending size as long as they separate a
  //! pair the kept ones do not. Throws TooSmall when |A| < 2.
  SubdirectDecomposition subdirect_decomposition(Act const& A);

  //! A surjective hom A -> S_S if one exists.
  //!
  //! A hom whose image contains 1 is surjective, so it is enough to look
  //! for a hom sending some element to the identity.
  std::optional<Hom> generator_witness(Act const& A);

  bool is_generator(Act const& A);

}  // namespace acta

#endif  // ACTA_COGENERATION_HPP_
