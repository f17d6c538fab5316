// Error type shared by every module of the library.

#ifndef ACTA_ERROR_HPP_
#define ACTA_ERROR_HPP_

#include <cstdint>    // for uint32_t
#include <limits>     // for numeric_limits
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <vector>     // for vector

namespace acta {

  //! Elements of monoids and acts are dense indices.
  using index_t = std::uint32_t;

  inline constexpr index_t UNDEFINED = std::numeric_limits<index_t>::max();

  enum class ErrorKind {
    Shape,
    EntryOutOfRange,
    NotAssociative,
    NoIdentity,
    EmptyAct,
    NotUnital,
    NotCompatible,
    NotAHom,
    MixedMonoids,
    MixedActs,
    NotACongruence,
    NotASubact,
    SizeLimitExceeded,
    NoZero,
    NonZeroRequired,
    NotInjective,
    TooSmall,
    EmptySubset,
    FamilyMeetNotDiagonal,
    ChainViolation,
    CapExceeded,
    UnknownClaim,
    Parse,
    Io
  };

  char const* to_string(ErrorKind kind) noexcept;

  //! Thrown by every operation that rejects its input.
  //!
  //! The witness holds the offending indices where one exists, for example
  //! the triple (s, t, u) for a failed associativity check.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& msg, std::vector<index_t> witness = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
          _kind(kind),
          _witness(std::move(witness)) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::vector<index_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    ErrorKind            _kind;
    std::vector<index_t> _witness;
  };

}  // namespace acta

#endif  // ACTA_ERROR_HPP_
