#include "acta/error.hpp"

namespace acta {

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::Shape:
        return "Shape";
      case ErrorKind::EntryOutOfRange:
        return "EntryOutOfRange";
      case ErrorKind::NotAssociative:
        return "NotAssociative";
      case ErrorKind::NoIdentity:
        return "NoIdentity";
      case ErrorKind::EmptyAct:
        return "EmptyAct";
      case ErrorKind::NotUnital:
        return "NotUnital";
      case ErrorKind::NotCompatible:
        return "NotCompatible";
      case ErrorKind::NotAHom:
        return "NotAHom";
      case ErrorKind::MixedMonoids:
        return "MixedMonoids";
      case ErrorKind::MixedActs:
        return "MixedActs";
      case ErrorKind::NotACongruence:
        return "NotACongruence";
      case ErrorKind::NotASubact:
        return "NotASubact";
      case ErrorKind::SizeLimitExceeded:
        return "SizeLimitExceeded";
      case ErrorKind::NoZero:
        return "NoZero";
      case ErrorKind::NonZeroRequired:
        return "NonZeroRequired";
      case ErrorKind::NotInjective:
        return "NotInjective";
      case ErrorKind::TooSmall:
        return "TooSmall";
      case ErrorKind::EmptySubset:
        return "EmptySubset";
      case ErrorKind::FamilyMeetNotDiagonal:
        return "FamilyMeetNotDiagonal";
      case ErrorKind::ChainViolation:
        return "ChainViolation";
      case ErrorKind::CapExceeded:
        return "CapExceeded";
      case ErrorKind::UnknownClaim:
        return "UnknownClaim";
      case ErrorKind::Parse:
        return "Parse";
      case ErrorKind::Io:
        return "Io";
    }
    return "Unknown";
  }

}  // namespace acta
