#include "sweepline/error.hpp"

namespace sweepline {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ConeCountTooSmall: return "ConeCountTooSmall";
    case Errc::GammaOutOfRange: return "GammaOutOfRange";
    case Errc::DegenerateDirection: return "DegenerateDirection";
    case Errc::WrongCone: return "WrongCone";
    case Errc::BadIndex: return "BadIndex";
    case Errc::InvalidInstance: return "InvalidInstance";
    case Errc::ParseError: return "ParseError";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::TrivialRoute: return "TrivialRoute";
    case Errc::UnsupportedSetting: return "UnsupportedSetting";
    case Errc::RoutingStalled: return "RoutingStalled";
    case Errc::BadBaseline: return "BadBaseline";
    case Errc::BadTriple: return "BadTriple";
  }
  return "Unknown";
}

}  // namespace sweepline
