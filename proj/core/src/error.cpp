#include "endprox/error.hpp"

namespace endprox {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::UnbalancedBracket: return "UnbalancedBracket";
    case Errc::IllegalCharacter: return "IllegalCharacter";
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::NonContiguousIndices: return "NonContiguousIndices";
    case Errc::AsymmetricPair: return "AsymmetricPair";
    case Errc::SelfPair: return "SelfPair";
    case Errc::CrossingStructure: return "CrossingStructure";
    case Errc::TooManyCrossingLayers: return "TooManyCrossingLayers";
    case Errc::EmptyStructure: return "EmptyStructure";
    case Errc::ZeroMassLength: return "ZeroMassLength";
    case Errc::UnsupportedCombination: return "UnsupportedCombination";
    case Errc::SizeTooLarge: return "SizeTooLarge";
    case Errc::NoRootInRange: return "NoRootInRange";
    case Errc::TolNotAchievable: return "TolNotAchievable";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::EmptyHistogram: return "EmptyHistogram";
    case Errc::NoRecords: return "NoRecords";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string format_message(Errc code, const std::string& message,
                           std::optional<std::size_t> position) {
  std::string out(to_string(code));
  if (position) out += " at " + std::to_string(*position);
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(Errc code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(format_message(code, message, position)),
      code_(code),
      position_(position) {}

}  // namespace endprox
