#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace endprox {

enum class Errc {
  UnbalancedBracket,
  IllegalCharacter,
  MalformedLine,
  NonContiguousIndices,
  AsymmetricPair,
  SelfPair,
  CrossingStructure,
  TooManyCrossingLayers,
  EmptyStructure,
  ZeroMassLength,
  UnsupportedCombination,
  SizeTooLarge,
  NoRootInRange,
  TolNotAchievable,
  KTooLarge,
  EmptySequence,
  EmptyHistogram,
  NoRecords,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library. `position()` is a 0-based character or
// line offset when the error refers to a location in parsed input.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace endprox
