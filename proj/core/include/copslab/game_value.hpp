#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace copslab {

/// A capture length in rounds, or `escape` when the robber evades forever.
///
/// Escape compares greater than every finite value. It is a sentinel, not a
/// large number: asking for its round count or adding to it throws.
class GameValue {
 public:
  static constexpr GameValue escape() noexcept { return GameValue(kEscape); }
  static constexpr GameValue rounds(std::uint32_t n) noexcept { return GameValue(n); }

  constexpr bool is_escape() const noexcept { return raw_ == kEscape; }
  constexpr bool is_finite() const noexcept { return raw_ != kEscape; }

  /// Round count; throws InvariantError on escape.
  std::uint32_t count() const;

  /// One more round; throws InvariantError on escape.
  GameValue next() const;

  std::string to_string() const;  // "ESC" or the count

  friend constexpr auto operator<=>(GameValue, GameValue) = default;

 private:
  static constexpr std::uint32_t kEscape = std::numeric_limits<std::uint32_t>::max();
  explicit constexpr GameValue(std::uint32_t raw) noexcept : raw_(raw) {}
  std::uint32_t raw_;
};

}  // namespace copslab
