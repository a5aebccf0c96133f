#include "copslab/game_value.hpp"

#include "copslab/errors.hpp"

namespace copslab {

std::uint32_t GameValue::count() const {
  if (is_escape()) throw InvariantError("GameValue: escape has no round count");
  return raw_;
}

GameValue GameValue::next() const {
  if (is_escape() || raw_ + 1 == kEscape) throw InvariantError("GameValue: arithmetic on escape");
  return GameValue(raw_ + 1);
}

std::string GameValue::to_string() const { return is_escape() ? "ESC" : std::to_string(raw_); }

}  // namespace copslab
