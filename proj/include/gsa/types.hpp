#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gsa {

using NodeId = std::int32_t;
using Symbol = std::int32_t;

inline constexpr NodeId kNoNode = -1;

// Class of the extremal string reaching a node: 1 if dropping the first
// character makes it smaller, 2 if it is a^omega, 3 if it makes it larger.
using Tau = std::uint8_t;

// Which extremal string a node stands for.
enum class Kind : std::uint8_t { Min, Max };

// Which tau class is handed to the recursive call.
enum class Direction : std::uint8_t { Type3, Type1 };

inline const char* to_string(Kind k) { return k == Kind::Min ? "min" : "max"; }
inline const char* to_string(Direction d) { return d == Direction::Type3 ? "type3" : "type1"; }

// Thrown when an internal invariant of the construction is broken. On valid
// input this indicates a bug, never a property of the input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

#define GSA_CHECK(cond, msg)                                                        \
  do {                                                                              \
    if (!(cond)) throw ::gsa::InvariantViolation(std::string(__func__) + ": " + (msg)); \
  } while (false)

}  // namespace gsa
