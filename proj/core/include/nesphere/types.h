#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nesphere {

/// Input that cannot be parsed or violates a documented precondition.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure: singular system, solver non-convergence.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NeType { Per, Loc, Org };

inline constexpr std::array<NeType, 3> kNeTypes = {NeType::Per, NeType::Loc,
                                                   NeType::Org};

std::string_view to_string(NeType type);
std::optional<NeType> ne_type_from_string(std::string_view text);

/// Ordered token sequence naming one (possibly multi-word) named entity.
struct Phrase {
  std::vector<std::string> tokens;

  bool operator==(const Phrase&) const = default;
  auto operator<=>(const Phrase&) const = default;

  /// Splits a line on runs of spaces/tabs; surrounding whitespace ignored.
  static Phrase from_line(std::string_view line);

  /// Tokens joined by single spaces, the on-disk form.
  std::string joined() const;

  bool empty() const { return tokens.empty(); }
};

}  // namespace nesphere
