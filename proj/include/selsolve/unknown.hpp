#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace selsolve {

/// C: ansatz coefficients c_i. A, B: the auxiliary constants a_k, b_k of the
/// necessary conditions for I and I^-1.
enum class UnknownKind : std::uint8_t { C = 0, A = 1, B = 2 };

struct UnknownId {
  UnknownKind kind = UnknownKind::C;
  std::uint32_t index = 0;

  static constexpr UnknownId c(std::uint32_t i) { return {UnknownKind::C, i}; }
  static constexpr UnknownId a(std::uint32_t i) { return {UnknownKind::A, i}; }
  static constexpr UnknownId b(std::uint32_t i) { return {UnknownKind::B, i}; }

  constexpr std::uint64_t key() const noexcept {
    return (static_cast<std::uint64_t>(kind) << 32) | index;
  }

  friend constexpr bool operator==(UnknownId, UnknownId) = default;
  friend constexpr std::strong_ordering operator<=>(UnknownId x, UnknownId y) noexcept {
    return x.key() <=> y.key();
  }
};

char kind_letter(UnknownKind kind);
/// Throws std::invalid_argument for anything other than c, a, b.
UnknownKind kind_from_letter(char letter);

/// "c12", "a3", "b0".
std::string to_string(UnknownId id);
/// Inverse of to_string; throws std::invalid_argument.
UnknownId parse_unknown(std::string_view name);

struct UnknownIdHash {
  std::size_t operator()(UnknownId id) const noexcept {
    return std::hash<std::uint64_t>{}(id.key());
  }
};

}  // namespace selsolve
