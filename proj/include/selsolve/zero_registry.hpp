#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "selsolve/unknown.hpp"

namespace selsolve {

/// Set of unknowns known to vanish, with O(1) membership. Grows monotonically;
/// owned by one solve, never shared as global state.
class ZeroRegistry {
 public:
  bool contains(UnknownId id) const noexcept {
    const auto& bits = marks_[static_cast<std::size_t>(id.kind)];
    return id.index < bits.size() && bits[id.index] != 0;
  }

  /// True if id was not registered before.
  bool insert(UnknownId id);

  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }

  /// Registered unknowns in registration order.
  const std::vector<UnknownId>& in_order() const noexcept { return order_; }
  /// Registered unknowns sorted by UnknownId.
  std::vector<UnknownId> sorted() const;

  friend bool operator==(const ZeroRegistry& a, const ZeroRegistry& b) {
    return a.sorted() == b.sorted();
  }

 private:
  std::array<std::vector<std::uint8_t>, 3> marks_;
  std::vector<UnknownId> order_;
};

}  // namespace selsolve
