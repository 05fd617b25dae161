#include "selsolve/zero_registry.hpp"

#include <algorithm>

namespace selsolve {

bool ZeroRegistry::insert(UnknownId id) {
  auto& bits = marks_[static_cast<std::size_t>(id.kind)];
  if (id.index >= bits.size()) bits.resize(std::max<std::size_t>(id.index + 1, bits.size() * 2), 0);
  if (bits[id.index]) return false;
  bits[id.index] = 1;
  order_.push_back(id);
  return true;
}

std::vector<UnknownId> ZeroRegistry::sorted() const {
  std::vector<UnknownId> out = order_;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace selsolve
