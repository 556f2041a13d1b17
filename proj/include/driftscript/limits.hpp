#pragma once

#include <cstddef>

namespace driftscript {

inline constexpr std::size_t kDefaultMaxTokens = 1024;
inline constexpr std::size_t kDefaultMaxNodes = 2048;
inline constexpr std::size_t kDefaultMaxChildren = 16;

// Capacity bounds applied to a single compilation call.
struct Limits {
  std::size_t max_tokens = kDefaultMaxTokens;
  std::size_t max_nodes = kDefaultMaxNodes;
  std::size_t max_children = kDefaultMaxChildren;
};

}  // namespace driftscript
