#pragma once

#include <string_view>
#include <vector>

namespace resonantk::detail {

struct FrozenGraph {
  std::string_view name;
  std::string_view spiral;  ///< 1-based pentagon positions in the face spiral that generated it
  std::string_view rot;
};

const std::vector<FrozenGraph>& frozen_graphs();

}  // namespace resonantk::detail
