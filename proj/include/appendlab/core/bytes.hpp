#pragma once

#include <cstdint>
#include <vector>

namespace appendlab {

using Bytes = std::vector<std::uint8_t>;

}  // namespace appendlab
