#pragma once

#include <cstddef>

#include "tesserae/bigint.hpp"
#include "tesserae/polyomino.hpp"

namespace tesserae {

inline constexpr std::size_t kDefaultOracleMaxCells = 64;

// Exhaustive backtracking count of tilings of the rows x cols rectangle.
// Independent of the transfer automaton. Throws SizeLimitError when
// rows * cols exceeds max_cells.
BigInt brute_force_count(const TileSet& tiles, int rows, int cols,
                         std::size_t max_cells = kDefaultOracleMaxCells);

}  // namespace tesserae
