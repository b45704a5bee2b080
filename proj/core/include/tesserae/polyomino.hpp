#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tesserae {

// A unit square of the lattice. Row 0 is the top of a strip; rows run across
// the strip width and columns along its length.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A normalized, edge-connected, non-empty set of cells.
class Polyomino {
 public:
  // Validates and normalizes; throws TileError on empty or disconnected input.
  explicit Polyomino(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t area() const { return cells_.size(); }
  int height() const { return height_; }
  int width() const { return width_; }

  // The cell that comes first in column-major scan order (leftmost column,
  // topmost cell within it).
  Cell scan_first() const;

  std::string to_ascii() const;

  friend bool operator==(const Polyomino&, const Polyomino&) = default;
  friend auto operator<=>(const Polyomino& a, const Polyomino& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  std::vector<Cell> cells_;
  int height_ = 0;
  int width_ = 0;
};

// Translates cells so the minimum row and column are zero; sorts and
// deduplicates.
std::vector<Cell> normalize(std::vector<Cell> cells);

Polyomino parse_polyomino(std::string_view text);

std::vector<Polyomino> orientations(const Polyomino& p, bool allow_rotations,
                                    bool allow_reflections);

enum class Symmetry { kAll, kRotations, kNone };

class TileSet {
 public:
  TileSet(std::vector<Polyomino> base, bool allow_rotations,
          bool allow_reflections);

  const std::vector<Polyomino>& base() const { return base_; }
  bool allow_rotations() const { return allow_rotations_; }
  bool allow_reflections() const { return allow_reflections_; }

  // Every admitted orientation of every base shape, without duplicates.
  const std::vector<Polyomino>& variants() const { return variants_; }

  // Common area of all variants, or 0 when the areas differ.
  std::size_t uniform_area() const;

 private:
  std::vector<Polyomino> base_;
  bool allow_rotations_;
  bool allow_reflections_;
  std::vector<Polyomino> variants_;
};

// Names accepted by preset().
const std::vector<std::string>& preset_names();

// Named tile sets with rotations and reflections admitted. Throws TileError
// for an unknown name.
TileSet preset(std::string_view name);

// Parses the tile file format: ASCII grids separated by blank lines, with an
// optional leading `@symmetry: all | rotations | none` header.
TileSet parse_tile_file(std::string_view text);

}  // namespace tesserae
