#include "tesserae/oracle.hpp"

#include <cstdint>
#include <vector>

#include "tesserae/error.hpp"

namespace tesserae {

namespace {

// Plain grid search: always cover the first empty cell in column-major order.
class Backtracker {
 public:
  Backtracker(const TileSet& tiles, int rows, int cols)
      : rows_(rows), cols_(cols), board_(static_cast<std::size_t>(rows * cols), 0) {
    for (const Polyomino& v : tiles.variants()) {
      const Cell first = v.scan_first();
      std::vector<Cell> offsets;
      for (const Cell& c : v.cells()) offsets.push_back({c.row - first.row, c.col - first.col});
      shapes_.push_back(std::move(offsets));
    }
  }

  std::uint64_t run() { return search(0); }

 private:
  char& at(int r, int c) { return board_[static_cast<std::size_t>(c * rows_ + r)]; }

  bool fits(const std::vector<Cell>& shape, int r, int c) {
    for (const Cell& o : shape) {
      const int rr = r + o.row;
      const int cc = c + o.col;
      if (rr < 0 || rr >= rows_ || cc < 0 || cc >= cols_ || at(rr, cc)) return false;
    }
    return true;
  }

  void mark(const std::vector<Cell>& shape, int r, int c, char value) {
    for (const Cell& o : shape) at(r + o.row, c + o.col) = value;
  }

  std::uint64_t search(std::size_t from) {
    std::size_t idx = from;
    while (idx < board_.size() && board_[idx]) ++idx;
    if (idx == board_.size()) return 1;
    const int r = static_cast<int>(idx % rows_);
    const int c = static_cast<int>(idx / rows_);
    std::uint64_t total = 0;
    for (const auto& shape : shapes_) {
      if (!fits(shape, r, c)) continue;
      mark(shape, r, c, 1);
      total += search(idx + 1);
      mark(shape, r, c, 0);
    }
    return total;
  }

  int rows_;
  int cols_;
  std::vector<char> board_;
  std::vector<std::vector<Cell>> shapes_;
};

}  // namespace

BigInt brute_force_count(const TileSet& tiles, int rows, int cols, std::size_t max_cells) {
  if (rows < 1 || cols < 0) throw DomainError("rectangle dimensions must be positive");
  const auto cells = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (cells > max_cells) {
    throw SizeLimitError("brute force limited to " + std::to_string(max_cells) +
                         " cells, got " + std::to_string(cells));
  }
  if (cells == 0) return 1;
  Backtracker solver(tiles, rows, cols);
  return BigInt(static_cast<unsigned long>(solver.run()));
}

}  // namespace tesserae
