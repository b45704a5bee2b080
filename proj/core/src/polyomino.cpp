#include "tesserae/polyomino.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "tesserae/error.hpp"

namespace tesserae {

namespace {

bool edge_connected(const std::vector<Cell>& cells) {
  std::set<Cell> remaining(cells.begin(), cells.end());
  std::vector<Cell> frontier{*remaining.begin()};
  remaining.erase(remaining.begin());
  while (!frontier.empty()) {
    const Cell c = frontier.back();
    frontier.pop_back();
    constexpr std::array<std::array<int, 2>, 4> kSteps{
        {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    for (const auto& [dr, dc] : kSteps) {
      auto it = remaining.find(Cell{c.row + dr, c.col + dc});
      if (it != remaining.end()) {
        frontier.push_back(*it);
        remaining.erase(it);
      }
    }
  }
  return remaining.empty();
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Cell> normalize(std::vector<Cell> cells) {
  if (cells.empty()) return cells;
  int min_row = std::numeric_limits<int>::max();
  int min_col = std::numeric_limits<int>::max();
  for (const Cell& c : cells) {
    min_row = std::min(min_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  for (Cell& c : cells) {
    c.row -= min_row;
    c.col -= min_col;
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

Polyomino::Polyomino(std::vector<Cell> cells) : cells_(normalize(std::move(cells))) {
  if (cells_.empty()) throw TileError("polyomino has no cells");
  if (!edge_connected(cells_)) throw TileError("polyomino cells are not edge-connected");
  for (const Cell& c : cells_) {
    height_ = std::max(height_, c.row + 1);
    width_ = std::max(width_, c.col + 1);
  }
}

Cell Polyomino::scan_first() const {
  return *std::min_element(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.col, a.row) < std::tie(b.col, b.row);
  });
}

std::string Polyomino::to_ascii() const {
  std::vector<std::string> grid(height_, std::string(width_, '.'));
  for (const Cell& c : cells_) grid[c.row][c.col] = '#';
  std::string out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (r > 0) out += '\n';
    out += grid[r];
  }
  return out;
}

Polyomino parse_polyomino(std::string_view text) {
  if (text.empty()) throw TileError("empty tile text");
  std::vector<Cell> cells;
  const auto lines = split_lines(text);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    for (std::size_t c = 0; c < lines[r].size(); ++c) {
      const char ch = lines[r][c];
      if (ch == '#') {
        cells.push_back(Cell{static_cast<int>(r), static_cast<int>(c)});
      } else if (ch != '.') {
        throw TileError(std::string("unexpected character '") + ch + "' in tile");
      }
    }
  }
  if (cells.empty()) throw TileError("tile contains no '#' cells");
  return Polyomino(std::move(cells));
}

std::vector<Polyomino> orientations(const Polyomino& p, bool allow_rotations,
                                    bool allow_reflections) {
  using Transform = std::function<Cell(Cell)>;
  const Transform rotate = [](Cell c) { return Cell{c.col, -c.row}; };
  const Transform reflect = [](Cell c) { return Cell{c.row, -c.col}; };

  std::vector<std::vector<Cell>> shapes{p.cells()};
  if (allow_reflections) {
    std::vector<Cell> mirrored;
    for (const Cell& c : p.cells()) mirrored.push_back(reflect(c));
    shapes.push_back(std::move(mirrored));
  }
  std::set<Polyomino> seen;
  for (auto shape : shapes) {
    const int turns = allow_rotations ? 4 : 1;
    for (int k = 0; k < turns; ++k) {
      seen.insert(Polyomino(shape));
      for (Cell& c : shape) c = rotate(c);
    }
  }
  return {seen.begin(), seen.end()};
}

TileSet::TileSet(std::vector<Polyomino> base, bool allow_rotations, bool allow_reflections)
    : base_(std::move(base)),
      allow_rotations_(allow_rotations),
      allow_reflections_(allow_reflections) {
  if (base_.empty()) throw TileError("tile set has no shapes");
  for (const Polyomino& shape : base_) {
    for (Polyomino& v : orientations(shape, allow_rotations_, allow_reflections_)) {
      if (std::find(variants_.begin(), variants_.end(), v) == variants_.end()) {
        variants_.push_back(std::move(v));
      }
    }
  }
}

std::size_t TileSet::uniform_area() const {
  const std::size_t area = variants_.front().area();
  for (const Polyomino& v : variants_) {
    if (v.area() != area) return 0;
  }
  return area;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"monomino", "domino", "tromino-right",
                                              "tetromino-L", "tetromino-T"};
  return names;
}

TileSet preset(std::string_view name) {
  std::string_view grid;
  if (name == "monomino") {
    grid = "#";
  } else if (name == "domino") {
    grid = "##";
  } else if (name == "tromino-right") {
    grid = "##\n#.";
  } else if (name == "tetromino-L") {
    grid = "#.\n#.\n##";
  } else if (name == "tetromino-T") {
    grid = "###\n.#.";
  } else {
    throw TileError("unknown preset '" + std::string(name) + "'");
  }
  return TileSet({parse_polyomino(grid)}, true, true);
}

TileSet parse_tile_file(std::string_view text) {
  Symmetry symmetry = Symmetry::kAll;
  std::vector<Polyomino> shapes;
  std::string block;
  bool seen_content = false;

  auto flush = [&] {
    if (!block.empty()) shapes.push_back(parse_polyomino(block));
    block.clear();
  };

  for (std::string_view raw : split_lines(text)) {
    const std::string_view line = trim(raw);
    if (!line.empty() && line.front() == '@') {
      if (seen_content) throw TileError("@symmetry header must precede the grids");
      constexpr std::string_view kKey = "@symmetry:";
      if (line.substr(0, kKey.size()) != kKey) {
        throw TileError("unknown header '" + std::string(line) + "'");
      }
      const std::string_view value = trim(line.substr(kKey.size()));
      if (value == "all") {
        symmetry = Symmetry::kAll;
      } else if (value == "rotations") {
        symmetry = Symmetry::kRotations;
      } else if (value == "none") {
        symmetry = Symmetry::kNone;
      } else {
        throw TileError("unknown symmetry '" + std::string(value) + "'");
      }
      continue;
    }
    if (line.empty()) {
      flush();
      continue;
    }
    seen_content = true;
    if (!block.empty()) block += '\n';
    block += line;
  }
  flush();
  if (shapes.empty()) throw TileError("tile file contains no shapes");
  return TileSet(std::move(shapes), symmetry != Symmetry::kNone, symmetry == Symmetry::kAll);
}

}  // namespace tesserae
