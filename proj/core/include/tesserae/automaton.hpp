#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tesserae/bigint.hpp"
#include "tesserae/polyomino.hpp"

namespace tesserae {

// Occupancy of the `reach` columns just past the current boundary, packed
// row-major: bit (row * reach + col) is set when that cell is already covered
// by a tile protruding from the left.
using Profile = std::uint64_t;

// Exact counts N(0..L) of tilings of the width x n rectangle.
struct CountSeries {
  int width = 0;
  std::vector<BigInt> terms;
};

// Column-step transfer automaton over boundary profiles.
class TransferAutomaton {
 public:
  struct Edge {
    std::size_t to;
    BigInt weight;
  };

  // Raw constructor; rows[i] lists the nonzero entries of row i. Throws
  // DomainError on inconsistent dimensions or an out-of-range start.
  TransferAutomaton(int width, int reach, std::vector<Profile> states, std::size_t start,
                    std::vector<std::vector<Edge>> rows);

  int width() const { return width_; }
  int reach() const { return reach_; }
  std::size_t size() const { return states_.size(); }
  std::size_t start() const { return start_; }
  const std::vector<Profile>& states() const { return states_; }
  const std::vector<Edge>& row(std::size_t i) const { return rows_[i]; }
  const std::vector<std::vector<Edge>>& rows() const { return rows_; }

  // T[i][j]; zero when no edge is stored.
  BigInt entry(std::size_t i, std::size_t j) const;

  // Whether a profile cell is covered.
  bool occupied(std::size_t state, int row, int col) const;

 private:
  int width_;
  int reach_;
  std::vector<Profile> states_;
  std::size_t start_;
  std::vector<std::vector<Edge>> rows_;
};

// Compiles tiles for a strip of the given width. Variants taller than the
// strip are dropped. Only profiles reachable from the empty profile are
// materialized. Throws DomainError when no variant fits.
TransferAutomaton build_automaton(const TileSet& tiles, int width);

// Drops states that are not both reachable from and co-reachable to start.
TransferAutomaton trim_reachable(const TransferAutomaton& a);

BigInt count_rect(const TransferAutomaton& a, std::size_t length);

CountSeries series(const TransferAutomaton& a, std::size_t max_length);

// Graphviz digraph; nodes are labelled by their protrusion bitmap and edges
// by multiplicity.
std::string to_dot(const TransferAutomaton& a);

}  // namespace tesserae
