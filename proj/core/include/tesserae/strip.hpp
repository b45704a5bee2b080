#pragma once

#include <cstddef>
#include <vector>

#include "tesserae/automaton.hpp"
#include "tesserae/gf.hpp"
#include "tesserae/polyomino.hpp"

namespace tesserae {

// Everything known about tilings of one strip width.
struct StripSolution {
  TransferAutomaton automaton;  // trimmed
  CountSeries series;           // column-indexed counts
  int step = 1;
  std::vector<BigInt> resampled;  // a_t = N(step * t)
  LinearRecurrence recurrence;
  RationalGF gf;
};

struct StripOptions {
  // Initial number of resampled terms; doubled until the recurrence is
  // confirmed.
  std::size_t initial_terms = 32;
  // Terms beyond 2L that must agree with the inferred recurrence.
  std::size_t confirming_terms = 8;
  std::size_t max_terms = 4096;
};

// Builds the automaton, counts, detects the column step and solves for G(z).
// Throws NoTilingsError when the strip has no tilings at any length probed.
StripSolution solve_strip(const TileSet& tiles, int width, const StripOptions& options = {});

}  // namespace tesserae
