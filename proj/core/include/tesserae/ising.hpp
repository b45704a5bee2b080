#pragma once

#include <cstddef>

#include "tesserae/bigint.hpp"

namespace tesserae {

// beta = ln(2) / 2, the coupling for which like neighbours weigh twice as
// much as unlike ones.
double fylfot_beta();

// Critical coupling ln(1 + sqrt 2) / 2 of the square-lattice Ising model.
double critical_beta();

struct IsingBound {
  double beta = 0.0;
  double sigma_ising = 0.0;
  double sigma_lower = 0.0;  // (ln 2 + sigma_ising) / 16
  std::size_t grid = 0;
  double err_estimate = 0.0;  // |value(grid) - value(grid / 2)|
};

// Onsager free entropy per site,
//   ln 2 + (1 / 8 pi^2) \int\int ln[cosh^2 2b - sinh 2b (cos w1 + cos w2)],
// by the periodic trapezoid rule on grid x grid nodes. Requires
// 0 <= beta < critical_beta() and grid a power of two >= 64.
double onsager_entropy(double beta, std::size_t grid);

// Lower bound on the T-tetromino entropy from the fylfot Ising mapping,
// evaluated with cosh^2 2b = 25/16 and sinh 2b = 3/4.
IsingBound t_tetromino_bound(std::size_t grid = 1024);

// (1/8) ln 2: the eight-cell block that tiles the plane in two ways.
double eight_cell_bound();

// Sum over all spin assignments of a p x q open-boundary lattice of the
// product over nearest-neighbour pairs of like_weight (equal spins) or
// unlike_weight (opposite spins). Requires p * q <= 24.
BigInt fylfot_sum(int p, int q, unsigned like_weight = 2, unsigned unlike_weight = 1);

}  // namespace tesserae
