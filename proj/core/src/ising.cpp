#include "tesserae/ising.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "tesserae/error.hpp"

namespace tesserae {

namespace {

constexpr int kMaxFylfotSites = 24;

// Fixed-order pairwise summation.
double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

// ln 2 + (1/2) mean over the grid of ln[cosh2sq - sinh2 (cos w1 + cos w2)].
double onsager_quadrature(double cosh2_squared, double sinh2, std::size_t grid) {
  std::vector<double> cosines(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    cosines[j] = std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                          static_cast<double>(grid));
  }
  std::vector<double> row(grid), rows(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    for (std::size_t j = 0; j < grid; ++j) {
      row[j] = std::log(cosh2_squared - sinh2 * (cosines[i] + cosines[j]));
    }
    rows[i] = pairwise_sum(row.data(), grid);
  }
  const double mean = pairwise_sum(rows.data(), grid) / static_cast<double>(grid * grid);
  return std::numbers::ln2 + 0.5 * mean;
}

void check_grid(std::size_t grid) {
  if (grid < 64 || !std::has_single_bit(grid)) {
    throw DomainError("quadrature grid must be a power of two >= 64");
  }
}

}  // namespace

double fylfot_beta() { return 0.5 * std::numbers::ln2; }

double critical_beta() { return 0.5 * std::log(1.0 + std::numbers::sqrt2); }

double onsager_entropy(double beta, std::size_t grid) {
  check_grid(grid);
  if (!(beta >= 0.0) || beta >= critical_beta()) {
    throw DomainError("beta must lie in [0, critical beta)");
  }
  const double c = std::cosh(2.0 * beta);
  return onsager_quadrature(c * c, std::sinh(2.0 * beta), grid);
}

IsingBound t_tetromino_bound(std::size_t grid) {
  check_grid(grid);
  constexpr double kCosh2Squared = 25.0 / 16.0;
  constexpr double kSinh2 = 3.0 / 4.0;
  IsingBound b;
  b.beta = fylfot_beta();
  b.grid = grid;
  b.sigma_ising = onsager_quadrature(kCosh2Squared, kSinh2, grid);
  b.err_estimate = std::fabs(b.sigma_ising - onsager_quadrature(kCosh2Squared, kSinh2, grid / 2));
  b.sigma_lower = (std::numbers::ln2 + b.sigma_ising) / 16.0;
  return b;
}

double eight_cell_bound() { return std::numbers::ln2 / 8.0; }

BigInt fylfot_sum(int p, int q, unsigned like_weight, unsigned unlike_weight) {
  if (p < 1 || q < 1) throw DomainError("fylfot lattice dimensions must be positive");
  if (p * q > kMaxFylfotSites) {
    throw SizeLimitError("fylfot sum is exhaustive; p * q must be at most " +
                         std::to_string(kMaxFylfotSites));
  }
  const int sites = p * q;
  // Site (i, j) is bit i * q + j. Masks select the left/upper end of every
  // horizontal/vertical nearest-neighbour pair.
  std::uint32_t horizontal = 0, vertical = 0;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      const int b = i * q + j;
      if (j + 1 < q) horizontal |= 1U << b;
      if (i + 1 < p) vertical |= 1U << b;
    }
  }
  const int edges = std::popcount(horizontal) + std::popcount(vertical);

  // histogram[k] = configurations with exactly k like pairs
  std::vector<std::uint64_t> histogram(static_cast<std::size_t>(edges) + 1, 0);
  const std::uint32_t configs = 1U << sites;
  for (std::uint32_t s = 0; s < configs; ++s) {
    const std::uint32_t unlike_h = (s ^ (s >> 1)) & horizontal;
    const std::uint32_t unlike_v = (s ^ (s >> q)) & vertical;
    const int unlike = std::popcount(unlike_h) + std::popcount(unlike_v);
    ++histogram[static_cast<std::size_t>(edges - unlike)];
  }

  BigInt total = 0;
  for (int like = 0; like <= edges; ++like) {
    BigInt term = static_cast<unsigned long>(histogram[static_cast<std::size_t>(like)]);
    BigInt w;
    mpz_ui_pow_ui(w.get_mpz_t(), like_weight, static_cast<unsigned long>(like));
    term *= w;
    mpz_ui_pow_ui(w.get_mpz_t(), unlike_weight, static_cast<unsigned long>(edges - like));
    term *= w;
    total += term;
  }
  return total;
}

}  // namespace tesserae
