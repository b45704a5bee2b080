#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tesserae/automaton.hpp"
#include "tesserae/bigint.hpp"
#include "tesserae/gf.hpp"
#include "tesserae/polyomino.hpp"

namespace tesserae {

// Largest positive root of an integer polynomial, isolated with exact
// arithmetic. The root lies in [lower, upper].
struct RootEstimate {
  double value = 0.0;
  Rational lower;
  Rational upper;
  bool exact = false;     // lower == upper == the root
  double residual = 0.0;  // |p(value)| evaluated in long double
  double scale = 0.0;     // sum |p_i| value^i

  // Decimal expansion rounded to `digits` places after the point.
  std::string decimal(int digits = 20) const;
};

// Growth rate lambda, sites added per step and sigma = ln(lambda) / sites.
struct EntropyReport {
  double lambda = 0.0;
  std::string lambda_decimal;
  int sites_per_step = 0;
  double sigma_lower = 0.0;
  double residual = 0.0;
};

struct PerronResult {
  double lambda = 0.0;
  double lower = 0.0;  // Collatz-Wielandt bracket
  double upper = 0.0;
  std::vector<std::size_t> component;  // states of the dominant strongly connected part
  std::size_t iterations = 0;
};

// Largest positive real root of p, refined until the bracket is narrower
// than 2^-bits. Throws DomainError when p has no positive root.
RootEstimate largest_positive_root(const IntPoly& p, int bits = 96);

// Growth rate of the coefficients of g: the largest positive root of the
// reciprocal denominator z^d den(1/z).
RootEstimate dominant_root(const RationalGF& g);

// Per-column growth rate of a nonnegative transfer matrix by shifted power
// iteration on each strongly connected component. Throws ConvergenceError if
// the Collatz-Wielandt bracket does not close within max_iterations.
PerronResult perron_root(const TransferAutomaton& a, double tolerance = 1e-13,
                         std::size_t max_iterations = 1'000'000);

// ln(lambda) / sites_per_step; DomainError for lambda < 1.
double entropy_lower(double lambda, int sites_per_step);

// Scanning bound ln(|variants|) / area; DomainError for mixed areas.
double entropy_upper(const TileSet& tiles);

// Lower-bound report for a strip GF at the given width; sites per step is
// width * g.step().
EntropyReport entropy_report(const RationalGF& g, int width);

}  // namespace tesserae
