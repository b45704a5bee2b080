#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tesserae/automaton.hpp"
#include "tesserae/bigint.hpp"
#include "tesserae/polynomial.hpp"

namespace tesserae {

// a_t = c_1 a_{t-1} + ... + c_d a_{t-d} for every t >= valid_from.
struct LinearRecurrence {
  std::vector<BigInt> coeffs;
  std::size_t valid_from = 0;

  std::size_t order() const { return coeffs.size(); }
};

// G(z) = num(z) / den(z) in lowest terms with den(0) = 1. One power of z
// stands for `step` columns of the strip.
class RationalGF {
 public:
  // Cancels common factors and normalizes den(0) to 1. Throws DomainError
  // when den(0) = 0 or the normalized form is not integral.
  RationalGF(IntPoly num, IntPoly den, int step = 1);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  int step() const { return step_; }

  // Recurrence read off the denominator; holds from max(deg den, deg num + 1).
  LinearRecurrence recurrence() const;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;

 private:
  IntPoly num_;
  IntPoly den_;
  int step_;
};

// gcd of the lengths n >= 1 with N(n) != 0. Throws NoTilingsError if none.
int detect_step(const CountSeries& s);

// a_t = N(k t).
std::vector<BigInt> resample(const CountSeries& s, int step);

// Minimal recurrence via exact Berlekamp-Massey over the rationals. The
// recurrence's linear complexity L must leave at least `min_confirming`
// terms beyond the 2L that determine it; otherwise ConvergenceError.
LinearRecurrence infer_recurrence(std::span<const BigInt> terms, std::size_t min_confirming = 1);

// Needs terms[0 .. valid_from + order).
RationalGF recurrence_to_gf(const LinearRecurrence& rec, std::span<const BigInt> initial,
                            int step = 1);

// Power-series coefficients 0..max_index.
std::vector<BigInt> expand(const RationalGF& g, std::size_t max_index);

// G' = 1 - 1/G, the generating function of fault-free blocks; G'(0) = 0.
RationalGF faultfree(const RationalGF& g);

// G = 1 / (1 - G'), inverse of faultfree().
RationalGF from_faultfree(const RationalGF& g_prime);

}  // namespace tesserae
