#include "tesserae/gf.hpp"

#include <algorithm>
#include <numeric>

#include "tesserae/error.hpp"

namespace tesserae {

RationalGF::RationalGF(IntPoly num, IntPoly den, int step) : step_(step) {
  if (step_ < 1) throw DomainError("generating function step must be positive");
  if (den.coeff(0) == 0) throw DomainError("denominator must have a nonzero constant term");

  RatPoly n = to_rational(num);
  RatPoly d = to_rational(den);
  const RatPoly g = gcd(n, d);
  if (g.degree() > 0) {
    n = divmod(n, g).first;
    d = divmod(d, g).first;
  }
  const Rational d0 = d.coeff(0);
  n = n * Rational(1 / d0);
  d = d * Rational(1 / d0);
  for (const Rational& c : d.coeffs()) {
    if (c.get_den() != 1) throw DomainError("denominator is not integral after normalization");
  }
  for (const Rational& c : n.coeffs()) {
    if (c.get_den() != 1) throw DomainError("numerator is not integral after normalization");
  }
  auto to_int = [](const RatPoly& p) {
    std::vector<BigInt> c;
    for (const Rational& x : p.coeffs()) c.emplace_back(x.get_num());
    return IntPoly(std::move(c));
  };
  num_ = to_int(n);
  den_ = to_int(d);
}

LinearRecurrence RationalGF::recurrence() const {
  LinearRecurrence rec;
  for (int i = 1; i <= den_.degree(); ++i) rec.coeffs.push_back(-den_.coeffs()[i]);
  rec.valid_from = static_cast<std::size_t>(std::max(den_.degree(), num_.degree() + 1));
  return rec;
}

int detect_step(const CountSeries& s) {
  unsigned long k = 0;
  for (std::size_t n = 1; n < s.terms.size(); ++n) {
    if (s.terms[n] != 0) k = std::gcd(k, static_cast<unsigned long>(n));
  }
  if (k == 0) {
    throw NoTilingsError("no tilings of width " + std::to_string(s.width) +
                         " up to length " + std::to_string(s.terms.size() - 1));
  }
  return static_cast<int>(k);
}

std::vector<BigInt> resample(const CountSeries& s, int step) {
  if (step < 1) throw DomainError("resampling step must be positive");
  std::vector<BigInt> out;
  for (std::size_t n = 0; n < s.terms.size(); n += static_cast<std::size_t>(step)) {
    out.push_back(s.terms[n]);
  }
  return out;
}

LinearRecurrence infer_recurrence(std::span<const BigInt> terms, std::size_t min_confirming) {
  // Connection polynomial C with C(0) = 1: sum_i C_i a_{n-i} = 0 for n >= L.
  std::vector<Rational> conn{Rational(1)};
  std::vector<Rational> prev{Rational(1)};
  std::size_t complexity = 0;
  std::size_t shift = 1;
  Rational prev_discrepancy = 1;

  for (std::size_t n = 0; n < terms.size(); ++n) {
    Rational d = terms[n];
    for (std::size_t i = 1; i <= complexity && i < conn.size(); ++i) d += conn[i] * terms[n - i];
    if (d == 0) {
      ++shift;
      continue;
    }
    const Rational factor = d / prev_discrepancy;
    std::vector<Rational> updated = conn;
    if (updated.size() < prev.size() + shift) updated.resize(prev.size() + shift, Rational(0));
    for (std::size_t i = 0; i < prev.size(); ++i) updated[i + shift] -= factor * prev[i];
    if (2 * complexity <= n) {
      prev = conn;
      complexity = n + 1 - complexity;
      prev_discrepancy = d;
      shift = 1;
    } else {
      ++shift;
    }
    conn = std::move(updated);
  }

  if (2 * complexity + min_confirming > terms.size()) {
    throw ConvergenceError("series too short: linear complexity " + std::to_string(complexity) +
                           " needs at least " + std::to_string(2 * complexity + min_confirming) +
                           " terms, have " + std::to_string(terms.size()));
  }

  while (conn.size() > 1 && conn.back() == 0) conn.pop_back();
  LinearRecurrence rec;
  rec.valid_from = complexity;
  for (std::size_t i = 1; i < conn.size(); ++i) {
    const Rational c = -conn[i];
    if (c.get_den() != 1) {
      throw ConvergenceError("recurrence has non-integral coefficients; series too short");
    }
    rec.coeffs.push_back(c.get_num());
  }

  for (std::size_t t = rec.valid_from; t < terms.size(); ++t) {
    BigInt predicted = 0;
    for (std::size_t i = 1; i <= rec.order(); ++i) predicted += rec.coeffs[i - 1] * terms[t - i];
    if (predicted != terms[t]) {
      throw ConvergenceError("inferred recurrence fails at index " + std::to_string(t));
    }
  }
  return rec;
}

RationalGF recurrence_to_gf(const LinearRecurrence& rec, std::span<const BigInt> initial,
                            int step) {
  const std::size_t needed = std::max(rec.valid_from, rec.order());
  if (initial.size() < needed) {
    throw DomainError("need " + std::to_string(needed) + " initial terms for this recurrence");
  }
  std::vector<BigInt> den{BigInt(1)};
  for (const BigInt& c : rec.coeffs) den.push_back(-c);
  const IntPoly denominator(std::move(den));
  const IntPoly prefix(std::vector<BigInt>(initial.begin(), initial.begin() + needed));
  return RationalGF((denominator * prefix).truncated(rec.valid_from), denominator, step);
}

std::vector<BigInt> expand(const RationalGF& g, std::size_t max_index) {
  // den(0) = 1, so the quotient stays integral.
  const auto& den = g.den().coeffs();
  std::vector<BigInt> out(max_index + 1, 0);
  for (std::size_t t = 0; t <= max_index; ++t) {
    BigInt v = g.num().coeff(t);
    for (std::size_t i = 1; i < den.size() && i <= t; ++i) v -= den[i] * out[t - i];
    out[t] = v;
  }
  return out;
}

RationalGF faultfree(const RationalGF& g) {
  if (g.num().coeff(0) != 1) throw DomainError("fault-free decomposition needs G(0) = 1");
  return RationalGF(g.num() - g.den(), g.num(), g.step());
}

RationalGF from_faultfree(const RationalGF& g_prime) {
  if (g_prime.num().coeff(0) != 0) throw DomainError("fault-free series must have G'(0) = 0");
  return RationalGF(g_prime.den(), g_prime.den() - g_prime.num(), g_prime.step());
}

}  // namespace tesserae
