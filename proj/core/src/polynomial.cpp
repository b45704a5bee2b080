#include "tesserae/polynomial.hpp"

#include "tesserae/error.hpp"

namespace tesserae {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const BigInt& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[i] / b.lead();
    quot[i - db] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.lead();
  std::vector<Rational> c = a.coeffs();
  for (Rational& x : c) x /= lead;
  return RatPoly(std::move(c));
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const BigInt& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const RatPoly& p) {
  BigInt denom_lcm = 1;
  for (const Rational& c : p.coeffs()) {
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<BigInt> ints;
  ints.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) {
    ints.emplace_back(c.get_num() * (denom_lcm / c.get_den()));
  }
  IntPoly out(std::move(ints));
  const BigInt g = content(out);
  if (g > 1) {
    std::vector<BigInt> reduced = out.coeffs();
    for (BigInt& c : reduced) c /= g;
    out = IntPoly(std::move(reduced));
  }
  return out;
}

std::string to_string(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const BigInt& c = p.coeffs()[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace tesserae
