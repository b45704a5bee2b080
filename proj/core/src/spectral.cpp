#include "tesserae/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "tesserae/error.hpp"

namespace tesserae {

namespace {

int sign_at(const RatPoly& p, const Rational& x) { return sgn(p.evaluate(x)); }

class SturmChain {
 public:
  explicit SturmChain(const RatPoly& p) {
    chain_.push_back(p);
    chain_.push_back(p.derivative());
    while (chain_.back().degree() > 0) {
      RatPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }

  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const RatPoly& q : chain_) {
      const int s = sign_at(q, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Distinct roots in (a, b].
  int roots_between(const Rational& a, const Rational& b) const {
    return variations(a) - variations(b);
  }

 private:
  std::vector<RatPoly> chain_;
};

Rational cauchy_bound(const RatPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[i] / p.lead());
    if (r > m) m = r;
  }
  Rational b = m + 1;
  BigInt ceil_b = b.get_num() / b.get_den() + 1;
  return Rational(ceil_b);
}

}  // namespace

std::string RootEstimate::decimal(int digits) const {
  Rational mid = (lower + upper) / 2;
  BigInt scale_factor;
  mpz_ui_pow_ui(scale_factor.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = mid * scale_factor + Rational(1, 2);
  BigInt whole = scaled.get_num() / scaled.get_den();
  std::string s = whole.get_str();
  if (digits == 0) return s;
  if (s.size() <= static_cast<std::size_t>(digits)) {
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  }
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return s;
}

RootEstimate largest_positive_root(const IntPoly& p, int bits) {
  if (p.degree() < 1) throw DomainError("polynomial must be nonconstant");
  const RatPoly rp = to_rational(p);
  const RatPoly repeated = gcd(rp, rp.derivative());
  const RatPoly squarefree =
      repeated.degree() > 0 ? to_rational(primitive_part(divmod(rp, repeated).first))
                            : to_rational(primitive_part(rp));

  const SturmChain sturm(squarefree);
  Rational lo = 0;
  Rational hi = cauchy_bound(squarefree);
  if (sturm.roots_between(lo, hi) == 0) throw DomainError("polynomial has no positive root");

  // Shrink (lo, hi] until it holds only the largest root.
  while (sturm.roots_between(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (sturm.roots_between(mid, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  RootEstimate out;
  const Rational width_limit = Rational(1, 1) / Rational(BigInt(1) << bits);
  if (sign_at(squarefree, hi) == 0) {
    out.exact = true;
    lo = hi;
  }
  while (!out.exact && sign_at(squarefree, lo) == 0) {
    Rational mid = (lo + hi) / 2;
    if (sign_at(squarefree, mid) == 0) {
      lo = hi = mid;
      out.exact = true;
    } else if (sturm.roots_between(mid, hi) == 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (!out.exact) {
    const int sign_hi = sign_at(squarefree, hi);
    while (hi - lo > width_limit) {
      Rational mid = (lo + hi) / 2;
      const int s = sign_at(squarefree, mid);
      if (s == 0) {
        lo = hi = mid;
        out.exact = true;
        break;
      }
      if (s == sign_hi) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }
  if (!out.exact) {
    // Integer roots (such as growth rate 3) are recognized exactly.
    Rational mid = (lo + hi) / 2;
    mid += Rational(1, 2);
    const Rational nearest(BigInt(mid.get_num() / mid.get_den()));
    if (nearest >= lo && nearest <= hi && sign_at(squarefree, nearest) == 0) {
      lo = hi = nearest;
      out.exact = true;
    }
  }
  out.lower = lo;
  out.upper = hi;
  out.value = Rational((lo + hi) / 2).get_d();

  long double acc = 0.0L;
  long double scale = 0.0L;
  const long double x = out.value;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const long double c = it->get_d();
    acc = acc * x + c;
    scale = scale * x + std::fabs(c);
  }
  out.residual = static_cast<double>(std::fabs(acc));
  out.scale = static_cast<double>(scale);
  if (out.residual > 1e-14 * out.scale) {
    throw ConvergenceError("root residual exceeds tolerance");
  }
  return out;
}

RootEstimate dominant_root(const RationalGF& g) {
  const int d = g.den().degree();
  if (d < 1) throw DomainError("generating function is a polynomial; no growth rate");
  return largest_positive_root(g.den().reversed(static_cast<std::size_t>(d)));
}

PerronResult perron_root(const TransferAutomaton& a, double tolerance,
                         std::size_t max_iterations) {
  const std::size_t n = a.size();

  // Tarjan's strongly connected components, iterative.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  int counter = 0;
  int components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      const auto& row = a.row(v);
      if (edge < row.size()) {
        const std::size_t w = row[edge++].to;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }

  PerronResult best;
  bool found = false;
  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(components));
  for (std::size_t v = 0; v < n; ++v) members[static_cast<std::size_t>(comp[v])].push_back(v);

  for (const auto& group : members) {
    std::vector<std::size_t> local(n, n);
    for (std::size_t k = 0; k < group.size(); ++k) local[group[k]] = k;
    struct LocalEdge {
      std::size_t from, to;
      double weight;
    };
    std::vector<LocalEdge> edges;
    for (std::size_t v : group) {
      for (const auto& e : a.row(v)) {
        if (local[e.to] != n && e.weight != 0) edges.push_back({local[v], local[e.to], e.weight.get_d()});
      }
    }
    if (edges.empty()) continue;  // single state without a self-loop

    // Power iteration on (A + I), which is primitive for irreducible A.
    const std::size_t m = group.size();
    std::vector<double> x(m, 1.0), y(m);
    double lower = 0.0, upper = 0.0;
    std::size_t it = 0;
    for (; it < max_iterations; ++it) {
      y = x;
      for (const auto& e : edges) y[e.from] += e.weight * x[e.to];
      lower = INFINITY;
      upper = 0.0;
      double norm = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double ratio = y[k] / x[k];
        lower = std::min(lower, ratio);
        upper = std::max(upper, ratio);
        norm = std::max(norm, y[k]);
      }
      for (std::size_t k = 0; k < m; ++k) x[k] = y[k] / norm;
      if (upper - lower <= tolerance * upper) break;
    }
    if (it == max_iterations) {
      throw ConvergenceError("power iteration did not converge; use the generating function");
    }
    const double lambda = 0.5 * (lower + upper) - 1.0;
    if (!found || lambda > best.lambda) {
      found = true;
      best.lambda = lambda;
      best.lower = lower - 1.0;
      best.upper = upper - 1.0;
      best.component = group;
      best.iterations = it + 1;
    }
  }
  return best;
}

double entropy_lower(double lambda, int sites_per_step) {
  if (!(lambda >= 1.0)) throw DomainError("growth rate below 1 gives no entropy bound");
  if (sites_per_step < 1) throw DomainError("sites per step must be positive");
  return std::log(lambda) / sites_per_step;
}

double entropy_upper(const TileSet& tiles) {
  const std::size_t area = tiles.uniform_area();
  if (area == 0) throw DomainError("scanning bound requires tiles of equal area");
  return std::log(static_cast<double>(tiles.variants().size())) / static_cast<double>(area);
}

EntropyReport entropy_report(const RationalGF& g, int width) {
  const RootEstimate root = dominant_root(g);
  EntropyReport r;
  r.lambda = root.value;
  r.lambda_decimal = root.decimal(20);
  r.sites_per_step = width * g.step();
  r.sigma_lower = entropy_lower(root.value, r.sites_per_step);
  r.residual = root.residual;
  return r;
}

}  // namespace tesserae
