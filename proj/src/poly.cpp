#include "scrollsec/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace scrollsec::poly {

void trim(Poly& p) {
  while (!p.empty() && Field::is_zero(p.back())) p.pop_back();
}

int degree(const Poly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && Field::is_zero(p[d])) --d;
  return d;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Fe x = i < a.size() ? a[i] : Fe{};
    const Fe y = i < b.size() ? b[i] : Fe{};
    out[i] = f.add(x, y);
  }
  trim(out);
  return out;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Fe x = i < a.size() ? a[i] : Fe{};
    const Fe y = i < b.size() ? b[i] : Fe{};
    out[i] = f.sub(x, y);
  }
  trim(out);
  return out;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (Field::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  const int db = degree(b);
  if (db < 0) throw std::invalid_argument("polynomial division by zero");
  Poly r = a;
  trim(r);
  Poly q;
  if (degree(r) >= db) q.assign(r.size() - db, Fe{});
  const Fe lead_inv = f.inv(b[db]);
  while (degree(r) >= db) {
    const int dr = degree(r);
    const Fe c = f.mul(r[dr], lead_inv);
    q[dr - db] = c;
    for (int i = 0; i <= db; ++i) r[dr - db + i] = f.sub(r[dr - db + i], f.mul(c, b[i]));
    trim(r);
  }
  trim(q);
  return {q, r};
}

Poly mod(const Field& f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

Poly monic(const Field& f, Poly a) {
  trim(a);
  if (a.empty()) return a;
  const Fe inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Poly powmod(const Field& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly acc{f.one()};
  acc = mod(f, acc, m);
  base = mod(f, base, m);
  while (e) {
    if (e & 1) acc = mod(f, mul(f, acc, base), m);
    base = mod(f, mul(f, base, base), m);
    e >>= 1;
  }
  return acc;
}

Fe eval(const Field& f, const Poly& p, const Fe& x) {
  Fe acc{};
  for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
  return acc;
}

Poly interpolate(const Field& f, const std::vector<Fe>& xs, const std::vector<Fe>& ys) {
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Fe> coef = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = f.div(f.sub(coef[i], coef[i - 1]), f.sub(xs[i], xs[i - j]));
      if (i == j) break;
    }
  }
  Poly out;
  for (std::size_t i = n; i-- > 0;) {
    out = mul(f, out, Poly{f.neg(xs[i]), f.one()});
    out = add(f, out, Poly{coef[i]});
  }
  trim(out);
  return out;
}

namespace {

void split(const Field& f, const Poly& g, std::mt19937_64& rng, std::vector<Fe>& out) {
  const int d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(f.neg(f.div(g[0], g[1])));
    return;
  }
  const std::uint64_t half = (f.order() - 1) / 2;
  for (;;) {
    const Poly shifted{f.random(rng), f.one()};
    Poly h = powmod(f, shifted, half, g);
    h = sub(f, h, Poly{f.one()});
    Poly c = gcd(f, g, h);
    const int dc = degree(c);
    if (dc > 0 && dc < d) {
      split(f, c, rng, out);
      split(f, divmod(f, g, c).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Fe> roots(const Field& f, const Poly& p, std::mt19937_64& rng) {
  Poly m = monic(f, p);
  if (degree(m) < 0) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Fe> out;
  if (degree(m) == 0) return out;
  // Product of the distinct linear factors: gcd(p, x^|F| - x).
  Poly xq = powmod(f, Poly{Fe{}, f.one()}, f.order(), m);
  Poly g = gcd(f, m, sub(f, xq, Poly{Fe{}, f.one()}));
  split(f, g, rng, out);
  std::sort(out.begin(), out.end(), [](const Fe& a, const Fe& b) {
    return a.im != b.im ? a.im < b.im : a.re < b.re;
  });
  return out;
}

}  // namespace scrollsec::poly
