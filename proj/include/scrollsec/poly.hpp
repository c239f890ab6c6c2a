#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "scrollsec/field.hpp"

namespace scrollsec::poly {

/// Univariate polynomial, coefficients low degree first. Zero is the empty vector.
using Poly = std::vector<Fe>;

void trim(Poly& p);
int degree(const Poly& p);

Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
Poly mod(const Field& f, const Poly& a, const Poly& b);
Poly monic(const Field& f, Poly a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& f, Poly a, Poly b);
Poly powmod(const Field& f, Poly base, std::uint64_t e, const Poly& m);
Fe eval(const Field& f, const Poly& p, const Fe& x);

/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]); xs distinct.
Poly interpolate(const Field& f, const std::vector<Fe>& xs, const std::vector<Fe>& ys);

/// Distinct roots of p lying in the field f itself (Cantor-Zassenhaus).
/// p must be nonzero. Order of the result is ascending by (im, re).
std::vector<Fe> roots(const Field& f, const Poly& p, std::mt19937_64& rng);

}  // namespace scrollsec::poly
