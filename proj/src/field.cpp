#include "scrollsec/field.hpp"

#include <limits>

#include "scrollsec/error.hpp"

namespace scrollsec {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::CodimTooSmall: return "CodimTooSmall";
    case ErrorKind::EmptyType: return "EmptyType";
    case ErrorKind::VertexPoint: return "VertexPoint";
    case ErrorKind::POnVariety: return "POnVariety";
    case ErrorKind::UnclassifiableSignature: return "UnclassifiableSignature";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t least_nonresidue(std::uint32_t q) {
  // Euler's criterion: c is a non-residue iff c^((q-1)/2) = -1.
  for (std::uint32_t c = 2; c < q; ++c) {
    std::uint64_t base = c, acc = 1, e = (q - 1) / 2;
    while (e) {
      if (e & 1) acc = acc * base % q;
      base = base * base % q;
      e >>= 1;
    }
    if (acc == q - 1) return c;
  }
  return 0;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

Field Field::make(std::uint32_t q, int degree) {
  if (q == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(q)) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not prime");
  if (q >= (1u << 31)) throw Error(ErrorKind::NonPrime, "modulus too large");
  if (degree != 1 && degree != 2) {
    throw Error(ErrorKind::DimensionMismatch, "extension degree must be 1 or 2");
  }
  return Field(q, degree, degree == 2 ? least_nonresidue(q) : 0);
}

Fe Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return {static_cast<std::uint32_t>(r), 0};
}

Fe Field::element(std::uint32_t re, std::uint32_t im) const {
  if (degree_ == 1 && im % q_ != 0) {
    throw Error(ErrorKind::DimensionMismatch, "prime field element with imaginary part");
  }
  return {re % q_, im % q_};
}

Fe Field::pow(Fe a, std::uint64_t e) const {
  Fe acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

Fe Field::inv(const Fe& a) const {
  if (a.im == 0) {
    // Fermat in the prime field.
    std::uint64_t base = a.re, acc = 1, e = q_ - 2;
    while (e) {
      if (e & 1) acc = acc * base % q_;
      base = base * base % q_;
      e >>= 1;
    }
    return {static_cast<std::uint32_t>(acc), 0};
  }
  // (a + b i)^{-1} = (a - b i) / (a^2 - c b^2)
  Fe norm{sub_mod(mul_mod(a.re, a.re), mul_mod(nonres_, mul_mod(a.im, a.im))), 0};
  Fe n_inv = inv(norm);
  return mul(frobenius(a), n_inv);
}

Fe Field::random(std::mt19937_64& rng) const {
  Fe x{static_cast<std::uint32_t>(uniform_below(rng, q_)), 0};
  if (degree_ == 2) x.im = static_cast<std::uint32_t>(uniform_below(rng, q_));
  return x;
}

Fe Field::random_rational(std::mt19937_64& rng) const {
  return {static_cast<std::uint32_t>(uniform_below(rng, q_)), 0};
}

std::string Field::to_string(const Fe& a) const {
  if (a.im == 0) return std::to_string(a.re);
  return std::to_string(a.re) + "+" + std::to_string(a.im) + "i";
}

}  // namespace scrollsec
