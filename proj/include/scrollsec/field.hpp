#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

namespace scrollsec {

/// Element of F_q or F_{q^2} = F_q[i]/(i^2 - c). An F_q element has im == 0,
/// so prime-field data embeds into the quadratic extension without conversion.
struct Fe {
  std::uint32_t re = 0;
  std::uint32_t im = 0;

  friend bool operator==(const Fe&, const Fe&) = default;
};

struct FeHash {
  std::size_t operator()(const Fe& x) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{x.im} << 32) | x.re);
  }
};

/// Arithmetic context for an odd prime field (degree 1) or its quadratic
/// extension (degree 2). Immutable; cheap to copy.
class Field {
 public:
  /// Throws Error{NonPrime} or Error{EvenCharacteristic}. For degree 2 the
  /// modulus is x^2 - c with c the least quadratic non-residue mod q.
  static Field make(std::uint32_t q, int degree);

  std::uint32_t characteristic() const { return q_; }
  int degree() const { return degree_; }
  /// c in the modulus x^2 - c (0 for the prime field).
  std::uint32_t nonresidue() const { return nonres_; }
  /// Number of elements q^degree.
  std::uint64_t order() const { return degree_ == 1 ? q_ : std::uint64_t{q_} * q_; }

  Fe zero() const { return {}; }
  Fe one() const { return {1, 0}; }
  Fe from_int(std::int64_t v) const;
  Fe element(std::uint32_t re, std::uint32_t im) const;

  static bool is_zero(const Fe& x) { return x.re == 0 && x.im == 0; }
  static bool is_rational(const Fe& x) { return x.im == 0; }

  Fe add(const Fe& a, const Fe& b) const {
    return {add_mod(a.re, b.re), add_mod(a.im, b.im)};
  }
  Fe sub(const Fe& a, const Fe& b) const {
    return {sub_mod(a.re, b.re), sub_mod(a.im, b.im)};
  }
  Fe neg(const Fe& a) const { return {sub_mod(0, a.re), sub_mod(0, a.im)}; }
  Fe mul(const Fe& a, const Fe& b) const {
    if (a.im == 0 && b.im == 0) return {mul_mod(a.re, b.re), 0};
    std::uint64_t re = (std::uint64_t{a.re} * b.re +
                        std::uint64_t{nonres_} * mul_mod(a.im, b.im)) % q_;
    std::uint64_t im = (std::uint64_t{a.re} * b.im + std::uint64_t{a.im} * b.re) % q_;
    return {static_cast<std::uint32_t>(re), static_cast<std::uint32_t>(im)};
  }
  /// Multiplicative inverse; the argument must be nonzero.
  Fe inv(const Fe& a) const;
  Fe div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, std::uint64_t e) const;
  /// Frobenius x -> x^q (conjugation on the quadratic extension).
  Fe frobenius(const Fe& a) const { return {a.re, sub_mod(0, a.im)}; }

  /// Uniform element of the whole field.
  Fe random(std::mt19937_64& rng) const;
  /// Uniform element of the prime subfield.
  Fe random_rational(std::mt19937_64& rng) const;

  /// Canonical text: "r" for prime-field elements, "r+si" otherwise.
  std::string to_string(const Fe& a) const;

 private:
  Field(std::uint32_t q, int degree, std::uint32_t nonres)
      : q_(q), degree_(degree), nonres_(nonres) {}

  std::uint32_t add_mod(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % q_);
  }

  std::uint32_t q_;
  int degree_;
  std::uint32_t nonres_;
};

bool is_prime(std::uint64_t n);

/// Least c in [2, q) that is not a square mod q.
std::uint32_t least_nonresidue(std::uint32_t q);

/// Uniform integer in [0, bound) by rejection; stable across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace scrollsec
