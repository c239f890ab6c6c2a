#pragma once

#include <cstddef>
#include <span>

#include "scrollsec/linalg.hpp"

namespace scrollsec {

/// Quadratic form Q(x) = x^T G x with G symmetric; the off-diagonal entries
/// hold half of each mixed coefficient, so odd characteristic is required.
class QForm {
 public:
  QForm() = default;
  /// Throws DimensionMismatch if gram is not square or not symmetric.
  explicit QForm(Mat gram);
  static QForm zero(std::size_t n_vars) { return QForm(Mat(n_vars, n_vars)); }

  std::size_t n_vars() const { return gram_.rows(); }
  const Mat& gram() const { return gram_; }

  /// Adds coeff * x_i * x_j (i == j allowed).
  void add_monomial(const Field& field, std::size_t i, std::size_t j, Fe coeff);

  Fe eval(const Field& field, std::span<const Fe> x) const;
  /// 2 G p: the linear form v -> polarize(p, v).
  Vec polar_row(const Field& field, std::span<const Fe> p) const;

  friend bool operator==(const QForm&, const QForm&) = default;

 private:
  Mat gram_;
};

/// B with Q(l p + m v) = l^2 Q(p) + l m B + m^2 Q(v); B = 2 p^T G v.
Fe polarize(const Field& field, const QForm& q, std::span<const Fe> p, std::span<const Fe> v);

/// Q'(w) = Q(w * basis) on the subspace's RREF basis.
QForm qform_restrict(const Field& field, const QForm& q, const LinearSubspace& s);

std::size_t qform_rank(const Field& field, const QForm& q);

bool is_zero_form(const QForm& q);

/// True iff a and b are scalar multiples of each other (zero counts as a multiple).
bool proportional(const Field& field, const QForm& a, const QForm& b);

}  // namespace scrollsec
