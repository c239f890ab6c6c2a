#include "scrollsec/qform.hpp"

#include "scrollsec/error.hpp"

namespace scrollsec {

QForm::QForm(Mat gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw Error(ErrorKind::DimensionMismatch, "gram not square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (!(gram_(i, j) == gram_(j, i))) throw Error(ErrorKind::DimensionMismatch, "gram not symmetric");
}

void QForm::add_monomial(const Field& field, std::size_t i, std::size_t j, Fe coeff) {
  if (i == j) {
    gram_(i, i) = field.add(gram_(i, i), coeff);
    return;
  }
  const Fe half = field.mul(coeff, field.inv(field.from_int(2)));
  gram_(i, j) = field.add(gram_(i, j), half);
  gram_(j, i) = field.add(gram_(j, i), half);
}

Fe QForm::eval(const Field& field, std::span<const Fe> x) const {
  if (x.size() != n_vars()) throw Error(ErrorKind::DimensionMismatch, "QForm::eval length");
  return dot(field, x, mat_vec(field, gram_, x));
}

Vec QForm::polar_row(const Field& field, std::span<const Fe> p) const {
  if (p.size() != n_vars()) throw Error(ErrorKind::DimensionMismatch, "QForm::polar_row length");
  Vec g = mat_vec(field, gram_, p);
  for (auto& x : g) x = field.add(x, x);
  return g;
}

Fe polarize(const Field& field, const QForm& q, std::span<const Fe> p, std::span<const Fe> v) {
  if (v.size() != q.n_vars()) throw Error(ErrorKind::DimensionMismatch, "polarize length");
  return dot(field, q.polar_row(field, p), v);
}

QForm qform_restrict(const Field& field, const QForm& q, const LinearSubspace& s) {
  if (s.ambient_dim() + 1 != q.n_vars()) {
    throw Error(ErrorKind::DimensionMismatch, "qform_restrict: ambient mismatch");
  }
  const Mat& b = s.basis();
  return QForm(mat_mul(field, mat_mul(field, b, q.gram()), b.transposed()));
}

std::size_t qform_rank(const Field& field, const QForm& q) { return rank(field, q.gram()); }

bool is_zero_form(const QForm& q) {
  for (std::size_t i = 0; i < q.n_vars(); ++i)
    if (!is_zero_vec(q.gram().row(i))) return false;
  return true;
}

bool proportional(const Field& field, const QForm& a, const QForm& b) {
  if (a.n_vars() != b.n_vars()) return false;
  Mat m(2, a.n_vars() * a.n_vars());
  for (std::size_t i = 0; i < a.n_vars(); ++i)
    for (std::size_t j = 0; j < a.n_vars(); ++j) {
      m(0, i * a.n_vars() + j) = a.gram()(i, j);
      m(1, i * a.n_vars() + j) = b.gram()(i, j);
    }
  return rank(field, m) <= 1;
}

}  // namespace scrollsec
