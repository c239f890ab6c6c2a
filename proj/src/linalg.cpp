#include "scrollsec/linalg.hpp"

#include <string>

#include "scrollsec/error.hpp"

namespace scrollsec {

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Mat Mat::identity(const Field& field, std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

void Mat::append_row(std::span<const Fe> values) {
  if (values.size() != cols_) {
    throw Error(ErrorKind::DimensionMismatch, "row of length " + std::to_string(values.size()) +
                                                  " appended to matrix with " +
                                                  std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat mat_mul(const Field& field, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "mat_mul shapes");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Fe aik = a(i, k);
      if (Field::is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = field.add(out(i, j), field.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

Vec mat_vec(const Field& field, const Mat& a, std::span<const Fe> v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "mat_vec shapes");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(field, a.row(i), v);
  return out;
}

Fe dot(const Field& field, std::span<const Fe> a, std::span<const Fe> b) {
  Fe acc = field.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (Field::is_zero(a[i]) || Field::is_zero(b[i])) continue;
    acc = field.add(acc, field.mul(a[i], b[i]));
  }
  return acc;
}

RowReduction row_reduce(const Field& field, const Mat& input) {
  Mat m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && Field::is_zero(m(sel, c))) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(r, j));
    }
    const Fe inv = field.inv(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) = field.mul(m(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || Field::is_zero(m(i, c))) continue;
      const Fe f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!Field::is_zero(m(r, j))) m(i, j) = field.sub(m(i, j), field.mul(f, m(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }

  RowReduction out;
  out.rank = r;
  out.pivots = pivots;
  out.echelon = Mat(0, cols);
  for (std::size_t i = 0; i < r; ++i) out.echelon.append_row(m.row(i));

  out.kernel = Mat(0, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = field.one();
    for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = field.neg(m(i, f));
    out.kernel.append_row(v);
  }
  return out;
}

std::size_t rank(const Field& field, const Mat& m) { return row_reduce(field, m).rank; }

Fe determinant(const Field& field, Mat m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square");
  const std::size_t n = m.rows();
  Fe det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && Field::is_zero(m(sel, c))) ++sel;
    if (sel == n) return field.zero();
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      det = field.neg(det);
    }
    det = field.mul(det, m(c, c));
    const Fe inv = field.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (Field::is_zero(m(i, c))) continue;
      const Fe f = field.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = field.sub(m(i, j), field.mul(f, m(c, j)));
    }
  }
  return det;
}

bool is_zero_vec(std::span<const Fe> v) {
  for (const auto& x : v)
    if (!Field::is_zero(x)) return false;
  return true;
}

Vec normalized(const Field& field, std::span<const Fe> v) {
  Vec out(v.begin(), v.end());
  for (const auto& x : v) {
    if (!Field::is_zero(x)) {
      const Fe inv = field.inv(x);
      for (auto& y : out) y = field.mul(y, inv);
      break;
    }
  }
  return out;
}

LinearSubspace LinearSubspace::from_basis(const Field& field, const Mat& rows,
                                          std::size_t ambient_dim) {
  if (rows.cols() != ambient_dim + 1) {
    throw Error(ErrorKind::DimensionMismatch, "basis width does not match ambient dimension");
  }
  LinearSubspace s(ambient_dim);
  s.basis_ = row_reduce(field, rows).echelon;
  return s;
}

LinearSubspace LinearSubspace::span(const Field& field, const std::vector<Vec>& points,
                                    std::size_t ambient_dim) {
  Mat m(0, ambient_dim + 1);
  for (const auto& p : points) {
    if (p.size() != ambient_dim + 1) {
      throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(p.size()) +
                                                    " coordinates, expected " +
                                                    std::to_string(ambient_dim + 1));
    }
    m.append_row(p);
  }
  return from_basis(field, m, ambient_dim);
}

LinearSubspace LinearSubspace::full(const Field& field, std::size_t ambient_dim) {
  LinearSubspace s(ambient_dim);
  s.basis_ = Mat::identity(field, ambient_dim + 1);
  return s;
}

LinearSubspace LinearSubspace::coordinate(const Field& field, std::size_t ambient_dim,
                                          const std::vector<std::size_t>& indices) {
  std::vector<Vec> pts;
  for (auto i : indices) {
    Vec e(ambient_dim + 1);
    e.at(i) = field.one();
    pts.push_back(std::move(e));
  }
  return span(field, pts, ambient_dim);
}

bool LinearSubspace::contains(const Field& field, std::span<const Fe> p) const {
  if (p.size() != ambient_ + 1) throw Error(ErrorKind::DimensionMismatch, "contains: length");
  if (empty()) return false;
  // Reduce p against the RREF basis; p lies in the row space iff nothing is left.
  Vec r(p.begin(), p.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t pivot = 0;
    while (Field::is_zero(basis_(i, pivot))) ++pivot;
    const Fe f = r[pivot];
    if (Field::is_zero(f)) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = field.sub(r[j], field.mul(f, basis_(i, j)));
  }
  return is_zero_vec(r);
}

bool LinearSubspace::contains(const Field& field, const LinearSubspace& other) const {
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(field, other.basis_.row(i))) return false;
  return true;
}

LinearSubspace LinearSubspace::join(const Field& field, const LinearSubspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "join: ambient");
  Mat m = basis_;
  for (std::size_t i = 0; i < other.basis_.rows(); ++i) m.append_row(other.basis_.row(i));
  return from_basis(field, m, ambient_);
}

Mat LinearSubspace::annihilator(const Field& field) const {
  return row_reduce(field, basis_).kernel;
}

LinearSubspace LinearSubspace::intersect(const Field& field, const LinearSubspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "intersect: ambient");
  Mat forms = annihilator(field);
  const Mat other_forms = other.annihilator(field);
  for (std::size_t i = 0; i < other_forms.rows(); ++i) forms.append_row(other_forms.row(i));
  LinearSubspace s(ambient_);
  s.basis_ = row_reduce(field, forms).kernel;
  s.basis_ = row_reduce(field, s.basis_).echelon;
  return s;
}

std::vector<Vec> enumerate_points(const Field& field, const LinearSubspace& s) {
  std::vector<Vec> out;
  const std::size_t k = s.basis().rows();
  if (k == 0) return out;
  const std::uint64_t q = field.order();
  // Coefficient vectors whose first nonzero entry is 1, enumerated by the
  // position of that leading 1 and a counter over the trailing entries.
  auto element = [&](std::uint64_t idx) {
    Fe x{};
    if (field.degree() == 1) {
      x.re = static_cast<std::uint32_t>(idx);
    } else {
      x.re = static_cast<std::uint32_t>(idx % field.characteristic());
      x.im = static_cast<std::uint32_t>(idx / field.characteristic());
    }
    return x;
  };
  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::size_t tail = k - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < tail; ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
      Vec coeff(k);
      coeff[lead] = field.one();
      std::uint64_t c = code;
      for (std::size_t i = 0; i < tail; ++i) {
        coeff[lead + 1 + i] = element(c % q);
        c /= q;
      }
      Vec p(s.ambient_dim() + 1);
      for (std::size_t i = 0; i < k; ++i) {
        if (Field::is_zero(coeff[i])) continue;
        for (std::size_t j = 0; j < p.size(); ++j)
          p[j] = field.add(p[j], field.mul(coeff[i], s.basis()(i, j)));
      }
      out.push_back(normalized(field, p));
    }
  }
  return out;
}

}  // namespace scrollsec
