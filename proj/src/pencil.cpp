#include "scrollsec/pencil.hpp"

#include <stdexcept>

#include "scrollsec/error.hpp"

namespace scrollsec {

using poly::Poly;
using PolyMat = std::vector<std::vector<Poly>>;

namespace {

// Fraction-free elimination; returns the rank, leaves the last pivot in *last.
std::size_t bareiss(const Field& f, PolyMat& m, Poly* last, bool* negated) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Poly prev{f.one()};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c].empty()) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      std::swap(m[sel], m[r]);
      *negated = !*negated;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        const Poly num = poly::sub(f, poly::mul(f, m[r][c], m[i][j]), poly::mul(f, m[i][c], m[r][j]));
        auto [q, rem] = poly::divmod(f, num, prev);
        if (!rem.empty()) throw std::logic_error("fraction-free elimination lost exactness");
        m[i][j] = std::move(q);
      }
      m[i][c].clear();
    }
    prev = m[r][c];
    ++r;
  }
  *last = prev;
  return r;
}

// Degree of the part of g without roots in the field; roots are collected.
int nonsplit_degree(const Field& f, const Poly& g, std::mt19937_64& rng, std::vector<Fe>* roots) {
  *roots = poly::roots(f, g, rng);
  Poly h = poly::monic(f, g);
  for (const Fe& x : *roots) {
    const Poly lin{f.neg(x), f.one()};
    while (poly::degree(h) > 0 && Field::is_zero(poly::eval(f, h, x))) h = poly::divmod(f, h, lin).first;
  }
  return poly::degree(h);
}

// Calls fn on every r-subset of {0..n-1}; stops early when fn returns false.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t r, Fn&& fn) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return true;
  for (;;) {
    if (!fn(idx)) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::size_t poly_matrix_rank(const Field& field, PolyMat m) {
  for (auto& row : m)
    for (auto& e : row) poly::trim(e);
  Poly last;
  bool neg = false;
  return bareiss(field, m, &last, &neg);
}

Poly poly_matrix_det(const Field& field, PolyMat m) {
  const std::size_t n = m.size();
  for (auto& row : m) {
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square");
    for (auto& e : row) poly::trim(e);
  }
  if (n == 0) return Poly{field.one()};
  Poly last;
  bool neg = false;
  if (bareiss(field, m, &last, &neg) < n) return {};
  return neg ? poly::sub(field, Poly{}, last) : last;
}

std::vector<P1Point> projective_line(const Field& field, int d) {
  if (d < 1 || d > field.degree()) throw Error(ErrorKind::DimensionMismatch, "projective_line degree");
  std::vector<P1Point> out;
  const std::uint32_t q = field.characteristic();
  for (std::uint32_t im = 0; im < (d == 2 ? q : 1u); ++im)
    for (std::uint32_t re = 0; re < q; ++re) out.push_back({field.one(), field.element(re, im)});
  out.push_back({field.zero(), field.one()});
  return out;
}

FiberPencil::FiberPencil(const Scroll& scroll, const Mat& forms)
    : scroll_(scroll.field().degree() == 2
                  ? scroll
                  : Scroll(Field::make(scroll.field().characteristic(), 2), scroll.spec())) {
  if (forms.cols() != scroll_.n_coords()) throw Error(ErrorKind::DimensionMismatch, "pencil forms width");
  const Field& f = scroll_.field();
  const ScrollSpec& spec = scroll_.spec();
  basis_ = row_reduce(f, forms).echelon;
  entries_.resize(basis_.rows());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    auto& row = entries_[r];
    for (std::size_t j = 0; j < spec.vertex_size(); ++j) {
      Poly e{basis_(r, j)};
      poly::trim(e);
      row.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < spec.n(); ++i) {
      Poly e;
      for (std::size_t l = 0; l < spec.block_size(i); ++l) e.push_back(basis_(r, spec.block_offset(i) + l));
      poly::trim(e);
      row.push_back(std::move(e));
    }
  }
  generic_rank_ = poly_matrix_rank(f, entries_);
}

Mat FiberPencil::column_vectors(const P1Point& x) const {
  const Field& f = scroll_.field();
  const ScrollSpec& spec = scroll_.spec();
  Mat cols(0, scroll_.n_coords());
  for (std::size_t j = 0; j < spec.vertex_size(); ++j) {
    Vec e(scroll_.n_coords());
    e[j] = f.one();
    cols.append_row(e);
  }
  for (std::size_t i = 0; i < spec.n(); ++i) {
    Vec e(scroll_.n_coords());
    const Vec v = veronese_vector(f, spec.a()[i], x.s, x.t);
    for (std::size_t l = 0; l < v.size(); ++l) e[spec.block_offset(i) + l] = v[l];
    cols.append_row(e);
  }
  return cols;
}

Mat FiberPencil::evaluate(const P1Point& x) const {
  return mat_mul(scroll_.field(), basis_, column_vectors(x).transposed());
}

LinearSubspace FiberPencil::kernel_space(const P1Point& x) const {
  const Field& f = scroll_.field();
  const Mat cols = column_vectors(x);
  Mat ker;
  if (basis_.rows() == 0) {
    ker = Mat::identity(f, n_cols());
  } else {
    ker = row_reduce(f, mat_mul(f, basis_, cols.transposed())).kernel;
  }
  return LinearSubspace::from_basis(f, mat_mul(f, ker, cols), scroll_.spec().ambient_dim());
}

DropLocus FiberPencil::drop_locus(int d_max, std::mt19937_64& rng) const {
  DropLocus out;
  const std::size_t r = generic_rank_;
  if (r == 0) return out;
  const Field& f = scroll_.field();
  const std::size_t b = entries_.size(), c = n_cols();

  Poly g;
  std::vector<Fe> roots;
  bool resolved = false;
  for (int attempt = 0; attempt < 8; ++attempt) {
    // det(R P C) with random R (r x b) and C (c x r).
    PolyMat pc(b, std::vector<Poly>(r));
    Mat cm(c, r);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < r; ++j) cm(i, j) = f.random(rng);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < c; ++j)
          if (!entries_[i][j].empty())
            pc[i][k] = poly::add(f, pc[i][k], poly::mul(f, entries_[i][j], Poly{cm(j, k)}));
    PolyMat rpc(r, std::vector<Poly>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < b; ++j) {
        const Fe coef = f.random(rng);
        for (std::size_t k = 0; k < r; ++k)
          if (!pc[j][k].empty()) rpc[i][k] = poly::add(f, rpc[i][k], poly::mul(f, pc[j][k], Poly{coef}));
      }
    const Poly d = poly_matrix_det(f, std::move(rpc));
    if (d.empty()) continue;
    g = poly::gcd(f, g, d);
    if (nonsplit_degree(f, g, rng, &roots) == 0) {
      resolved = true;
      break;
    }
  }
  if (!resolved) {
    // Exact determinantal divisor: gcd of all r x r minors.
    g.clear();
    for_each_subset(b, r, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(c, r, [&](const std::vector<std::size_t>& cols) {
        PolyMat minor(r, std::vector<Poly>(r));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) minor[i][j] = entries_[rows[i]][cols[j]];
        const Poly d = poly_matrix_det(f, std::move(minor));
        if (d.empty()) return true;
        g = poly::gcd(f, g, d);
        return nonsplit_degree(f, g, rng, &roots) > 0;
      });
    });
    if (g.empty()) throw std::logic_error("pencil has no nonzero maximal minor");
    out.beyond_dmax = nonsplit_degree(f, g, rng, &roots) > 0;
  }

  std::vector<P1Point> candidates;
  for (const Fe& t : roots) candidates.push_back({f.one(), t});
  candidates.push_back({f.zero(), f.one()});
  for (const auto& x : candidates) {
    if (rank(f, evaluate(x)) >= r) continue;
    if (d_max < 2 && !Field::is_rational(x.t)) {
      out.beyond_dmax = true;
      continue;
    }
    out.points.push_back(x);
  }
  return out;
}

}  // namespace scrollsec
