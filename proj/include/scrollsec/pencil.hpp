#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "scrollsec/poly.hpp"
#include "scrollsec/scroll.hpp"

namespace scrollsec {

/// Point (s:t) of P^1.
struct P1Point {
  Fe s;
  Fe t;
  friend bool operator==(const P1Point&, const P1Point&) = default;
};

/// All points of P^1 over the subfield of degree d (1 or 2) of the given field,
/// normalized as (1:t) or (0:1).
std::vector<P1Point> projective_line(const Field& field, int d);

/// Points of P^1 where a pencil's rank drops below its generic rank.
struct DropLocus {
  /// Drop points over F_{q^d_max}, finite ones ascending, (0:1) last.
  std::vector<P1Point> points;
  /// True if some drop point lies outside F_{q^d_max}.
  bool beyond_dmax = false;
};

/// A linear system restricted to the rulings L(x) of a scroll. Row i is a
/// linear form on the ambient space; on L(x), with coordinates w for the
/// vertex directions e_j and the block vectors v_i(x), it becomes a row of
/// polynomials in x. The scroll's field must be the quadratic extension.
class FiberPencil {
 public:
  FiberPencil(const Scroll& scroll, const Mat& forms);

  std::size_t n_cols() const { return scroll_.spec().vertex_size() + scroll_.spec().n(); }
  std::size_t generic_rank() const { return generic_rank_; }

  /// Direction vectors spanning L(x), one per column.
  Mat column_vectors(const P1Point& x) const;
  /// The numeric system at x (rows of the reduced form basis, one column per direction).
  Mat evaluate(const P1Point& x) const;
  /// Projectivized kernel at x, embedded as a subspace of the ambient space.
  LinearSubspace kernel_space(const P1Point& x) const;

  /// Exact drop locus. Candidates come from gcds of random compressions
  /// det(R P C), which contain every drop point; each candidate is confirmed
  /// by an exact rank evaluation.
  DropLocus drop_locus(int d_max, std::mt19937_64& rng) const;

 private:
  using PolyRow = std::vector<poly::Poly>;

  Scroll scroll_;
  Mat basis_;                         // echelon basis of the forms
  std::vector<PolyRow> entries_;      // basis_ restricted to (1:t)
  std::size_t generic_rank_ = 0;
};

/// Rank over F(t) of a polynomial matrix (fraction-free elimination).
std::size_t poly_matrix_rank(const Field& field, std::vector<std::vector<poly::Poly>> m);
/// Determinant of a square polynomial matrix.
poly::Poly poly_matrix_det(const Field& field, std::vector<std::vector<poly::Poly>> m);

}  // namespace scrollsec
