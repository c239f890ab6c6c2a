#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "scrollsec/linalg.hpp"
#include "scrollsec/qform.hpp"

namespace scrollsec {

/// Combinatorial type S(a_1,...,a_n) with an h-dimensional vertex (h = -1: no vertex).
/// Coordinates: the h+1 vertex coordinates first, then block i of a_i+1
/// coordinates for each a_i in nondecreasing order.
class ScrollSpec {
 public:
  /// Sorts a. Throws EmptyType (no blocks, or a_i < 1), CodimTooSmall (sum a < 3),
  /// DimensionMismatch (h < -1).
  static ScrollSpec make(std::vector<int> a, int h = -1);
  /// Parses "S(1,2)" or "S(1,2)+cone(0)"; throws ParseError.
  static ScrollSpec parse(const std::string& literal);

  const std::vector<int>& a() const { return a_; }
  int h() const { return h_; }
  std::size_t n() const { return a_.size(); }
  int deg() const { return deg_; }
  /// N, with the scroll sitting in P^N.
  std::size_t ambient_dim() const { return static_cast<std::size_t>(deg_ + n() + h_); }
  int dim() const { return static_cast<int>(n()) + h_ + 1; }
  int codim() const { return deg_ - 1; }
  /// Number of blocks with a_i = 1.
  std::size_t k() const { return k_; }
  /// k plus the number of blocks with a_i = 2.
  std::size_t m() const { return m_; }

  std::size_t vertex_size() const { return static_cast<std::size_t>(h_ + 1); }
  std::size_t block_offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t block_size(std::size_t i) const { return static_cast<std::size_t>(a_.at(i)) + 1; }

  /// Same a with the vertex removed.
  ScrollSpec base() const { return make(a_, -1); }
  ScrollSpec with_vertex(int h) const { return make(a_, h); }

  std::string literal() const;

  friend bool operator==(const ScrollSpec& x, const ScrollSpec& y) {
    return x.a_ == y.a_ && x.h_ == y.h_;
  }

 private:
  ScrollSpec() = default;

  std::vector<int> a_;
  int h_ = -1;
  int deg_ = 0;
  std::size_t k_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> offsets_;
};

/// Parameters of a point: x = (s:t) on P^1, fiber coordinates u, vertex part z.
/// A pure vertex point has s = t = 0 and u = 0.
struct ScrollPoint {
  Fe s;
  Fe t;
  Vec u;
  Vec z;
};

/// Rows are the 2x2 minors x_a x_b - x_c x_d of the block-Hankel matrix.
struct Minor {
  std::size_t a, b, c, d;
};

/// Coordinate indices of the distinguished sub-scrolls.
struct BlockClasses {
  std::vector<std::size_t> ones;   // blocks with a_i = 1
  std::vector<std::size_t> twos;   // blocks with a_i = 2
  std::vector<std::size_t> large;  // blocks with a_i >= 3
};

struct SpecialSubspaces {
  /// Vertex block plus the a_i = 1 blocks.
  LinearSubspace A;
  /// The a_i = 2 blocks.
  LinearSubspace S2span;
  BlockClasses blocks;
};

/// (s^a, s^(a-1) t, ..., t^a).
Vec veronese_vector(const Field& field, int a, const Fe& s, const Fe& t);

/// A scroll bound to a field, with its quadric generators precomputed.
class Scroll {
 public:
  Scroll(const Field& field, ScrollSpec spec);

  const Field& field() const { return field_; }
  const ScrollSpec& spec() const { return spec_; }
  std::size_t n_coords() const { return spec_.ambient_dim() + 1; }

  const std::vector<Minor>& minors() const { return minors_; }
  std::vector<QForm> quadric_generators() const;

  /// Throws DimensionMismatch on wrong lengths, ZeroVector if the image is zero.
  Vec embed(const ScrollPoint& pt) const;
  /// Throws DimensionMismatch, ZeroVector.
  bool contains(std::span<const Fe> p) const;

  Fe eval_minor(const Minor& g, std::span<const Fe> p) const;
  /// Gradient of each generator at p (one row per generator): row_i . v = B_i(p, v).
  Mat polar_rows(std::span<const Fe> p) const;

  LinearSubspace vertex() const;
  /// Vertex plus the n vectors v_i(x) placed in their blocks.
  LinearSubspace ruling(const Fe& s, const Fe& t) const;
  /// Throws VertexPoint for a vertex point.
  LinearSubspace tangent_space(const ScrollPoint& pt) const;
  SpecialSubspaces special_subspaces() const;
  BlockClasses block_classes() const;

  /// Drops the vertex coordinates.
  Vec drop_vertex(std::span<const Fe> p) const;
  /// Inserts zero vertex coordinates in front of a base-scroll vector.
  Vec lift(std::span<const Fe> base_point) const;

 private:
  Field field_;
  ScrollSpec spec_;
  std::vector<Minor> minors_;
};

}  // namespace scrollsec
