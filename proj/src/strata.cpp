#include "scrollsec/strata.hpp"

namespace scrollsec {

namespace {

Field extension_of(const Field& f) {
  return f.degree() == 2 ? f : Field::make(f.characteristic(), 2);
}

std::span<const Fe> block(const Scroll& scroll, std::span<const Fe> p, std::size_t i) {
  return p.subspan(scroll.spec().block_offset(i), scroll.spec().block_size(i));
}

bool blocks_zero(const Scroll& scroll, std::span<const Fe> p, const std::vector<std::size_t>& idx) {
  for (auto i : idx)
    if (!is_zero_vec(block(scroll, p, i))) return false;
  return true;
}

void check_length(const Scroll& scroll, std::span<const Fe> p) {
  if (p.size() != scroll.n_coords()) throw Error(ErrorKind::DimensionMismatch, "point length");
}

// Drop locus test on the base scroll: is the pencil's kernel nonzero somewhere?
bool pencil_has_kernel(const Scroll& base, const Mat& forms, int d_max, std::uint64_t seed) {
  const FiberPencil pencil(base, forms);
  if (pencil.generic_rank() < pencil.n_cols()) return true;
  std::mt19937_64 rng(seed);
  return !pencil.drop_locus(d_max, rng).points.empty();
}

}  // namespace

bool member_A(const Scroll& scroll, std::span<const Fe> p) {
  check_length(scroll, p);
  const BlockClasses b = scroll.block_classes();
  return blocks_zero(scroll, p, b.twos) && blocks_zero(scroll, p, b.large);
}

bool member_U(const Scroll& scroll, std::span<const Fe> p) {
  check_length(scroll, p);
  const BlockClasses b = scroll.block_classes();
  if (!blocks_zero(scroll, p, b.large)) return false;
  // The a_i = 2 blocks as columns of a 3 x (m - k) matrix: rank <= 1 is the Segre P^2 x P^(m-k-1).
  Mat m(0, 3);
  for (auto i : b.twos) m.append_row(block(scroll, p, i));
  return rank(scroll.field(), m) <= 1;
}

bool member_B(const Scroll& scroll, std::span<const Fe> p) {
  check_length(scroll, p);
  const Field& f = scroll.field();
  if (scroll.spec().k() == 0) return !is_zero_vec(p) && scroll.contains(p);
  std::optional<P1Point> common;
  for (std::size_t i = 0; i < scroll.spec().n(); ++i) {
    const int a = scroll.spec().a()[i];
    if (a < 2) continue;
    const auto c = block(scroll, p, i);
    if (is_zero_vec(c)) continue;
    std::size_t j = 0;
    while (Field::is_zero(c[j]) && Field::is_zero(c[j + 1])) ++j;
    const Vec ratio = normalized(f, std::vector<Fe>{c[j], c[j + 1]});
    const P1Point x{ratio[0], ratio[1]};
    const Vec v = veronese_vector(f, a, x.s, x.t);
    if (rank(f, Mat::from_rows({Vec(c.begin(), c.end()), v}, c.size())) > 1) return false;
    if (common && !(*common == x)) return false;
    common = x;
  }
  return true;
}

bool member_tangent(const Scroll& scroll, std::span<const Fe> p, int d_max) {
  check_length(scroll, p);
  const Scroll base(extension_of(scroll.field()), scroll.spec().base());
  const Vec pb = scroll.drop_vertex(p);
  if (is_zero_vec(pb) || base.contains(pb)) throw Error(ErrorKind::POnVariety, "point lies on the scroll");
  return pencil_has_kernel(base, tangent_forms(base, pb), d_max, point_seed(scroll.spec(), p) ^ 0x5a);
}

bool member_secant_variety(const Scroll& scroll, std::span<const Fe> p, int d_max) {
  check_length(scroll, p);
  const Scroll base(extension_of(scroll.field()), scroll.spec().base());
  const Vec pb = scroll.drop_vertex(p);
  if (is_zero_vec(pb) || base.contains(pb)) throw Error(ErrorKind::POnVariety, "point lies on the scroll");
  return pencil_has_kernel(base, secant_forms(base, pb), d_max, point_seed(scroll.spec(), p) ^ 0xa5);
}

StratumLabel decide_stratum(bool in_A, bool in_B, bool in_U, bool in_Tan, bool in_Sec) {
  if (in_A) return StratumLabel::QuadricSurface;
  if (in_B) return StratumLabel::TwoLines;
  if (in_U) return StratumLabel::Conic;
  if (in_Tan) return StratumLabel::DoublePoint;
  if (in_Sec) return StratumLabel::TwoPoints;
  return StratumLabel::Empty2Z;
}

bool implication_chain_holds(const MembershipReport& r, bool smooth) {
  if (r.in_A && !r.in_B) return false;
  if (smooth && r.in_A && !r.in_U) return false;
  if ((r.in_B || r.in_U) && !r.in_Tan) return false;
  if (r.in_Tan && !r.in_Sec) return false;
  return true;
}

MembershipReport stratum_geometric(const Scroll& scroll, std::span<const Fe> p, int d_max) {
  check_length(scroll, p);
  if (is_zero_vec(p)) throw Error(ErrorKind::ZeroVector, "zero point");
  if (scroll.contains(p)) throw Error(ErrorKind::POnVariety, "point lies on the scroll");
  MembershipReport r;
  r.in_A = member_A(scroll, p);
  r.in_B = member_B(scroll, p);
  r.in_U = member_U(scroll, p);
  r.in_Tan = member_tangent(scroll, p, d_max);
  r.in_Sec = member_secant_variety(scroll, p, d_max);
  r.label_geom = decide_stratum(r.in_A, r.in_B, r.in_U, r.in_Tan, r.in_Sec);
  r.signature = classify_signature(scroll, p, d_max);
  r.agrees_with_signature = r.signature->label == r.label_geom;
  return r;
}

}  // namespace scrollsec
