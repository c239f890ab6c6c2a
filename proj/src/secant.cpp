#include "scrollsec/secant.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace scrollsec {

namespace {

struct LabelRow {
  StratumLabel label;
  const char* name;
  int s;
  int rank;
  int j;
};

constexpr LabelRow kTable[] = {
    {StratumLabel::Empty2Z, "Empty2Z", 0, 1, 0},
    {StratumLabel::TwoPoints, "TwoPoints", 1, 2, 1},
    {StratumLabel::DoublePoint, "DoublePoint", 1, 1, 1},
    {StratumLabel::TwoLines, "TwoLines", 2, 2, 2},
    {StratumLabel::Conic, "Conic", 2, 3, 2},
    {StratumLabel::QuadricSurface, "QuadricSurface", 3, 4, 3},
};

const LabelRow& row_of(StratumLabel label) {
  for (const auto& r : kTable)
    if (r.label == label) return r;
  throw std::logic_error("unknown label");
}

Field extension_of(const Field& f) {
  return f.degree() == 2 ? f : Field::make(f.characteristic(), 2);
}

void check_external(const Scroll& scroll, std::span<const Fe> p) {
  if (p.size() != scroll.n_coords()) {
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(p.size()) +
                                                  " coordinates, scroll needs " +
                                                  std::to_string(scroll.n_coords()));
  }
  if (is_zero_vec(p)) throw Error(ErrorKind::ZeroVector, "zero point");
  if (scroll.contains(p)) throw Error(ErrorKind::POnVariety, "point lies on the scroll");
}

// Pairs (s, t) in P^1 over F_{q^d_max} used to fill out a generically nonzero kernel.
std::vector<P1Point> generic_fibers(const Field& ext, int d_max, std::size_t needed,
                                    const std::vector<P1Point>& taken, std::mt19937_64& rng) {
  const std::uint64_t pool = (d_max == 2 ? ext.order() : ext.characteristic()) + 1;
  std::vector<P1Point> out;
  if (pool <= 2 * needed) {
    for (const auto& x : projective_line(ext, d_max))
      if (std::find(taken.begin(), taken.end(), x) == taken.end()) out.push_back(x);
    return out;
  }
  while (out.size() < needed) {
    const P1Point x{ext.one(), d_max == 2 ? ext.random(rng) : ext.random_rational(rng)};
    if (std::find(taken.begin(), taken.end(), x) != taken.end()) continue;
    if (std::find(out.begin(), out.end(), x) != out.end()) continue;
    out.push_back(x);
  }
  return out;
}

}  // namespace

const char* to_string(StratumLabel label) { return row_of(label).name; }

StratumLabel label_from_string(const std::string& name) {
  for (const auto& r : kTable)
    if (name == r.name) return r.label;
  throw Error(ErrorKind::ParseError, "unknown stratum label '" + name + "'");
}

int label_j(StratumLabel label) { return row_of(label).j; }

std::optional<StratumLabel> label_for(int s, int rank) {
  for (const auto& r : kTable)
    if (r.s == s && r.rank == rank) return r.label;
  return std::nullopt;
}

SecantSignature make_signature(int sec_dim, int h, int n, int rank) {
  SecantSignature sig;
  sig.sec_dim = sec_dim;
  sig.h = h;
  sig.n = n;
  sig.s = sec_dim - h - 1;
  sig.rank = rank;
  const auto label = label_for(sig.s, rank);
  if (!label) {
    throw UnclassifiableError("signature (s=" + std::to_string(sig.s) + ", rank=" +
                                  std::to_string(rank) + ") is not one of the six types",
                              sig.s, rank);
  }
  sig.label = *label;
  sig.locus_dim = h + label_j(*label);
  sig.depth_pred = sec_dim + 1;
  return sig;
}

const char* to_string(PairResult r) {
  switch (r) {
    case PairResult::NotOnX: return "NotOnX";
    case PairResult::NotSecant: return "NotSecant";
    case PairResult::Secant: return "Secant";
    case PairResult::TangentContact: return "TangentContact";
  }
  return "?";
}

PairResult pair_test_minors(const Field& f, const std::vector<Minor>& minors,
                            std::span<const Fe> p, std::span<const Fe> q) {
  if (p.size() != q.size()) throw Error(ErrorKind::DimensionMismatch, "pair test lengths");
  auto value = [&](const Minor& g, std::span<const Fe> x) {
    return f.sub(f.mul(x[g.a], x[g.b]), f.mul(x[g.c], x[g.d]));
  };
  // B(p, q) for x_a x_b - x_c x_d.
  auto polar = [&](const Minor& g) {
    const Fe ab = f.add(f.mul(p[g.a], q[g.b]), f.mul(p[g.b], q[g.a]));
    const Fe cd = f.add(f.mul(p[g.c], q[g.d]), f.mul(p[g.d], q[g.c]));
    return f.sub(ab, cd);
  };
  std::vector<Fe> a(minors.size()), b(minors.size());
  std::size_t pivot = minors.size();
  bool q_on = true;
  for (std::size_t i = 0; i < minors.size(); ++i) {
    a[i] = value(minors[i], p);
    if (pivot == minors.size() && !Field::is_zero(a[i])) pivot = i;
    if (!Field::is_zero(value(minors[i], q))) q_on = false;
  }
  if (pivot == minors.size()) throw Error(ErrorKind::POnVariety, "point lies on the variety");
  if (!q_on) return PairResult::NotOnX;
  for (std::size_t i = 0; i < minors.size(); ++i) b[i] = polar(minors[i]);
  for (std::size_t i = 0; i < minors.size(); ++i) {
    if (!(f.mul(a[pivot], b[i]) == f.mul(a[i], b[pivot]))) return PairResult::NotSecant;
  }
  return is_zero_vec(b) ? PairResult::TangentContact : PairResult::Secant;
}

PairResult secant_pair_test(const Scroll& scroll, std::span<const Fe> p, std::span<const Fe> q) {
  check_external(scroll, p);
  if (q.size() != scroll.n_coords()) throw Error(ErrorKind::DimensionMismatch, "q length");
  if (is_zero_vec(q)) throw Error(ErrorKind::ZeroVector, "zero point");
  return pair_test_minors(scroll.field(), scroll.minors(), p, q);
}

Mat secant_forms(const Scroll& scroll, std::span<const Fe> p) {
  const Field& f = scroll.field();
  const Mat polar = scroll.polar_rows(p);
  const auto& gens = scroll.minors();
  std::vector<Fe> a(gens.size());
  std::size_t pivot = gens.size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    a[i] = scroll.eval_minor(gens[i], p);
    if (pivot == gens.size() && !Field::is_zero(a[i])) pivot = i;
  }
  if (pivot == gens.size()) throw Error(ErrorKind::POnVariety, "point lies on the scroll");
  Mat out(0, scroll.n_coords());
  Vec row(scroll.n_coords());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i == pivot) continue;
    for (std::size_t c = 0; c < row.size(); ++c)
      row[c] = f.sub(f.mul(a[pivot], polar(i, c)), f.mul(a[i], polar(pivot, c)));
    out.append_row(row);
  }
  return out;
}

Mat tangent_forms(const Scroll& scroll, std::span<const Fe> p) { return scroll.polar_rows(p); }

LinearSubspace fiber_secant_space(const Scroll& scroll, std::span<const Fe> p, const P1Point& x) {
  check_external(scroll, p);
  const Scroll ext(extension_of(scroll.field()), scroll.spec());
  return FiberPencil(ext, secant_forms(ext, p)).kernel_space(x);
}

std::uint64_t point_seed(const ScrollSpec& spec, std::span<const Fe> p) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (int a : spec.a()) mix(static_cast<std::uint64_t>(a));
  mix(static_cast<std::uint64_t>(spec.h() + 1));
  for (const auto& x : p) mix((std::uint64_t{x.im} << 32) | x.re);
  return h;
}

QForm secant_quadric(const Scroll& scroll, const LinearSubspace& sec, int* rank_out) {
  const Field f = extension_of(scroll.field());
  const Mat& basis = sec.basis();
  const std::size_t d = basis.rows();
  const Fe half = f.inv(f.from_int(2));
  std::vector<QForm> nonzero;
  for (const auto& g : scroll.minors()) {
    Mat gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Fe ab = f.add(f.mul(basis(i, g.a), basis(j, g.b)), f.mul(basis(i, g.b), basis(j, g.a)));
        const Fe cd = f.add(f.mul(basis(i, g.c), basis(j, g.d)), f.mul(basis(i, g.d), basis(j, g.c)));
        gram(i, j) = f.mul(half, f.sub(ab, cd));
      }
    QForm q(std::move(gram));
    if (!is_zero_form(q)) nonzero.push_back(std::move(q));
  }
  if (nonzero.empty()) {
    throw UnclassifiableError("every generator vanishes on the secant cone", -1, -1);
  }
  for (std::size_t i = 1; i < nonzero.size(); ++i) {
    if (!proportional(f, nonzero[0], nonzero[i])) {
      throw UnclassifiableError("generator restrictions to the secant cone are not proportional",
                                sec.dim() - static_cast<int>(scroll.spec().vertex_size()), -1);
    }
  }
  if (rank_out) *rank_out = static_cast<int>(qform_rank(f, nonzero[0]));
  return nonzero[0];
}

SecantCone secant_cone_and_quadric(const Scroll& scroll, std::span<const Fe> p, int d_max,
                                   bool direct) {
  check_external(scroll, p);
  if (d_max < 1 || d_max > 2) throw Error(ErrorKind::DimensionMismatch, "d_max must be 1 or 2");
  const Field ext = extension_of(scroll.field());
  const ScrollSpec& spec = scroll.spec();
  const Scroll full(ext, spec);
  const bool on_base = !direct && spec.h() >= 0;
  const Scroll work = on_base ? Scroll(ext, spec.base()) : full;
  const Vec wp = on_base ? full.drop_vertex(p) : Vec(p.begin(), p.end());

  std::mt19937_64 rng(point_seed(spec, p));
  const FiberPencil pencil(work, secant_forms(work, wp));
  const DropLocus drop = pencil.drop_locus(d_max, rng);
  if (drop.beyond_dmax) {
    throw UnclassifiableError("secant fibers exist outside F_{q^" + std::to_string(d_max) +
                                  "}; raise d_max",
                              -1, -1);
  }
  std::vector<P1Point> xs = drop.points;
  if (pencil.generic_rank() < pencil.n_cols()) {
    const int max_a = *std::max_element(spec.a().begin(), spec.a().end());
    const std::size_t needed = (pencil.n_cols() + 1) * static_cast<std::size_t>(max_a) + 2;
    const auto extra = generic_fibers(ext, d_max, needed, xs, rng);
    xs.insert(xs.end(), extra.begin(), extra.end());
  }

  auto lift_space = [&](const LinearSubspace& s) {
    if (!on_base) return s;
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < s.basis().rows(); ++i) pts.push_back(full.lift(s.basis().row(i)));
    return full.vertex().join(ext, LinearSubspace::span(ext, pts, spec.ambient_dim()));
  };

  SecantCone out;
  std::vector<Vec> span_pts{Vec(p.begin(), p.end())};
  for (const auto& x : xs) {
    const LinearSubspace fiber = lift_space(pencil.kernel_space(x));
    for (std::size_t i = 0; i < fiber.basis().rows(); ++i) {
      span_pts.push_back(fiber.basis().row_vec(i));
      out.sample.points.push_back(fiber.basis().row_vec(i));
    }
    out.sample.fibers.push_back({x, fiber});
  }
  const LinearSubspace vert = full.vertex();
  for (std::size_t i = 0; i < vert.basis().rows(); ++i) {
    span_pts.push_back(vert.basis().row_vec(i));
    out.sample.points.push_back(vert.basis().row_vec(i));
  }
  out.sec = LinearSubspace::span(ext, span_pts, spec.ambient_dim());
  out.quadric = secant_quadric(full, out.sec, nullptr);
  return out;
}

SecantSignature signature_of(const Scroll& scroll, const SecantCone& cone) {
  const Field f = extension_of(scroll.field());
  const int rank = static_cast<int>(qform_rank(f, cone.quadric));
  return make_signature(cone.sec.dim(), scroll.spec().h(), static_cast<int>(scroll.spec().n()), rank);
}

SecantSignature classify_signature(const Scroll& scroll, std::span<const Fe> p, int d_max,
                                   bool direct) {
  return signature_of(scroll, secant_cone_and_quadric(scroll, p, d_max, direct));
}

std::vector<Vec> fiber_union_points(const Scroll& scroll, std::span<const Fe> p, int d) {
  check_external(scroll, p);
  const Field ext = extension_of(scroll.field());
  const Field fd = Field::make(ext.characteristic(), d);
  const Scroll full(ext, scroll.spec());
  const FiberPencil pencil(full, secant_forms(full, p));
  std::map<std::vector<std::uint64_t>, Vec> seen;
  for (const auto& x : projective_line(ext, d)) {
    for (const auto& pt : enumerate_points(fd, pencil.kernel_space(x))) {
      std::vector<std::uint64_t> key;
      for (const auto& c : pt) key.push_back((std::uint64_t{c.im} << 32) | c.re);
      seen.emplace(std::move(key), pt);
    }
  }
  std::vector<Vec> out;
  for (auto& [key, pt] : seen) out.push_back(std::move(pt));
  return out;
}

}  // namespace scrollsec
