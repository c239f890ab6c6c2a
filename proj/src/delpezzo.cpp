#include "scrollsec/delpezzo.hpp"

#include <algorithm>
#include <stdexcept>

#include "scrollsec/strata.hpp"

namespace scrollsec {

namespace {

bool has(const std::vector<StratumLabel>& v, StratumLabel l) {
  return std::find(v.begin(), v.end(), l) != v.end();
}

std::vector<StratumLabel> intersect(const std::vector<StratumLabel>& a, const std::vector<StratumLabel>& b) {
  std::vector<StratumLabel> out;
  for (auto l : kAllLabels)
    if (has(a, l) && has(b, l)) out.push_back(l);
  return out;
}

std::string description_of(DelPezzoCase c) {
  switch (c) {
    case DelPezzoCase::A: return "Join(Vert, Sec(X0)) minus X";
    case DelPezzoCase::BI: return "P^N minus X";
    case DelPezzoCase::BII: return "Join(Vert, Join(S(1), X0)) minus X";
    case DelPezzoCase::BIII: return "Join(Vert, P^2 x P^1) minus X";
    case DelPezzoCase::BIV: return "Join(Vert, <S(2)>) minus X";
    case DelPezzoCase::CI: return "P^N minus X";
    case DelPezzoCase::CII: return "Join(Vert, <S(1,1)>) minus X";
    default: return "";
  }
}

// Partitions of deg into exactly n parts, ascending.
void partitions(int deg, int n, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (deg == 0) out.push_back(cur);
    return;
  }
  for (int a = min_part; a * n <= deg; ++a) {
    cur.push_back(a);
    partitions(deg - a, n - 1, a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const char* to_string(DelPezzoCase c) {
  switch (c) {
    case DelPezzoCase::None: return "none";
    case DelPezzoCase::A: return "a";
    case DelPezzoCase::BI: return "b-i";
    case DelPezzoCase::BII: return "b-ii";
    case DelPezzoCase::BIII: return "b-iii";
    case DelPezzoCase::BIV: return "b-iv";
    case DelPezzoCase::CI: return "c-i";
    case DelPezzoCase::CII: return "c-ii";
    case DelPezzoCase::Veronese: return "veronese";
    case DelPezzoCase::Unmatched: return "unmatched";
  }
  return "?";
}

DepthReport depth_predict(const SecantSignature& sig, bool smooth, bool in_sec) {
  DepthReport r;
  r.j = label_j(sig.label);
  r.acm = r.j == sig.n;
  if (smooth && !in_sec) {
    r.t = 1;
    r.linearly_normal = false;
  } else {
    r.t = sig.depth_pred;
  }
  return r;
}

bool is_del_pezzo(const ScrollSpec& spec, const SecantSignature& sig) {
  return label_j(sig.label) == static_cast<int>(spec.n());
}

DelPezzoCase family_case(const ScrollSpec& spec) {
  const auto& a = spec.a();
  switch (a.size()) {
    case 1: return DelPezzoCase::A;
    case 2:
      if (a[0] == 1) return a[1] == 2 ? DelPezzoCase::BI : DelPezzoCase::BII;
      if (a[0] == 2) return a[1] == 2 ? DelPezzoCase::BIII : DelPezzoCase::BIV;
      return DelPezzoCase::None;
    case 3:
      if (a[0] == 1 && a[1] == 1) return a[2] == 1 ? DelPezzoCase::CI : DelPezzoCase::CII;
      return DelPezzoCase::None;
    default: return DelPezzoCase::None;
  }
}

DelPezzoCase del_pezzo_case(const ScrollSpec& spec, const SecantSignature& sig) {
  if (!is_del_pezzo(spec, sig)) return DelPezzoCase::None;
  const DelPezzoCase c = family_case(spec);
  return c == DelPezzoCase::None ? DelPezzoCase::Unmatched : c;
}

PointAnalysis analyze_point(const Scroll& scroll, std::span<const Fe> p, int d_max) {
  PointAnalysis out;
  out.signature = classify_signature(scroll, p, d_max);
  const bool smooth = scroll.spec().h() < 0;
  // On a smooth scroll Sec_p = {p} exactly when p is off Sec.
  const bool in_sec = !smooth || out.signature.label != StratumLabel::Empty2Z;
  out.depth = depth_predict(out.signature, smooth, in_sec);
  out.depth.del_pezzo_case = del_pezzo_case(scroll.spec(), out.signature);
  return out;
}

std::vector<StratumLabel> realizable_labels(const ScrollSpec& spec) {
  const int n = static_cast<int>(spec.n()), k = static_cast<int>(spec.k()), m = static_cast<int>(spec.m());
  const bool ones_and_one_two = (k == n) || (k == n - 1 && spec.a().back() == 2);
  std::vector<StratumLabel> out;
  if (spec.deg() > n + 2) out.push_back(StratumLabel::Empty2Z);
  if (!ones_and_one_two) {
    out.push_back(StratumLabel::TwoPoints);
    out.push_back(StratumLabel::DoublePoint);
  }
  if (k >= 1 && n > k) out.push_back(StratumLabel::TwoLines);
  if (m > k) out.push_back(StratumLabel::Conic);
  if (k >= 2) out.push_back(StratumLabel::QuadricSurface);
  return intersect(out, std::vector<StratumLabel>(std::begin(kAllLabels), std::end(kAllLabels)));
}

const char* to_string(LocusSet s) {
  switch (s) {
    case LocusSet::A: return "A";
    case LocusSet::B: return "B";
    case LocusSet::U: return "U";
    case LocusSet::BU: return "B+U";
    case LocusSet::W: return "W";
  }
  return "?";
}

std::vector<StratumLabel> strata_of(LocusSet s) {
  using L = StratumLabel;
  switch (s) {
    case LocusSet::A: return {L::QuadricSurface};
    case LocusSet::B: return {L::TwoLines, L::QuadricSurface};
    case LocusSet::U: return {L::Conic, L::QuadricSurface};
    case LocusSet::BU: return {L::TwoLines, L::Conic, L::QuadricSurface};
    case LocusSet::W: return {L::TwoPoints, L::DoublePoint, L::TwoLines, L::Conic, L::QuadricSurface};
  }
  return {};
}

bool locus_contains(const Scroll& scroll, LocusSet s, std::span<const Fe> p) {
  switch (s) {
    case LocusSet::A: return member_A(scroll, p);
    case LocusSet::B: return member_B(scroll, p);
    case LocusSet::U: return member_U(scroll, p);
    case LocusSet::BU: return member_B(scroll, p) || member_U(scroll, p);
    case LocusSet::W: return member_secant_variety(scroll, p);
  }
  return false;
}

Vec sample_in_locus(const Scroll& scroll, LocusSet s, std::mt19937_64& rng) {
  const bool coin = rng() & 1;
  switch (s) {
    case LocusSet::A: return sample_witness(scroll, WitnessKind::SpanA, rng);
    case LocusSet::B: return sample_witness(scroll, WitnessKind::JoinB, rng);
    case LocusSet::U: return sample_witness(scroll, WitnessKind::JoinU, rng);
    case LocusSet::BU: {
      const WitnessKind kind = coin ? WitnessKind::JoinB : WitnessKind::JoinU;
      return sample_witness(scroll, witness_available(scroll.spec(), kind) ? kind : WitnessKind::JoinU, rng);
    }
    case LocusSet::W: return sample_witness(scroll, coin ? WitnessKind::Chord : WitnessKind::Tangent, rng);
  }
  throw std::logic_error("unknown locus set");
}

std::vector<AtlasEntry> atlas_enumerate(const AtlasBounds& bounds) {
  std::vector<AtlasEntry> out;
  for (int h = -1; h <= bounds.max_h; ++h)
    for (int deg = 1; deg <= bounds.max_deg; ++deg)
      for (int n = 1; n <= bounds.max_n; ++n) {
        std::vector<std::vector<int>> shapes;
        std::vector<int> cur;
        partitions(deg, n, 1, cur, shapes);
        for (const auto& a : shapes) {
          if (deg < 3) continue;  // codim < 2: quadrics and linear spaces
          const ScrollSpec spec = ScrollSpec::make(a, h);
          const auto real = realizable_labels(spec);
          std::vector<StratumLabel> dp;
          for (auto l : real)
            if (label_j(l) == n) dp.push_back(l);
          if (dp.empty()) continue;
          AtlasEntry e{spec, dp, LocusSet::W, dp.size() == real.size(), family_case(spec), ""};
          bool named = false;
          for (auto s : {LocusSet::A, LocusSet::B, LocusSet::U, LocusSet::BU, LocusSet::W})
            if (intersect(strata_of(s), real) == dp) {
              e.locus = s;
              named = true;
              break;
            }
          if (!named) throw std::logic_error("no named set matches the locus of " + spec.literal());
          if (e.tag == DelPezzoCase::None) e.tag = DelPezzoCase::Unmatched;
          e.description = description_of(e.tag);
          out.push_back(std::move(e));
        }
      }
  return out;
}

AtlasCheck verify_entry(const AtlasEntry& entry, const Field& field, int samples, std::mt19937_64& rng) {
  const Scroll sc(field, entry.spec);
  auto acm = [&](const Vec& p) { return analyze_point(sc, p).depth.acm; };
  AtlasCheck c;
  for (int i = 0; i < samples; ++i) {
    const Vec p = sample_in_locus(sc, entry.locus, rng);
    ++c.inside;
    c.inside_acm += acm(p);
  }
  if (entry.fills) return c;
  for (int tries = 0; c.outside < samples && tries < 100 * samples; ++tries) {
    const Vec p = sample_external_point(sc, rng);
    if (locus_contains(sc, entry.locus, p)) continue;
    ++c.outside;
    c.outside_acm += acm(p);
  }
  return c;
}

Vec Projection::apply(const Field& field, std::span<const Fe> y) const {
  const Fe ratio = field.div(y[pivot], center[pivot]);
  Vec out;
  out.reserve(y.size() - 1);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (i != pivot) out.push_back(field.sub(y[i], field.mul(ratio, center[i])));
  return out;
}

Projection project(const Scroll& scroll, std::span<const Fe> p, int d_max) {
  const SecantCone cone = secant_cone_and_quadric(scroll, p, d_max);
  const Field f = Field::make(scroll.field().characteristic(), 2);
  Projection pr;
  pr.center = Vec(p.begin(), p.end());
  while (pr.pivot < p.size() && Field::is_zero(p[pr.pivot])) ++pr.pivot;
  if (pr.pivot == p.size()) throw Error(ErrorKind::ZeroVector, "projection center is zero");
  pr.signature = signature_of(scroll, cone);
  std::vector<Vec> img;
  for (const auto& q : cone.sample.points) img.push_back(pr.apply(f, q));
  pr.nonnormal_locus = LinearSubspace::span(f, img, scroll.spec().ambient_dim() - 1);
  if (pr.nonnormal_locus.dim() != pr.signature.sec_dim - 1)
    throw std::logic_error("image of Sec_p has dimension " + std::to_string(pr.nonnormal_locus.dim()));
  pr.image_degree = static_cast<int>(scroll.spec().deg());
  pr.image_codim = static_cast<int>(scroll.spec().codim()) - 1;
  return pr;
}

const char* to_string(VeroneseClass c) {
  switch (c) {
    case VeroneseClass::OnVariety: return "OnVariety";
    case VeroneseClass::Conic: return "Conic";
    case VeroneseClass::Empty: return "Empty";
  }
  return "?";
}

VeroneseResult veronese_classify(const Field& field, const Mat& m, int h) {
  if (m.rows() != 3 || m.cols() != 3) throw Error(ErrorKind::DimensionMismatch, "need a 3x3 matrix");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(m(i, j) == m(j, i))) throw Error(ErrorKind::DimensionMismatch, "matrix is not symmetric");
  VeroneseResult r;
  r.rank = static_cast<int>(rank(field, m));
  if (r.rank == 0) throw Error(ErrorKind::ZeroMatrix, "zero matrix is not a point");
  if (r.rank == 1) {
    r.cls = VeroneseClass::OnVariety;
    r.depth.t = 0;
    return r;
  }
  if (r.rank == 2) {
    r.cls = VeroneseClass::Conic;
    r.depth.t = h + 4;
    r.depth.j = 2;
    r.depth.acm = true;
    r.depth.del_pezzo_case = DelPezzoCase::Veronese;
    return r;
  }
  r.cls = VeroneseClass::Empty;
  r.depth.j = 0;
  if (h < 0) {
    r.depth.t = 1;
    r.depth.linearly_normal = false;
  } else {
    r.depth.t = h + 2;
  }
  return r;
}

std::vector<Vec> veronese_conic_points(const Field& field, const Mat& m) {
  const LinearSubspace cols = LinearSubspace::span(field, {m.transposed().row_vec(0), m.transposed().row_vec(1),
                                                           m.transposed().row_vec(2)}, 2);
  if (cols.dim() != 1) throw Error(ErrorKind::DimensionMismatch, "matrix does not have rank 2");
  std::vector<Vec> out;
  for (const auto& v : enumerate_points(field, cols)) {
    Vec y;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) y.push_back(field.mul(v[i], v[j]));
    out.push_back(normalized(field, y));
  }
  return out;
}

}  // namespace scrollsec
