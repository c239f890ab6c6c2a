#include "scrollsec/oracle.hpp"

#include <algorithm>
#include <set>

namespace scrollsec::oracle {

namespace {

Field extension_of(const Field& f) {
  return f.degree() == 2 ? f : Field::make(f.characteristic(), 2);
}

std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Number of points of P^dim over a field with Q elements.
std::uint64_t projective_count(std::uint64_t Q, int dim) {
  if (dim < 0) return 0;
  return (power(Q, dim + 1) - 1) / (Q - 1);
}

void charge(std::uint64_t& used, std::uint64_t amount, std::uint64_t budget) {
  used += amount;
  if (used > budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "oracle work exceeds budget of " + std::to_string(budget) + " steps");
  }
}

}  // namespace

std::vector<std::uint64_t> point_key(std::span<const Fe> p) {
  std::vector<std::uint64_t> key;
  key.reserve(p.size());
  for (const auto& c : p) key.push_back((std::uint64_t{c.im} << 32) | c.re);
  return key;
}

void sort_points(std::vector<Vec>& pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) { return point_key(a) < point_key(b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

std::uint64_t expected_point_count(const ScrollSpec& spec, std::uint64_t Q) {
  const int n = static_cast<int>(spec.n()), h = spec.h();
  const std::uint64_t off_vertex = (Q + 1) * (power(Q, n + h + 1) - power(Q, h + 1)) / (Q - 1);
  return off_vertex + projective_count(Q, h);
}

PointTable enumerate_scroll_points(const Scroll& scroll, int d, std::uint64_t budget) {
  const Field ext = extension_of(scroll.field());
  const Field fd = Field::make(ext.characteristic(), d);
  const ScrollSpec& spec = scroll.spec();
  const std::size_t cols = spec.vertex_size() + spec.n();
  const std::uint64_t work = (fd.order() + 1) * projective_count(fd.order(), static_cast<int>(cols) - 1);
  if (work > budget) {
    throw Error(ErrorKind::BudgetExceeded, "point enumeration needs " + std::to_string(work) + " steps");
  }
  PointTable table{spec, d, {}, {}, {}};
  std::set<std::vector<std::uint64_t>> seen;
  const auto coeffs = enumerate_points(fd, LinearSubspace::full(fd, cols - 1));
  for (const auto& x : projective_line(ext, d)) {
    std::vector<Vec> blocks;
    for (std::size_t i = 0; i < spec.n(); ++i) blocks.push_back(veronese_vector(ext, spec.a()[i], x.s, x.t));
    for (const auto& c : coeffs) {
      Vec p(scroll.n_coords());
      for (std::size_t j = 0; j < spec.vertex_size(); ++j) p[j] = c[j];
      for (std::size_t i = 0; i < spec.n(); ++i) {
        const Fe u = c[spec.vertex_size() + i];
        for (std::size_t l = 0; l < blocks[i].size(); ++l)
          p[spec.block_offset(i) + l] = ext.mul(u, blocks[i][l]);
      }
      p = normalized(ext, p);
      if (!seen.insert(point_key(p)).second) continue;
      ScrollPoint params{x.s, x.t, Vec(c.begin() + static_cast<std::ptrdiff_t>(spec.vertex_size()), c.end()),
                         Vec(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(spec.vertex_size()))};
      table.is_vertex.push_back(is_zero_vec(params.u));
      table.points.push_back(std::move(p));
      table.params.push_back(std::move(params));
    }
  }
  return table;
}

std::vector<Vec> zero_set_scan(const Scroll& scroll, std::uint64_t budget) {
  const Field fq = Field::make(scroll.field().characteristic(), 1);
  const std::size_t N = scroll.spec().ambient_dim();
  if (projective_count(fq.order(), static_cast<int>(N)) > budget) {
    throw Error(ErrorKind::BudgetExceeded, "ambient scan too large");
  }
  const Scroll sc(fq, scroll.spec());
  std::vector<Vec> out;
  for (auto& p : enumerate_points(fq, LinearSubspace::full(fq, N)))
    if (sc.contains(p)) out.push_back(std::move(p));
  sort_points(out);
  return out;
}

std::vector<Vec> brute_secant_locus(const Scroll& scroll, const PointTable& table,
                                    std::span<const Fe> p, std::uint64_t budget) {
  const Field ext = extension_of(scroll.field());
  const Scroll sc(ext, scroll.spec());
  std::uint64_t used = 0;
  charge(used, table.points.size(), budget);
  std::vector<Vec> out;
  for (const auto& q : table.points) {
    const PairResult r = secant_pair_test(sc, p, q);
    if (r == PairResult::Secant || r == PairResult::TangentContact) out.push_back(q);
  }
  sort_points(out);
  return out;
}

BruteSignature brute_signature(const Scroll& scroll, std::span<const Fe> p,
                               const std::vector<Vec>& locus) {
  const Field ext = extension_of(scroll.field());
  std::vector<Vec> pts{Vec(p.begin(), p.end())};
  pts.insert(pts.end(), locus.begin(), locus.end());
  BruteSignature out;
  out.sec = LinearSubspace::span(ext, pts, scroll.spec().ambient_dim());
  secant_quadric(scroll, out.sec, &out.rank);
  out.signature = make_signature(out.sec.dim(), scroll.spec().h(),
                                 static_cast<int>(scroll.spec().n()), out.rank);
  return out;
}

MembershipReport brute_membership(const Scroll& scroll, const PointTable& table,
                                  std::span<const Fe> p, std::uint64_t budget) {
  const Field ext = extension_of(scroll.field());
  const Field fd = Field::make(ext.characteristic(), table.d);
  const Scroll sc(ext, scroll.spec());
  const ScrollSpec& spec = sc.spec();
  const BlockClasses blocks = sc.block_classes();
  const std::size_t N = spec.ambient_dim();
  std::uint64_t used = 0;
  MembershipReport r;

  // A: span of the enumerated points supported on the vertex and the degree-1 blocks.
  std::vector<std::size_t> a_coords(spec.vertex_size());
  for (std::size_t j = 0; j < spec.vertex_size(); ++j) a_coords[j] = j;
  for (auto i : blocks.ones)
    for (std::size_t l = 0; l < 2; ++l) a_coords.push_back(spec.block_offset(i) + l);
  std::vector<Vec> a_points;
  for (const auto& q : table.points) {
    bool inside = true;
    for (std::size_t c = 0; c < q.size() && inside; ++c)
      if (!Field::is_zero(q[c]) && std::find(a_coords.begin(), a_coords.end(), c) == a_coords.end())
        inside = false;
    if (inside) a_points.push_back(q);
  }
  const LinearSubspace a_span = LinearSubspace::span(ext, a_points, N);
  r.in_A = a_span.contains(ext, p);

  // B: union of <L_alpha, L(x)> over alpha in P^(k-1), x in P^1.
  if (spec.k() >= 1) {
    const auto alphas = enumerate_points(fd, LinearSubspace::full(fd, spec.k() - 1));
    for (const auto& x : projective_line(ext, table.d)) {
      const LinearSubspace ruling = sc.ruling(x.s, x.t);
      for (const auto& alpha : alphas) {
        charge(used, 1, budget);
        Vec l0(N + 1), l1(N + 1);
        for (std::size_t i = 0; i < spec.k(); ++i) {
          l0[spec.block_offset(blocks.ones[i])] = alpha[i];
          l1[spec.block_offset(blocks.ones[i]) + 1] = alpha[i];
        }
        if (ruling.join(ext, LinearSubspace::span(ext, {l0, l1}, N)).contains(ext, p)) {
          r.in_B = true;
          break;
        }
      }
      if (r.in_B) break;
    }
  }

  // U: union of <A, plane of C_beta> over beta in P^(m-k-1).
  const LinearSubspace a_coord_space = LinearSubspace::coordinate(ext, N, a_coords);
  if (spec.m() == spec.k()) {
    r.in_U = a_coord_space.contains(ext, p);
  } else {
    for (const auto& beta : enumerate_points(fd, LinearSubspace::full(fd, spec.m() - spec.k() - 1))) {
      charge(used, 1, budget);
      std::vector<Vec> plane(3, Vec(N + 1));
      for (std::size_t i = 0; i < blocks.twos.size(); ++i)
        for (std::size_t l = 0; l < 3; ++l) plane[l][spec.block_offset(blocks.twos[i]) + l] = beta[i];
      if (a_coord_space.join(ext, LinearSubspace::span(ext, plane, N)).contains(ext, p)) {
        r.in_U = true;
        break;
      }
    }
  }

  // Tan: tangent spaces at non-vertex points. The tangent space does not
  // depend on the vertex part, so points with z = 0 suffice.
  for (std::size_t i = 0; i < table.points.size() && !r.in_Tan; ++i) {
    if (table.is_vertex[i] || !is_zero_vec(table.params[i].z)) continue;
    charge(used, 1, budget);
    if (sc.tangent_space(table.params[i]).contains(ext, p)) r.in_Tan = true;
  }

  // Sec: a non-vertex secant partner.
  for (std::size_t i = 0; i < table.points.size() && !r.in_Sec; ++i) {
    if (table.is_vertex[i]) continue;
    charge(used, 1, budget);
    const PairResult pr = secant_pair_test(sc, p, table.points[i]);
    if (pr == PairResult::Secant || pr == PairResult::TangentContact) r.in_Sec = true;
  }

  r.label_geom = decide_stratum(r.in_A, r.in_B, r.in_U, r.in_Tan, r.in_Sec);
  const auto locus = brute_secant_locus(sc, table, p, budget);
  try {
    r.signature = brute_signature(sc, p, locus).signature;
    r.agrees_with_signature = r.signature->label == r.label_geom;
  } catch (const UnclassifiableError&) {
    r.agrees_with_signature = false;
  }
  return r;
}

std::vector<Vec> join_with_vertex(const Scroll& scroll, const std::vector<Vec>& base_locus, int d) {
  const Field ext = extension_of(scroll.field());
  const Field fd = Field::make(ext.characteristic(), d);
  const Scroll sc(ext, scroll.spec());
  const LinearSubspace vert = sc.vertex();
  std::vector<Vec> out = enumerate_points(fd, vert);
  for (const auto& qb : base_locus) {
    const LinearSubspace s = vert.join(ext, LinearSubspace::span(ext, {sc.lift(qb)}, sc.spec().ambient_dim()));
    auto pts = enumerate_points(fd, s);
    out.insert(out.end(), pts.begin(), pts.end());
  }
  for (auto& pt : out) pt = normalized(ext, pt);
  sort_points(out);
  return out;
}

LinearSubspace join_vertex_span(const Scroll& cone, const LinearSubspace& base) {
  const Field ext = extension_of(cone.field());
  const Scroll sc(ext, cone.spec());
  std::vector<Vec> pts;
  for (std::size_t r = 0; r < base.basis().rows(); ++r) pts.push_back(sc.lift(base.basis().row_vec(r)));
  return sc.vertex().join(ext, LinearSubspace::span(ext, pts, sc.spec().ambient_dim()));
}

OracleTables build_tables(const Scroll& scroll, std::uint64_t budget) {
  OracleTables t{enumerate_scroll_points(scroll, 1, budget), enumerate_scroll_points(scroll, 2, budget), {}};
  if (scroll.spec().h() >= 0)
    t.base_d2 = enumerate_scroll_points(Scroll(scroll.field(), scroll.spec().base()), 2, budget);
  return t;
}

CrossCheck cross_check(const Scroll& scroll, const OracleTables& tables, std::span<const Fe> p, int d_max,
                       std::uint64_t budget) {
  CrossCheck out;
  std::vector<Vec> locus2;
  for (int d = 1; d <= d_max; ++d) {
    auto brute = brute_secant_locus(scroll, d == 1 ? tables.d1 : tables.d2, p, budget);
    if (brute != fiber_union_points(scroll, p, d)) out.mismatches.push_back("locus-d" + std::to_string(d));
    if (d == 2) locus2 = std::move(brute);
  }
  const MembershipReport bm = brute_membership(scroll, tables.d2, p, budget);
  const MembershipReport fm = stratum_geometric(scroll, p);
  if (bm.label_geom != fm.label_geom || !bm.agrees_with_signature || !fm.agrees_with_signature)
    out.mismatches.push_back("label");
  if (bm.in_A != fm.in_A || bm.in_B != fm.in_B || bm.in_U != fm.in_U || bm.in_Tan != fm.in_Tan ||
      bm.in_Sec != fm.in_Sec)
    out.mismatches.push_back("membership");

  if (tables.base_d2) {
    out.lift_checked = true;
    if (locus2.empty() && d_max < 2) locus2 = brute_secant_locus(scroll, tables.d2, p, budget);
    const Field ext = extension_of(scroll.field());
    const Scroll base(ext, scroll.spec().base());
    const Vec pb = scroll.drop_vertex(p);
    const LinearSubspace sec = brute_signature(scroll, p, locus2).sec;
    if (!(sec == join_vertex_span(scroll, secant_cone_and_quadric(base, pb).sec)))
      out.mismatches.push_back("lift-span");
    if (locus2 != join_with_vertex(scroll, brute_secant_locus(base, *tables.base_d2, pb, budget), 2))
      out.mismatches.push_back("lift-join");
  }
  return out;
}

int terracini_secant_dim(const Scroll& scroll, std::mt19937_64& rng, int pairs) {
  const Field& f = scroll.field();
  const ScrollSpec& spec = scroll.spec();
  auto random_params = [&]() {
    ScrollPoint pt{f.one(), f.random(rng), Vec(spec.n()), Vec(spec.vertex_size())};
    for (auto& x : pt.u) x = f.random(rng);
    if (is_zero_vec(pt.u)) pt.u[0] = f.one();
    return pt;
  };
  int best = -1;
  for (int i = 0; i < pairs; ++i) {
    const auto t1 = scroll.tangent_space(random_params());
    const auto t2 = scroll.tangent_space(random_params());
    best = std::max(best, t1.join(f, t2).dim());
  }
  return best;
}

std::vector<Minor> veronese_minors() {
  // Distinct 2x2 minors of the symmetric matrix [[y00,y01,y02],[y01,y11,y12],[y02,y12,y22]].
  return {{0, 3, 1, 1}, {0, 5, 2, 2}, {3, 5, 4, 4}, {0, 4, 1, 2}, {3, 2, 1, 4}, {5, 1, 2, 4}};
}

Vec veronese_coords(const Field& field, const Mat& m) {
  (void)field;
  if (m.rows() != 3 || m.cols() != 3) throw Error(ErrorKind::DimensionMismatch, "need a 3x3 matrix");
  return {m(0, 0), m(0, 1), m(0, 2), m(1, 1), m(1, 2), m(2, 2)};
}

std::vector<Vec> veronese_points(const Field& field) {
  std::vector<Vec> out;
  for (const auto& v : enumerate_points(field, LinearSubspace::full(field, 2))) {
    Mat m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = field.mul(v[i], v[j]);
    out.push_back(normalized(field, veronese_coords(field, m)));
  }
  sort_points(out);
  return out;
}

std::vector<Vec> brute_veronese_locus(const Field& field, std::span<const Fe> p) {
  const auto minors = veronese_minors();
  std::vector<Vec> out;
  for (const auto& q : veronese_points(field)) {
    const PairResult r = pair_test_minors(field, minors, p, q);
    if (r == PairResult::Secant || r == PairResult::TangentContact) out.push_back(q);
  }
  return out;
}

}  // namespace scrollsec::oracle
