#include "scrollsec/scroll.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "scrollsec/error.hpp"

namespace scrollsec {

ScrollSpec ScrollSpec::make(std::vector<int> a, int h) {
  if (a.empty()) throw Error(ErrorKind::EmptyType, "scroll needs at least one block");
  for (int ai : a)
    if (ai < 1) throw Error(ErrorKind::EmptyType, "block degrees must be >= 1");
  if (h < -1) throw Error(ErrorKind::DimensionMismatch, "vertex dimension must be >= -1");
  std::sort(a.begin(), a.end());
  ScrollSpec s;
  s.deg_ = std::accumulate(a.begin(), a.end(), 0);
  if (s.deg_ < 3) {
    throw Error(ErrorKind::CodimTooSmall, "sum of block degrees is " + std::to_string(s.deg_));
  }
  s.a_ = std::move(a);
  s.h_ = h;
  s.k_ = static_cast<std::size_t>(std::count(s.a_.begin(), s.a_.end(), 1));
  s.m_ = s.k_ + static_cast<std::size_t>(std::count(s.a_.begin(), s.a_.end(), 2));
  std::size_t off = static_cast<std::size_t>(h + 1);
  for (int ai : s.a_) {
    s.offsets_.push_back(off);
    off += static_cast<std::size_t>(ai) + 1;
  }
  return s;
}

ScrollSpec ScrollSpec::parse(const std::string& literal) {
  static const std::regex re(R"(\s*S\s*\(\s*([0-9][0-9\s,]*)\)\s*(?:\+\s*cone\s*\(\s*(-?[0-9]+)\s*\)\s*)?)");
  std::smatch m;
  if (!std::regex_match(literal, m, re)) {
    throw Error(ErrorKind::ParseError, "bad scroll literal '" + literal + "'");
  }
  std::vector<int> a;
  const std::string body = m[1].str();
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty() || item.size() > 6) {
      throw Error(ErrorKind::ParseError, "bad block list in '" + literal + "'");
    }
    a.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  int h = -1;
  if (m[2].matched) {
    if (m[2].str().size() > 4) throw Error(ErrorKind::ParseError, "vertex dimension too large");
    h = std::stoi(m[2].str());
  }
  return make(std::move(a), h);
}

std::string ScrollSpec::literal() const {
  std::string out = "S(";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a_[i]);
  }
  out += ")";
  if (h_ >= 0) out += "+cone(" + std::to_string(h_) + ")";
  return out;
}

Vec veronese_vector(const Field& field, int a, const Fe& s, const Fe& t) {
  Vec v(static_cast<std::size_t>(a) + 1);
  for (int j = 0; j <= a; ++j) {
    v[j] = field.mul(field.pow(s, static_cast<std::uint64_t>(a - j)),
                     field.pow(t, static_cast<std::uint64_t>(j)));
  }
  return v;
}

Scroll::Scroll(const Field& field, ScrollSpec spec) : field_(field), spec_(std::move(spec)) {
  // Columns (x_{i,j}, x_{i,j+1}) of the 2 x deg Hankel matrix.
  std::vector<std::pair<std::size_t, std::size_t>> cols;
  for (std::size_t i = 0; i < spec_.n(); ++i) {
    const std::size_t off = spec_.block_offset(i);
    for (int j = 0; j < spec_.a()[i]; ++j) cols.emplace_back(off + j, off + j + 1);
  }
  for (std::size_t c1 = 0; c1 < cols.size(); ++c1)
    for (std::size_t c2 = c1 + 1; c2 < cols.size(); ++c2)
      minors_.push_back({cols[c1].first, cols[c2].second, cols[c2].first, cols[c1].second});
}

std::vector<QForm> Scroll::quadric_generators() const {
  std::vector<QForm> out;
  const Fe minus_one = field_.neg(field_.one());
  for (const auto& g : minors_) {
    QForm q = QForm::zero(n_coords());
    q.add_monomial(field_, g.a, g.b, field_.one());
    q.add_monomial(field_, g.c, g.d, minus_one);
    out.push_back(std::move(q));
  }
  return out;
}

Fe Scroll::eval_minor(const Minor& g, std::span<const Fe> p) const {
  return field_.sub(field_.mul(p[g.a], p[g.b]), field_.mul(p[g.c], p[g.d]));
}

Mat Scroll::polar_rows(std::span<const Fe> p) const {
  if (p.size() != n_coords()) throw Error(ErrorKind::DimensionMismatch, "polar_rows: length");
  Mat out(minors_.size(), n_coords());
  for (std::size_t i = 0; i < minors_.size(); ++i) {
    const Minor& g = minors_[i];
    out(i, g.a) = field_.add(out(i, g.a), p[g.b]);
    out(i, g.b) = field_.add(out(i, g.b), p[g.a]);
    out(i, g.c) = field_.sub(out(i, g.c), p[g.d]);
    out(i, g.d) = field_.sub(out(i, g.d), p[g.c]);
  }
  return out;
}

Vec Scroll::embed(const ScrollPoint& pt) const {
  if (pt.u.size() != spec_.n() || pt.z.size() != spec_.vertex_size()) {
    throw Error(ErrorKind::DimensionMismatch, "embed: parameter lengths");
  }
  Vec out(n_coords());
  std::copy(pt.z.begin(), pt.z.end(), out.begin());
  for (std::size_t i = 0; i < spec_.n(); ++i) {
    if (Field::is_zero(pt.u[i])) continue;
    const Vec v = veronese_vector(field_, spec_.a()[i], pt.s, pt.t);
    for (std::size_t j = 0; j < v.size(); ++j)
      out[spec_.block_offset(i) + j] = field_.mul(pt.u[i], v[j]);
  }
  if (is_zero_vec(out)) throw Error(ErrorKind::ZeroVector, "embedded point is zero");
  return out;
}

bool Scroll::contains(std::span<const Fe> p) const {
  if (p.size() != n_coords()) throw Error(ErrorKind::DimensionMismatch, "contains: length");
  if (is_zero_vec(p)) throw Error(ErrorKind::ZeroVector, "contains: zero vector");
  for (const auto& g : minors_)
    if (!Field::is_zero(eval_minor(g, p))) return false;
  return true;
}

LinearSubspace Scroll::vertex() const {
  std::vector<std::size_t> idx(spec_.vertex_size());
  std::iota(idx.begin(), idx.end(), 0);
  return LinearSubspace::coordinate(field_, spec_.ambient_dim(), idx);
}

LinearSubspace Scroll::ruling(const Fe& s, const Fe& t) const {
  if (Field::is_zero(s) && Field::is_zero(t)) {
    throw Error(ErrorKind::ZeroVector, "ruling: (0:0) is not a point of P^1");
  }
  Mat rows(0, n_coords());
  for (std::size_t j = 0; j < spec_.vertex_size(); ++j) {
    Vec e(n_coords());
    e[j] = field_.one();
    rows.append_row(e);
  }
  for (std::size_t i = 0; i < spec_.n(); ++i) {
    Vec e(n_coords());
    const Vec v = veronese_vector(field_, spec_.a()[i], s, t);
    std::copy(v.begin(), v.end(), e.begin() + static_cast<std::ptrdiff_t>(spec_.block_offset(i)));
    rows.append_row(e);
  }
  return LinearSubspace::from_basis(field_, rows, spec_.ambient_dim());
}

LinearSubspace Scroll::tangent_space(const ScrollPoint& pt) const {
  if (pt.u.size() != spec_.n() || pt.z.size() != spec_.vertex_size()) {
    throw Error(ErrorKind::DimensionMismatch, "tangent_space: parameter lengths");
  }
  if ((Field::is_zero(pt.s) && Field::is_zero(pt.t)) || is_zero_vec(pt.u)) {
    throw Error(ErrorKind::VertexPoint, "tangent space requested at a vertex point");
  }
  LinearSubspace out = ruling(pt.s, pt.t);
  Vec ds(n_coords()), dt(n_coords());
  for (std::size_t i = 0; i < spec_.n(); ++i) {
    const int a = spec_.a()[i];
    for (int j = 0; j <= a; ++j) {
      // d/ds and d/dt of u_i s^(a-j) t^j.
      const std::size_t c = spec_.block_offset(i) + j;
      if (a - j > 0) {
        ds[c] = field_.mul(field_.mul(pt.u[i], field_.from_int(a - j)),
                           field_.mul(field_.pow(pt.s, a - j - 1), field_.pow(pt.t, j)));
      }
      if (j > 0) {
        dt[c] = field_.mul(field_.mul(pt.u[i], field_.from_int(j)),
                           field_.mul(field_.pow(pt.s, a - j), field_.pow(pt.t, j - 1)));
      }
    }
  }
  return out.join(field_, LinearSubspace::span(field_, {ds, dt}, spec_.ambient_dim()));
}

BlockClasses Scroll::block_classes() const {
  BlockClasses b;
  for (std::size_t i = 0; i < spec_.n(); ++i) {
    if (spec_.a()[i] == 1) {
      b.ones.push_back(i);
    } else if (spec_.a()[i] == 2) {
      b.twos.push_back(i);
    } else {
      b.large.push_back(i);
    }
  }
  return b;
}

SpecialSubspaces Scroll::special_subspaces() const {
  SpecialSubspaces out{LinearSubspace(spec_.ambient_dim()), LinearSubspace(spec_.ambient_dim()),
                       block_classes()};
  std::vector<std::size_t> a_idx(spec_.vertex_size());
  std::iota(a_idx.begin(), a_idx.end(), 0);
  for (auto i : out.blocks.ones)
    for (std::size_t j = 0; j < spec_.block_size(i); ++j) a_idx.push_back(spec_.block_offset(i) + j);
  std::vector<std::size_t> s2_idx;
  for (auto i : out.blocks.twos)
    for (std::size_t j = 0; j < spec_.block_size(i); ++j) s2_idx.push_back(spec_.block_offset(i) + j);
  out.A = LinearSubspace::coordinate(field_, spec_.ambient_dim(), a_idx);
  out.S2span = LinearSubspace::coordinate(field_, spec_.ambient_dim(), s2_idx);
  return out;
}

Vec Scroll::drop_vertex(std::span<const Fe> p) const {
  if (p.size() != n_coords()) throw Error(ErrorKind::DimensionMismatch, "drop_vertex: length");
  return Vec(p.begin() + static_cast<std::ptrdiff_t>(spec_.vertex_size()), p.end());
}

Vec Scroll::lift(std::span<const Fe> base_point) const {
  if (base_point.size() + spec_.vertex_size() != n_coords()) {
    throw Error(ErrorKind::DimensionMismatch, "lift: length");
  }
  Vec out(spec_.vertex_size());
  out.insert(out.end(), base_point.begin(), base_point.end());
  return out;
}

}  // namespace scrollsec
