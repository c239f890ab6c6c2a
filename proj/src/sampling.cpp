#include "scrollsec/sampling.hpp"

#include "scrollsec/error.hpp"

namespace scrollsec {

namespace {

Fe nonzero_rational(const Field& f, std::mt19937_64& rng) {
  for (;;) {
    const Fe x = f.random_rational(rng);
    if (!Field::is_zero(x)) return x;
  }
}

ScrollPoint random_params(const Scroll& sc, std::mt19937_64& rng) {
  const Field& f = sc.field();
  ScrollPoint pt{f.random_rational(rng), f.random_rational(rng), Vec(sc.spec().n()),
                 Vec(sc.spec().vertex_size())};
  if (Field::is_zero(pt.s) && Field::is_zero(pt.t)) pt.s = f.one();
  do {
    for (auto& x : pt.u) x = f.random_rational(rng);
  } while (is_zero_vec(pt.u));
  for (auto& x : pt.z) x = f.random_rational(rng);
  return pt;
}

void fill_block(const Scroll& sc, Vec& p, std::size_t i, std::span<const Fe> values) {
  std::copy(values.begin(), values.end(), p.begin() + static_cast<std::ptrdiff_t>(sc.spec().block_offset(i)));
}

Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Vec v(n);
  for (auto& x : v) x = f.random_rational(rng);
  return v;
}

Vec draw(const Scroll& sc, WitnessKind kind, std::mt19937_64& rng) {
  const Field& f = sc.field();
  const ScrollSpec& spec = sc.spec();
  const BlockClasses blocks = sc.block_classes();
  Vec p(sc.n_coords());
  switch (kind) {
    case WitnessKind::Uniform:
      p = random_vec(f, sc.n_coords(), rng);
      break;
    case WitnessKind::Chord: {
      const Vec a = sc.embed(random_params(sc, rng));
      const Vec b = sc.embed(random_params(sc, rng));
      const Fe l = nonzero_rational(f, rng), m = nonzero_rational(f, rng);
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = f.add(f.mul(l, a[i]), f.mul(m, b[i]));
      break;
    }
    case WitnessKind::Tangent: {
      const LinearSubspace t = sc.tangent_space(random_params(sc, rng));
      for (std::size_t r = 0; r < t.basis().rows(); ++r) {
        const Fe c = f.random_rational(rng);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = f.add(p[i], f.mul(c, t.basis()(r, i)));
      }
      break;
    }
    case WitnessKind::JoinB: {
      const ScrollPoint x = random_params(sc, rng);
      for (std::size_t j = 0; j < spec.vertex_size(); ++j) p[j] = f.random_rational(rng);
      for (auto i : blocks.ones) fill_block(sc, p, i, random_vec(f, 2, rng));
      for (std::size_t i = 0; i < spec.n(); ++i) {
        if (spec.a()[i] < 2) continue;
        Vec v = veronese_vector(f, spec.a()[i], x.s, x.t);
        const Fe c = f.random_rational(rng);
        for (auto& e : v) e = f.mul(e, c);
        fill_block(sc, p, i, v);
      }
      break;
    }
    case WitnessKind::JoinU: {
      for (std::size_t j = 0; j < spec.vertex_size(); ++j) p[j] = f.random_rational(rng);
      for (auto i : blocks.ones) fill_block(sc, p, i, random_vec(f, 2, rng));
      const Vec c = random_vec(f, 3, rng);
      for (auto i : blocks.twos) {
        const Fe beta = f.random_rational(rng);
        fill_block(sc, p, i, Vec{f.mul(beta, c[0]), f.mul(beta, c[1]), f.mul(beta, c[2])});
      }
      break;
    }
    case WitnessKind::SpanA:
      for (std::size_t j = 0; j < spec.vertex_size(); ++j) p[j] = f.random_rational(rng);
      for (auto i : blocks.ones) fill_block(sc, p, i, random_vec(f, 2, rng));
      break;
  }
  return p;
}

}  // namespace

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Uniform: return "uniform";
    case WitnessKind::Chord: return "chord";
    case WitnessKind::Tangent: return "tangent";
    case WitnessKind::JoinB: return "join-B";
    case WitnessKind::JoinU: return "join-U";
    case WitnessKind::SpanA: return "span-A";
  }
  return "?";
}

bool witness_available(const ScrollSpec& spec, WitnessKind kind) {
  switch (kind) {
    case WitnessKind::JoinB: return spec.k() >= 1 && spec.n() > spec.k();
    case WitnessKind::JoinU: return spec.m() > spec.k() || spec.k() >= 2;
    case WitnessKind::SpanA: return spec.k() >= 2;
    default: return true;
  }
}

Vec sample_witness(const Scroll& scroll, WitnessKind kind, std::mt19937_64& rng) {
  if (!witness_available(scroll.spec(), kind)) kind = WitnessKind::Uniform;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Vec p = draw(scroll, kind, rng);
    if (!is_zero_vec(p) && !scroll.contains(p)) return p;
  }
  throw Error(ErrorKind::BudgetExceeded, std::string("no external point of kind ") + to_string(kind));
}

Vec sample_external_point(const Scroll& scroll, std::mt19937_64& rng) {
  constexpr std::size_t kinds = std::size(kAllWitnessKinds);
  return sample_witness(scroll, kAllWitnessKinds[uniform_below(rng, kinds)], rng);
}

Vec sample_scroll_point(const Scroll& scroll, std::mt19937_64& rng) {
  return scroll.embed(random_params(scroll, rng));
}

}  // namespace scrollsec
