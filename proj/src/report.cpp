#include "scrollsec/report.hpp"

#include <sstream>

#include "scrollsec/oracle.hpp"
#include "scrollsec/strata.hpp"

namespace scrollsec {

using nlohmann::json;

namespace {

json header(const char* command, const RunConfig& c) {
  return json{{"schema", 1}, {"command", command}, {"q", std::to_string(c.q)}};
}

json point_json(const Field& f, std::span<const Fe> p) {
  json out = json::array();
  for (const Fe& x : p) out.push_back(f.to_string(x));
  return out;
}

json memberships_json(const MembershipReport& r) {
  return json{{"A", r.in_A}, {"B", r.in_B}, {"U", r.in_U}, {"Tan", r.in_Tan}, {"Sec", r.in_Sec}};
}

json census_template() {
  json out = json::object();
  for (auto l : kAllLabels) out[to_string(l)] = 0;
  return out;
}

Vec draw(const Scroll& sc, const std::string& sampler, std::mt19937_64& rng) {
  if (sampler == "uniform") return sample_witness(sc, WitnessKind::Uniform, rng);
  if (sampler == "mixture") return sample_external_point(sc, rng);
  throw Error(ErrorKind::ParseError, "unknown sampler '" + sampler + "'");
}

// Independent stream per item so that reports do not depend on iteration order.
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Vec parse_point(const Field& field, const std::string& text, std::size_t expected) {
  Vec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad coordinate '" + tok + "'");
    }
    while (used < tok.size() && tok[used] == ' ') ++used;
    if (used != tok.size()) throw Error(ErrorKind::ParseError, "bad coordinate '" + tok + "'");
    out.push_back(field.from_int(v));
  }
  if (out.size() != expected) {
    throw Error(ErrorKind::ParseError, "point has " + std::to_string(out.size()) + " coordinates, expected " +
                                           std::to_string(expected));
  }
  if (is_zero_vec(out)) throw Error(ErrorKind::ZeroVector, "point is zero");
  return out;
}

RunResult run_classify(const RunConfig& c) {
  const Field f = Field::make(c.q, 1);
  const Scroll sc(f, ScrollSpec::parse(c.scroll));
  const Vec p = parse_point(f, c.point, sc.n_coords());
  const PointAnalysis an = analyze_point(sc, p, c.d_max);
  const MembershipReport m = stratum_geometric(sc, p, c.d_max);
  const SecantSignature& s = an.signature;

  RunResult r;
  r.report = header("classify", c);
  r.report.update(json{{"scroll", sc.spec().literal()},
                       {"point", point_json(f, p)},
                       {"s", s.s},
                       {"rank", s.rank},
                       {"label", to_string(s.label)},
                       {"dim_sigma", s.locus_dim},
                       {"sec_dim", s.sec_dim},
                       {"depth", an.depth.t},
                       {"acm", an.depth.acm},
                       {"linearly_normal", an.depth.linearly_normal},
                       {"del_pezzo_case", to_string(an.depth.del_pezzo_case)},
                       {"memberships", memberships_json(m)},
                       {"label_geom", to_string(m.label_geom)},
                       {"agreement", m.agrees_with_signature}});
  r.exit_code = m.agrees_with_signature ? kExitOk : kExitDisagreement;
  return r;
}

RunResult run_sample(const RunConfig& c) {
  if (c.n < 1) throw Error(ErrorKind::ParseError, "sample count must be positive");
  const Field f = Field::make(c.q, 1);
  const Scroll sc(f, ScrollSpec::parse(c.scroll));
  const bool smooth = sc.spec().h() < 0;
  json census = census_template();
  int failures = 0, chain = 0, unclassifiable = 0;
  for (int i = 0; i < c.n; ++i) {
    auto rng = stream(c.seed, static_cast<std::uint64_t>(i));
    const Vec p = draw(sc, c.sampler, rng);
    try {
      const MembershipReport m = stratum_geometric(sc, p, c.d_max);
      census[to_string(m.label_geom)] = census[to_string(m.label_geom)].get<int>() + 1;
      failures += !m.agrees_with_signature;
      chain += !implication_chain_holds(m, smooth);
    } catch (const UnclassifiableError&) {
      ++unclassifiable;
    }
  }
  RunResult r;
  r.report = header("sample", c);
  r.report.update(json{{"scroll", sc.spec().literal()},
                       {"seed", std::to_string(c.seed)},
                       {"n", c.n},
                       {"sampler", c.sampler},
                       {"census", census},
                       {"agreement_failures", failures},
                       {"chain_violations", chain},
                       {"unclassifiable", unclassifiable}});
  r.exit_code = unclassifiable ? kExitUnclassifiable : (failures || chain) ? kExitDisagreement : kExitOk;
  return r;
}

RunResult run_atlas(const RunConfig& c) {
  const Field f = Field::make(c.q, 1);
  const auto entries = atlas_enumerate(c.bounds);
  json list = json::array();
  bool ok = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const AtlasEntry& e = entries[i];
    auto rng = stream(c.seed, i);
    const AtlasCheck chk = verify_entry(e, f, c.n, rng);
    const bool pass = chk.inside_acm == chk.inside && chk.outside_acm == 0 && e.tag != DelPezzoCase::Unmatched &&
                      (e.fills || chk.outside == c.n);
    ok = ok && pass;
    json strata = json::array();
    for (auto l : e.strata) strata.push_back(to_string(l));
    list.push_back(json{{"scroll", e.spec.literal()},
                        {"h", e.spec.h()},
                        {"n", e.spec.n()},
                        {"case", to_string(e.tag)},
                        {"locus", to_string(e.locus)},
                        {"fills", e.fills},
                        {"description", e.description},
                        {"strata", strata},
                        {"verification", {{"inside", chk.inside},
                                          {"inside_acm", chk.inside_acm},
                                          {"outside", chk.outside},
                                          {"outside_acm", chk.outside_acm},
                                          {"pass", pass}}}});
  }
  RunResult r;
  r.report = header("atlas", c);
  r.report.update(json{{"bounds", {{"max_deg", c.bounds.max_deg}, {"max_n", c.bounds.max_n}, {"max_h", c.bounds.max_h}}},
                       {"seed", std::to_string(c.seed)},
                       {"samples", c.n},
                       {"entries", list},
                       {"ok", ok}});
  r.exit_code = ok ? kExitOk : kExitDisagreement;
  return r;
}

RunResult run_oracle_check(const RunConfig& c) {
  if (c.q > 101) throw Error(ErrorKind::ParseError, "oracle-check needs q <= 101");
  if (c.n < 1) throw Error(ErrorKind::ParseError, "point count must be positive");
  const Field f = Field::make(c.q, 1);
  const Scroll sc(f, ScrollSpec::parse(c.scroll));
  const auto tables = oracle::build_tables(sc, c.budget);
  json diff = json::array();
  int lifts = 0;
  for (int i = 0; i < c.n; ++i) {
    auto rng = stream(c.seed, static_cast<std::uint64_t>(i));
    const Vec p = draw(sc, c.sampler, rng);
    const auto chk = oracle::cross_check(sc, tables, p, c.d_max, c.budget);
    lifts += chk.lift_checked;
    if (!chk.mismatches.empty()) diff.push_back(json{{"point", point_json(f, p)}, {"checks", chk.mismatches}});
  }
  RunResult r;
  r.report = header("oracle-check", c);
  r.report.update(json{{"scroll", sc.spec().literal()},
                       {"seed", std::to_string(c.seed)},
                       {"points", c.n},
                       {"d_max", c.d_max},
                       {"table_sizes", {tables.d1.points.size(), tables.d2.points.size()}},
                       {"lift_checks", lifts},
                       {"diff", diff}});
  r.exit_code = diff.empty() ? kExitOk : kExitDisagreement;
  return r;
}

RunResult run_command(const std::string& command, const RunConfig& c) {
  try {
    if (c.d_max < 1 || c.d_max > 2) throw Error(ErrorKind::ParseError, "dmax must be 1 or 2");
    if (command == "classify") return run_classify(c);
    if (command == "sample") return run_sample(c);
    if (command == "atlas") return run_atlas(c);
    if (command == "oracle-check") return run_oracle_check(c);
    throw Error(ErrorKind::ParseError, "unknown command '" + command + "'");
  } catch (const UnclassifiableError& e) {
    RunResult r;
    r.report = header(command.c_str(), c);
    r.report.update(json{{"error", to_string(e.kind())}, {"message", e.what()}, {"s", e.s()}, {"rank", e.rank()}});
    r.exit_code = kExitUnclassifiable;
    return r;
  } catch (const Error& e) {
    RunResult r;
    r.report = header(command.c_str(), c);
    r.report.update(json{{"error", to_string(e.kind())}, {"message", e.what()}});
    r.exit_code = e.kind() == ErrorKind::POnVariety ? kExitOnVariety : kExitUsage;
    return r;
  }
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

}  // namespace scrollsec
