#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "scrollsec/sampling.hpp"
#include "scrollsec/secant.hpp"

namespace scrollsec {

/// Case tags of the non-normal maximal Del Pezzo list. Unmatched marks a
/// spec where j = n holds but the shape fits no listed family.
enum class DelPezzoCase { None, A, BI, BII, BIII, BIV, CI, CII, Veronese, Unmatched };

/// "none", "a", "b-i", "b-ii", "b-iii", "b-iv", "c-i", "c-ii", "veronese", "unmatched".
const char* to_string(DelPezzoCase c);

struct DepthReport {
  int t = 1;
  bool acm = false;
  int j = 0;
  DelPezzoCase del_pezzo_case = DelPezzoCase::None;
  bool linearly_normal = true;
};

/// Depth of X_p: sig.depth_pred on the secant side, 1 for a smooth scroll and p off Sec.
/// The case tag is left as None; see del_pezzo_case.
DepthReport depth_predict(const SecantSignature& sig, bool smooth, bool in_sec);

/// j = n.
bool is_del_pezzo(const ScrollSpec& spec, const SecantSignature& sig);
/// Tag of the family the spec belongs to, ignoring the point.
DelPezzoCase family_case(const ScrollSpec& spec);
/// family_case when j = n, None otherwise (Unmatched if no family fits).
DelPezzoCase del_pezzo_case(const ScrollSpec& spec, const SecantSignature& sig);

/// Signature and depth for an external point, with the case tag filled in.
struct PointAnalysis {
  SecantSignature signature;
  DepthReport depth;
};
PointAnalysis analyze_point(const Scroll& scroll, std::span<const Fe> p, int d_max = 2);

/// Strata that contain external points of the scroll (decided on the base scroll).
std::vector<StratumLabel> realizable_labels(const ScrollSpec& spec);

/// Named point sets used to describe Del Pezzo loci; each is a union of strata.
enum class LocusSet { A, B, U, BU, W };
const char* to_string(LocusSet s);
std::vector<StratumLabel> strata_of(LocusSet s);
/// Membership by the geometric predicates (p not on the scroll).
bool locus_contains(const Scroll& scroll, LocusSet s, std::span<const Fe> p);
/// A random external point of the set.
Vec sample_in_locus(const Scroll& scroll, LocusSet s, std::mt19937_64& rng);

struct AtlasBounds {
  int max_deg = 6;
  int max_n = 4;
  int max_h = 1;
};

struct AtlasEntry {
  ScrollSpec spec;
  /// Strata with j = n.
  std::vector<StratumLabel> strata;
  /// Smallest named set whose realizable strata are exactly `strata`.
  LocusSet locus = LocusSet::W;
  /// True if the locus is the whole complement of the scroll.
  bool fills = false;
  DelPezzoCase tag = DelPezzoCase::None;
  std::string description;
};

/// Every spec within bounds that has a Del Pezzo locus, ordered by h, degree, n, a.
std::vector<AtlasEntry> atlas_enumerate(const AtlasBounds& bounds);

struct AtlasCheck {
  int inside = 0;
  int inside_acm = 0;
  int outside = 0;
  int outside_acm = 0;
};

/// Samples points inside the locus and outside it (rejection against
/// locus_contains) and counts how many are acm. The outside count is 0 when
/// the locus fills the complement.
AtlasCheck verify_entry(const AtlasEntry& entry, const Field& field, int samples, std::mt19937_64& rng);

/// Simple projection from p: y -> y - (y_j / p_j) p with coordinate j dropped,
/// j the first nonzero coordinate of p.
struct Projection {
  std::size_t pivot = 0;
  Vec center;
  SecantSignature signature;
  /// Image of Sec_p, of dimension sec_dim - 1.
  LinearSubspace nonnormal_locus;
  int image_degree = 0;
  int image_codim = 0;

  Vec apply(const Field& field, std::span<const Fe> y) const;
};

/// Throws POnVariety; throws std::logic_error if the image of Sec_p has the wrong dimension.
Projection project(const Scroll& scroll, std::span<const Fe> p, int d_max = 2);

enum class VeroneseClass { OnVariety, Conic, Empty };
const char* to_string(VeroneseClass c);

struct VeroneseResult {
  VeroneseClass cls = VeroneseClass::Empty;
  int rank = 0;
  DepthReport depth;
};

/// Point of P^5 given as a symmetric 3x3 matrix, over a cone with vertex P^h.
/// Throws ZeroMatrix, DimensionMismatch.
VeroneseResult veronese_classify(const Field& field, const Mat& m, int h = -1);
/// For a rank-2 matrix: the points v v^T with v in its column space, as
/// Veronese coordinates over the field.
std::vector<Vec> veronese_conic_points(const Field& field, const Mat& m);

}  // namespace scrollsec
