#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scrollsec/error.hpp"
#include "scrollsec/pencil.hpp"
#include "scrollsec/qform.hpp"
#include "scrollsec/scroll.hpp"

namespace scrollsec {

enum class StratumLabel { Empty2Z, TwoPoints, DoublePoint, TwoLines, Conic, QuadricSurface };

inline constexpr StratumLabel kAllLabels[] = {
    StratumLabel::Empty2Z, StratumLabel::TwoPoints, StratumLabel::DoublePoint,
    StratumLabel::TwoLines, StratumLabel::Conic,    StratumLabel::QuadricSurface};

const char* to_string(StratumLabel label);
/// Throws ParseError.
StratumLabel label_from_string(const std::string& name);
/// dim of the locus minus h: 0, 1, 1, 2, 2, 3.
int label_j(StratumLabel label);
/// The six admissible (s, rank) pairs; nullopt for anything else.
std::optional<StratumLabel> label_for(int s, int rank);

/// Raised when a secant cone does not fit the six-row table; carries the raw data.
class UnclassifiableError : public Error {
 public:
  UnclassifiableError(const std::string& what, int s, int rank)
      : Error(ErrorKind::UnclassifiableSignature, what), s_(s), rank_(rank) {}
  /// -1 when the failure happened before s or rank was known.
  int s() const { return s_; }
  int rank() const { return rank_; }

 private:
  int s_;
  int rank_;
};

struct SecantSignature {
  int sec_dim = 0;
  int h = -1;
  int n = 0;
  int s = 0;
  int rank = 0;
  StratumLabel label = StratumLabel::Empty2Z;
  int locus_dim = 0;
  int depth_pred = 0;

  friend bool operator==(const SecantSignature&, const SecantSignature&) = default;
};

/// Builds a signature from raw data; throws UnclassifiableError outside the table.
SecantSignature make_signature(int sec_dim, int h, int n, int rank);

struct FiberRecord {
  P1Point x;
  LinearSubspace space;
};

struct SecantSample {
  /// Points of the secant locus (each passes secant_pair_test).
  std::vector<Vec> points;
  std::vector<FiberRecord> fibers;
};

struct SecantCone {
  LinearSubspace sec;
  QForm quadric;
  SecantSample sample;
};

enum class PairResult { NotOnX, NotSecant, Secant, TangentContact };
const char* to_string(PairResult r);

/// Pair test against the variety cut out by the given minors.
/// Throws POnVariety if every minor vanishes at p.
PairResult pair_test_minors(const Field& field, const std::vector<Minor>& minors,
                            std::span<const Fe> p, std::span<const Fe> q);

/// Throws POnVariety if p lies on the scroll.
PairResult secant_pair_test(const Scroll& scroll, std::span<const Fe> p, std::span<const Fe> q);

/// Linear forms whose common zeros on L(x) form the secant locus over x.
Mat secant_forms(const Scroll& scroll, std::span<const Fe> p);
/// All polar forms B_i(p, .): common zeros on L(x) are the contact points of tangent lines.
Mat tangent_forms(const Scroll& scroll, std::span<const Fe> p);

/// Sigma_p meet L(x), computed directly on the scroll (vertex included).
LinearSubspace fiber_secant_space(const Scroll& scroll, std::span<const Fe> p, const P1Point& x);

/// Deterministic seed derived from the spec and the point.
std::uint64_t point_seed(const ScrollSpec& spec, std::span<const Fe> p);

/// Sec_p and the hyperquadric on it. By default the computation runs on the
/// base scroll with the vertex coordinates of p dropped and is lifted back;
/// direct = true works on the cone itself. Throws POnVariety, UnclassifiableError.
SecantCone secant_cone_and_quadric(const Scroll& scroll, std::span<const Fe> p, int d_max = 2,
                                   bool direct = false);

/// The restriction of the generators to sec and its rank; throws UnclassifiableError
/// if the nonzero restrictions are not pairwise proportional.
QForm secant_quadric(const Scroll& scroll, const LinearSubspace& sec, int* rank);

SecantSignature classify_signature(const Scroll& scroll, std::span<const Fe> p, int d_max = 2,
                                   bool direct = false);
SecantSignature signature_of(const Scroll& scroll, const SecantCone& cone);

/// Union over x in P^1(F_{q^d}) of the fiber secant spaces, as a set of
/// normalized points over F_{q^d}; meant for small fields.
std::vector<Vec> fiber_union_points(const Scroll& scroll, std::span<const Fe> p, int d);

}  // namespace scrollsec
