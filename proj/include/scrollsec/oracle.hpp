#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "scrollsec/secant.hpp"
#include "scrollsec/strata.hpp"

namespace scrollsec::oracle {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Stable ordering key of a coordinate vector.
std::vector<std::uint64_t> point_key(std::span<const Fe> p);
/// Sorts by key and removes duplicates; points must be normalized.
void sort_points(std::vector<Vec>& pts);

/// Every F_{q^d}-point of the scroll, once, with the parameters that produced it.
struct PointTable {
  ScrollSpec spec;
  int d = 1;
  std::vector<Vec> points;
  std::vector<ScrollPoint> params;
  /// Parallel to points: true for points of the vertex.
  std::vector<bool> is_vertex;
};

/// (Q+1)(Q^(n+h+1) - Q^(h+1))/(Q-1) + (Q^(h+1) - 1)/(Q-1) with Q = q^d.
std::uint64_t expected_point_count(const ScrollSpec& spec, std::uint64_t Q);

/// Throws BudgetExceeded if the parameter space exceeds the budget.
PointTable enumerate_scroll_points(const Scroll& scroll, int d,
                                   std::uint64_t budget = kDefaultBudget);

/// Scan of all of P^N(F_q) for common zeros of the generators (small N only).
std::vector<Vec> zero_set_scan(const Scroll& scroll, std::uint64_t budget = kDefaultBudget);

/// Points q of the table with secant_pair_test(p, q) in {Secant, TangentContact}.
std::vector<Vec> brute_secant_locus(const Scroll& scroll, const PointTable& table,
                                    std::span<const Fe> p, std::uint64_t budget = kDefaultBudget);

/// Memberships by enumeration over F_{q^d} directly on the scroll (vertex
/// included, no reduction to the base): A as a span of enumerated points,
/// B over (alpha, x), U over beta, Tan over tangent spaces of non-vertex
/// points, Sec over non-vertex secant partners.
MembershipReport brute_membership(const Scroll& scroll, const PointTable& table,
                                  std::span<const Fe> p, std::uint64_t budget = kDefaultBudget);

/// Sec_p spanned by p and the brute secant locus, with the restricted quadric's rank.
struct BruteSignature {
  LinearSubspace sec;
  int rank = 0;
  SecantSignature signature;
};
BruteSignature brute_signature(const Scroll& scroll, std::span<const Fe> p,
                               const std::vector<Vec>& locus);

/// All points of Join(Vert, base_locus) over F_{q^d}; base points are lifted
/// with zero vertex coordinates.
std::vector<Vec> join_with_vertex(const Scroll& scroll, const std::vector<Vec>& base_locus, int d);

/// <Vert, S> for a subspace S of the base scroll's ambient space.
LinearSubspace join_vertex_span(const Scroll& cone, const LinearSubspace& base);

/// Point tables shared by the cross-checks of one scroll: over F_q and F_{q^2},
/// and over F_{q^2} for the base scroll of a cone.
struct OracleTables {
  PointTable d1;
  PointTable d2;
  std::optional<PointTable> base_d2;
};
OracleTables build_tables(const Scroll& scroll, std::uint64_t budget = kDefaultBudget);

/// Compares the fast path with the brute force at one external point:
/// Sigma_p point sets for d = 1..d_max, the stratum label and the five
/// memberships (over F_{q^2}), and for cones the span and join lift identities.
/// Each mismatch is reported as a short tag ("locus-d1", "label", "membership",
/// "lift-span", "lift-join").
struct CrossCheck {
  std::vector<std::string> mismatches;
  bool lift_checked = false;
};
CrossCheck cross_check(const Scroll& scroll, const OracleTables& tables, std::span<const Fe> p,
                       int d_max = 2, std::uint64_t budget = kDefaultBudget);

/// dim Sec of the scroll from the span of tangent spaces at random point pairs.
int terracini_secant_dim(const Scroll& scroll, std::mt19937_64& rng, int pairs = 4);

/// Veronese surface {v v^T} in P^5 with coordinates (y00, y01, y02, y11, y12, y22).
std::vector<Minor> veronese_minors();
Vec veronese_coords(const Field& field, const Mat& sym);
std::vector<Vec> veronese_points(const Field& field);
/// Points q of the surface with length(S meet <p, q>) >= 2.
std::vector<Vec> brute_veronese_locus(const Field& field, std::span<const Fe> p);

}  // namespace scrollsec::oracle
