#pragma once

#include <optional>
#include <span>

#include "scrollsec/secant.hpp"

namespace scrollsec {

/// Memberships of p in the sets A, B, U, Tan, Sec (all decided on the base
/// scroll after dropping the vertex coordinates of p).
struct MembershipReport {
  bool in_A = false;
  bool in_B = false;
  bool in_U = false;
  bool in_Tan = false;
  bool in_Sec = false;
  StratumLabel label_geom = StratumLabel::Empty2Z;
  bool agrees_with_signature = false;
  std::optional<SecantSignature> signature;
};

bool member_A(const Scroll& scroll, std::span<const Fe> p);
bool member_U(const Scroll& scroll, std::span<const Fe> p);
/// Allowed for p on the scroll (B contains it).
bool member_B(const Scroll& scroll, std::span<const Fe> p);
bool member_tangent(const Scroll& scroll, std::span<const Fe> p, int d_max = 2);
bool member_secant_variety(const Scroll& scroll, std::span<const Fe> p, int d_max = 2);

/// First true predicate in the order A, B, U, Tan, Sec; Empty2Z if none.
StratumLabel decide_stratum(bool in_A, bool in_B, bool in_U, bool in_Tan, bool in_Sec);

/// A in B; B and U in Tan; Tan in Sec. For smooth scrolls also A in U.
bool implication_chain_holds(const MembershipReport& r, bool smooth);

/// Throws POnVariety; propagates UnclassifiableError from the signature.
MembershipReport stratum_geometric(const Scroll& scroll, std::span<const Fe> p, int d_max = 2);

}  // namespace scrollsec
