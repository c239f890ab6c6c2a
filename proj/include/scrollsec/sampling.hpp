#pragma once

#include <random>

#include "scrollsec/scroll.hpp"

namespace scrollsec {

/// How a candidate external point is drawn.
enum class WitnessKind {
  Uniform,  // uniform in the ambient space
  Chord,    // on the line through two scroll points
  Tangent,  // in the tangent space at a scroll point
  JoinB,    // in <L_alpha, L(x)>: free on the a_i = 1 blocks, blocks a_i >= 2 along v_i(x)
  JoinU,    // a_i >= 3 blocks zero, a_i = 2 blocks of rank one
  SpanA,    // supported on the vertex and the a_i = 1 blocks
};

inline constexpr WitnessKind kAllWitnessKinds[] = {WitnessKind::Uniform, WitnessKind::Chord,
                                                   WitnessKind::Tangent, WitnessKind::JoinB,
                                                   WitnessKind::JoinU,   WitnessKind::SpanA};

const char* to_string(WitnessKind kind);

/// True if points of this kind can lie off the scroll for this spec.
bool witness_available(const ScrollSpec& spec, WitnessKind kind);

/// A random point of the given kind with F_q coordinates, not on the scroll.
/// Falls back to Uniform when the kind is unavailable for the spec.
Vec sample_witness(const Scroll& scroll, WitnessKind kind, std::mt19937_64& rng);

/// Mixture: the kind is drawn uniformly from kAllWitnessKinds.
Vec sample_external_point(const Scroll& scroll, std::mt19937_64& rng);

/// Uniform random point on the scroll with F_q parameters (never a vertex point).
Vec sample_scroll_point(const Scroll& scroll, std::mt19937_64& rng);

}  // namespace scrollsec
