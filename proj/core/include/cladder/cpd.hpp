#pragma once

#include <array>
#include <map>
#include <string>

#include "cladder/interval_approx.hpp"

namespace cladder {

// Connected persistence diagram of a ladder module. Spans are stored with
// inclusive deaths; the exclusive-death convention is applied only when
// serializing or plotting.
struct ConnectedPD {
  int n = 0;
  int x_lo = 1;
  uint32_t field = 2;
  // [b,d]_1 and [b,d]_2 multiplicities; always >= 0 (they are the row
  // barcodes).
  std::map<std::pair<int, int>, int> lower;
  std::map<std::pair<int, int>, int> upper;
  // [b2,d2]_2 ⊔ [b1,d1]_1 multiplicities, possibly negative.
  std::map<std::array<int, 4>, int> connecting;
  // optional real parameter value per integer grid index
  std::map<int, double> axis_labels;
};

// The auxiliary aggregation: lower/upper pick up the two-row intervals
// sharing their row span, connecting is the restriction to two-row intervals.
ConnectedPD tilde_delta(const SignedMultiplicityMap& delta, int n, uint32_t field, int x_lo = 1);

// delta recovered from the aggregation (subtract the connecting sums).
SignedMultiplicityMap untilde_delta(const ConnectedPD& cpd);

ConnectedPD connected_pd(const GridRep& m, Assignment assignment = Assignment::ss);

// True iff some connecting multiplicity is negative: a sound certificate that
// the module has an indecomposable non-interval direct summand.
bool has_negative(const ConnectedPD& cpd);

enum class CpdStyle { triangles, layered };

// Deterministic SVG 1.1 rendering. Triangles style plots the lower diagram in
// the lower triangle with axes swapped, the upper diagram in the upper
// triangle, and connecting segments between them; dashed stroke marks
// negative multiplicity, saturation scales with |multiplicity|.
std::string render_cpd(const ConnectedPD& cpd, CpdStyle style = CpdStyle::triangles);

}  // namespace cladder
