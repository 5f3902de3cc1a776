#pragma once

#include <map>
#include <vector>

#include "cladder/courses.hpp"
#include "cladder/grid_poset.hpp"
#include "cladder/quiver_rep.hpp"

namespace cladder {

// Signed interval multiplicities; negative values are possible on
// non-interval-decomposable input. Ordered so iteration and serialization are
// deterministic.
using SignedMultiplicityMap = std::map<StaircaseInterval, int>;

// Interval approximation over the full poset by Möbius inversion over cover
// joins. c-values are memoized per interval.
SignedMultiplicityMap interval_approximation(const GridRep& m, const IntervalPoset& poset,
                                             Assignment assignment = Assignment::ss);

// Same values computed by the iterative trace-down recurrence (maximal
// elements first). Used as the general fallback; agrees with the Möbius
// formula wherever both apply.
SignedMultiplicityMap interval_approximation_trace_down(const GridRep& m, const IntervalPoset& poset,
                                                        Assignment assignment = Assignment::ss);

// Partial interval approximation over an arbitrary subset, via trace-down on
// the induced poset.
SignedMultiplicityMap partial_interval_approximation(const GridRep& m,
                                                     const std::vector<StaircaseInterval>& subset,
                                                     Assignment assignment = Assignment::ss);

// Σ_I delta(I) · rank(V_I(from -> to)); the summand is 1 exactly when both
// endpoints (hence the whole canonical path) lie in I. 0 when no path exists.
int reconstruct_rank(const SignedMultiplicityMap& delta, GridPoint from, GridPoint to);

// Barcode of the 1D slice through the monotone vertex sequence, via the
// four-term alternating sum of rectangle compressed multiplicities.
std::map<std::pair<int, int>, int> slice_pd(const GridRep& m, const std::vector<GridPoint>& slice);

// Verify c_M(I) = Σ_J pia(J) · c_{V_J}(I) for every I with at most k+1
// essential vertices.
bool check_k_rank_invariant(const SignedMultiplicityMap& pia, const GridRep& m, int k,
                            const IntervalPoset& poset, Assignment assignment = Assignment::ss);

}  // namespace cladder
