#pragma once

#include <map>
#include <vector>

#include "cladder/cpd.hpp"
#include "cladder/quiver_rep.hpp"

namespace cladder {

// birth-death pair <b,d>, inclusive death
struct BD {
  int b = 0;
  int d = 0;
  auto operator<=>(const BD&) const = default;
};

using BDMultiset = std::map<BD, int>;  // multiplicities > 0

// Unpacked connected persistence diagram: upper bars, lower bars, and the
// overlap spans <b1,d2> of the two-row intervals.
struct UnpackedDiagram {
  BDMultiset b2;   // upper-row bars
  BDMultiset b1;   // lower-row bars
  BDMultiset b21;  // overlap widths, aggregated by (lower birth, upper death)
};

// Component index inside matching tuples.
enum : int { kUpper = 0, kLower = 1, kOverlap = 2 };

// Slot: one copy of a multiset element (idx counts equal copies from 0).
struct Slot {
  BD bd;
  int idx = 0;
  auto operator<=>(const Slot&) const = default;
};

// Partial bijection after multiplicity expansion.
struct ComponentMatching {
  std::vector<std::pair<Slot, Slot>> pairs;
};

struct MatchingTuple {
  ComponentMatching comp[3];
};

struct ShiftVector {
  int d1 = 0;
  int d2 = 0;
  int norm1() const { return d1 + d2; }
};

// Requires an interval-decomposable certificate: every cpd value >= 0.
UnpackedDiagram unpack(const ConnectedPD& cpd);

// Drop entries with d - b < eps, componentwise.
UnpackedDiagram truncate(const UnpackedDiagram& ud, int eps);

// The dislocated module M(δ): row 2 reads from column x+d1+d2, row 1 from
// x+d1; the window widens by d2 and slides left so no support is lost.
GridRep dislocate(const GridRep& m, ShiftVector dv);

// Natural morphism M -> M(δ) (components are the horizontal transition maps),
// materialized over a common window.
Morphism natural_map(const GridRep& m, ShiftVector dv);

// True iff the natural morphism M -> M(δ) vanishes.
bool is_trivial(const GridRep& m, ShiftVector dv);

// Reindex a morphism h: A -> B to h(δ): A(δ) -> B(δ).
Morphism shift_morphism(const Morphism& h, ShiftVector dv);

// Check that f: M -> N(δ) and g: N -> M(δ) form a δ-interleaving:
// naturality of both, g(δ)∘f = natural Μ -> M(2δ), f(δ)∘g = natural N -> N(2δ).
bool verify_interleaving(const GridRep& m, const GridRep& n, ShiftVector dv, const Morphism& f,
                         const Morphism& g);

// (Ker f, Coker f) tested for 2δ-triviality.
std::pair<bool, bool> kernel_cokernel_trivial(const Morphism& f, ShiftVector dv);

// The index-shift matching μ(cPD(M(δ))) -> μ(cPD(M)):
//   upper  <b,d> -> <b+d1+d2, d+d1+d2>
//   lower  <b,d> -> <b+d1,    d+d1>
//   overlap<b,d> -> <b+d1,    d+d1+d2>, image = overlap entries of length >= d2.
// Throws on multiplicity mismatch.
MatchingTuple rho_matching(const UnpackedDiagram& ud_shifted, const UnpackedDiagram& ud, ShiftVector dv);

enum class MatchDirection { by_death, by_birth };

// Canonical matchings: group by death (resp. birth), expand multiplicities in
// the order "<s,d> < <s',d> iff s < s'" (resp. "<b,t> < <b,t'> iff t > t'"),
// and pair indexwise up to the shorter length.
MatchingTuple canonical_matching(const UnpackedDiagram& src, const UnpackedDiagram& tgt,
                                 MatchDirection direction);

// χ_f = χ_{j_f} ∘ χ_{q_f} through the image; requires M, N, Im f
// interval-decomposable.
MatchingTuple induced_matching(const Morphism& f);

MatchingTuple compose(const MatchingTuple& g, const MatchingTuple& f);

// δ-matching check: coimage/image inclusions for entries of length >= 2δ and
// the two inequality chains for every matched pair.
bool is_delta_matching(const MatchingTuple& sigma, const UnpackedDiagram& ud_m,
                       const UnpackedDiagram& ud_n, int delta);

// Smallest δ admitting a δ-matching; per component a bipartite feasibility
// problem solved by max-flow with lower bounds on the mandatory entries.
int bottleneck_distance(const ConnectedPD& cpd_m, const ConnectedPD& cpd_n);

// A δ-matching witnessing feasibility at the given δ, or nullopt.
std::optional<MatchingTuple> bottleneck_matching(const ConnectedPD& cpd_m, const ConnectedPD& cpd_n,
                                                 int delta);

// ceil(d_B / 2): a certified lower bound on the interleaving distance.
int interleaving_lower_bound(const ConnectedPD& cpd_m, const ConnectedPD& cpd_n);

}  // namespace cladder
