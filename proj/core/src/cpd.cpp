#include "cladder/cpd.hpp"

namespace cladder {

ConnectedPD tilde_delta(const SignedMultiplicityMap& delta, int n, uint32_t field, int x_lo) {
  ConnectedPD out;
  out.n = n;
  out.x_lo = x_lo;
  out.field = field;
  for (const auto& [i, v] : delta) {
    if (i.num_rows() == 2) {
      int b2 = i.b(2), d2 = i.d(2), b1 = i.b(1), d1 = i.d(1);
      out.connecting[{b2, d2, b1, d1}] += v;
      out.lower[{b1, d1}] += v;
      out.upper[{b2, d2}] += v;
    } else if (i.row_lo() == 1) {
      out.lower[{i.b(1), i.d(1)}] += v;
    } else {
      out.upper[{i.b(2), i.d(2)}] += v;
    }
  }
  std::erase_if(out.lower, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(out.upper, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(out.connecting, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SignedMultiplicityMap untilde_delta(const ConnectedPD& cpd) {
  SignedMultiplicityMap delta;
  std::map<std::pair<int, int>, int> lower_sum, upper_sum;
  for (const auto& [k, v] : cpd.connecting) {
    auto [b2, d2, b1, d1] = k;
    if (v != 0) delta[StaircaseInterval::ladder(b2, d2, b1, d1)] = v;
    lower_sum[{b1, d1}] += v;
    upper_sum[{b2, d2}] += v;
  }
  for (const auto& [k, v] : cpd.lower) {
    int rest = v - lower_sum[k];
    if (rest != 0) delta[StaircaseInterval::row_span(k.first, k.second, 1)] = rest;
  }
  for (auto& [k, acc] : lower_sum) {
    if (cpd.lower.count(k)) continue;
    if (acc != 0) delta[StaircaseInterval::row_span(k.first, k.second, 1)] = -acc;
  }
  for (const auto& [k, v] : cpd.upper) {
    int rest = v - upper_sum[k];
    if (rest != 0) delta[StaircaseInterval::row_span(k.first, k.second, 2)] = rest;
  }
  for (auto& [k, acc] : upper_sum) {
    if (cpd.upper.count(k)) continue;
    if (acc != 0) delta[StaircaseInterval::row_span(k.first, k.second, 2)] = -acc;
  }
  return delta;
}

ConnectedPD connected_pd(const GridRep& m, Assignment assignment) {
  if (m.q() != 2) throw error(errc::usage, "connected persistence diagrams need a ladder module");
  // Any interval leaving the support hull has an essential vertex carrying a
  // zero space, so its compressed multiplicity (hence its approximation
  // value) vanishes: it suffices to work on the support columns.
  int x_min = 0, x_max = -1;
  for (int x = m.x_lo(); x <= m.x_hi(); ++x)
    if (m.dim({x, 1}) > 0 || m.dim({x, 2}) > 0) {
      if (x_max < x_min) x_min = x;
      x_max = x;
    }
  ConnectedPD empty;
  empty.n = m.p();
  empty.x_lo = m.x_lo();
  empty.field = m.prime();
  if (x_max < x_min) return empty;
  // translate [x_min, x_max] to a window at origin 1
  const int width = x_max - x_min + 1;
  GridRep local(width, 2, m.prime(), 1);
  for (int y = 1; y <= 2; ++y)
    for (int x = 1; x <= width; ++x) local.set_dim({x, y}, m.dim({x + x_min - 1, y}));
  for (int y = 1; y <= 2; ++y)
    for (int x = 1; x <= width; ++x) {
      if (x < width) local.set_horiz({x, y}, m.horiz({x + x_min - 1, y}));
      if (y < 2) local.set_vert({x, y}, m.vert({x + x_min - 1, y}));
    }
  IntervalPoset poset(width, 2);
  SignedMultiplicityMap delta = interval_approximation(local, poset, assignment);
  if (x_min != 1) {
    SignedMultiplicityMap shifted;
    for (const auto& [i, v] : delta) {
      std::vector<std::array<int, 2>> spans;
      for (auto s : i.spans()) spans.push_back({s[0] + x_min - 1, s[1] + x_min - 1});
      shifted.emplace(StaircaseInterval(i.row_lo(), std::move(spans)), v);
    }
    delta = std::move(shifted);
  }
  return tilde_delta(delta, m.p(), m.prime(), m.x_lo());
}

bool has_negative(const ConnectedPD& cpd) {
  for (const auto& [k, v] : cpd.connecting)
    if (v < 0) return true;
  return false;
}

}  // namespace cladder
