#include "cladder/stability.hpp"

#include <algorithm>
#include <queue>

namespace cladder {

UnpackedDiagram unpack(const ConnectedPD& cpd) {
  for (const auto& [k, v] : cpd.lower)
    if (v < 0) throw error(errc::domain, "not-interval-decomposable");
  for (const auto& [k, v] : cpd.upper)
    if (v < 0) throw error(errc::domain, "not-interval-decomposable");
  for (const auto& [k, v] : cpd.connecting)
    if (v < 0) throw error(errc::domain, "not-interval-decomposable");
  UnpackedDiagram ud;
  for (const auto& [k, v] : cpd.upper)
    if (v > 0) ud.b2[{k.first, k.second}] += v;
  for (const auto& [k, v] : cpd.lower)
    if (v > 0) ud.b1[{k.first, k.second}] += v;
  for (const auto& [k, v] : cpd.connecting) {
    auto [b2, d2, b1, d1] = k;
    if (v > 0) ud.b21[{b1, d2}] += v;  // overlap span of the two-row interval
  }
  return ud;
}

UnpackedDiagram truncate(const UnpackedDiagram& ud, int eps) {
  auto keep = [&](const BDMultiset& s) {
    BDMultiset out;
    for (const auto& [bd, m] : s)
      if (bd.d - bd.b >= eps) out.emplace(bd, m);
    return out;
  };
  return {keep(ud.b2), keep(ud.b1), keep(ud.b21)};
}

GridRep dislocate(const GridRep& m, ShiftVector dv) {
  if (m.q() != 2) throw error(errc::usage, "dislocation needs a ladder module");
  if (dv.d1 < 0 || dv.d2 < 0) throw error(errc::usage, "shift components must be >= 0");
  const int shift2 = dv.d1 + dv.d2;
  GridRep out(m.p() + dv.d2, 2, m.prime(), m.x_lo() - shift2);
  for (int x = out.x_lo(); x <= out.x_hi(); ++x) {
    out.set_dim({x, 2}, m.dim({x + shift2, 2}));
    out.set_dim({x, 1}, m.dim({x + dv.d1, 1}));
  }
  for (int x = out.x_lo(); x <= out.x_hi(); ++x) {
    if (x < out.x_hi()) {
      out.set_horiz({x, 2}, m.horiz({x + shift2, 2}));
      out.set_horiz({x, 1}, m.horiz({x + dv.d1, 1}));
    }
    out.set_vert({x, 1}, evaluate_path(m, {x + dv.d1, 1}, {x + shift2, 2}));
  }
  return out;
}

namespace {

// Rows re-read from shifted columns on the same window; equals
// embed(dislocate(m, dv), window) when the window holds the shifted support.
GridRep shift_rows_in_window(const GridRep& m, ShiftVector dv) {
  const int shift2 = dv.d1 + dv.d2;
  GridRep out(m.p(), 2, m.prime(), m.x_lo());
  for (int x = out.x_lo(); x <= out.x_hi(); ++x) {
    out.set_dim({x, 2}, m.dim({x + shift2, 2}));
    out.set_dim({x, 1}, m.dim({x + dv.d1, 1}));
  }
  for (int x = out.x_lo(); x <= out.x_hi(); ++x) {
    if (x < out.x_hi()) {
      out.set_horiz({x, 2}, m.horiz({x + shift2, 2}));
      out.set_horiz({x, 1}, m.horiz({x + dv.d1, 1}));
    }
    out.set_vert({x, 1}, evaluate_path(m, {x + dv.d1, 1}, {x + shift2, 2}));
  }
  return out;
}

Morphism natural_in_window(const GridRep& m, ShiftVector dv) {
  const int shift2 = dv.d1 + dv.d2;
  Morphism f{m, shift_rows_in_window(m, dv), {}};
  for (int y = 1; y <= 2; ++y)
    for (int x = m.x_lo(); x <= m.x_hi(); ++x)
      f.comps.push_back(evaluate_path(m, {x, y}, {x + (y == 2 ? shift2 : dv.d1), y}));
  return f;
}

Morphism align_morphism(const Morphism& h, int x_lo, int p) {
  GridRep src = embed(h.src, x_lo, p);
  GridRep tgt = embed(h.tgt, x_lo, p);
  Morphism out{src, tgt, {}};
  for (int y = 1; y <= src.q(); ++y)
    for (int x = x_lo; x <= x_lo + p - 1; ++x) {
      if (x >= h.src.x_lo() && x <= h.src.x_hi())
        out.comps.push_back(h.at({x, y}));
      else
        out.comps.push_back(Matrix(tgt.dim({x, y}), src.dim({x, y}), src.prime()));
    }
  return out;
}

Morphism shift_morphism_in_window(const Morphism& h, ShiftVector dv) {
  const int shift2 = dv.d1 + dv.d2;
  Morphism out{shift_rows_in_window(h.src, dv), shift_rows_in_window(h.tgt, dv), {}};
  for (int y = 1; y <= h.src.q(); ++y)
    for (int x = h.src.x_lo(); x <= h.src.x_hi(); ++x) {
      int sx = x + (y == 2 ? shift2 : dv.d1);
      if (sx <= h.src.x_hi())
        out.comps.push_back(h.at({sx, y}));
      else
        out.comps.push_back(Matrix(0, 0, h.src.prime()));
    }
  return out;
}

}  // namespace

Morphism natural_map(const GridRep& m, ShiftVector dv) {
  const int shift2 = dv.d1 + dv.d2;
  GridRep wide = embed(m, m.x_lo() - shift2, m.p() + shift2);
  return natural_in_window(wide, dv);
}

bool is_trivial(const GridRep& m, ShiftVector dv) { return is_zero(natural_map(m, dv)); }

Morphism shift_morphism(const Morphism& h, ShiftVector dv) {
  const int shift2 = dv.d1 + dv.d2;
  Morphism wide = align_morphism(h, h.src.x_lo() - shift2, h.src.p() + shift2);
  return shift_morphism_in_window(wide, dv);
}

bool verify_interleaving(const GridRep& m, const GridRep& n, ShiftVector dv, const Morphism& f,
                         const Morphism& g) {
  const int shift2 = dv.d1 + dv.d2;
  int lo = std::min({m.x_lo(), n.x_lo(), f.src.x_lo(), g.src.x_lo()}) - 2 * shift2;
  int hi = std::max({m.x_hi(), n.x_hi(), f.src.x_hi(), g.src.x_hi()});
  int p = hi - lo + 1;
  GridRep mw = embed(m, lo, p);
  GridRep nw = embed(n, lo, p);
  Morphism fw = align_morphism(f, lo, p);
  Morphism gw = align_morphism(g, lo, p);
  if (!(fw.src == mw) || !(fw.tgt == shift_rows_in_window(nw, dv))) throw error(errc::usage, "shape mismatch");
  if (!(gw.src == nw) || !(gw.tgt == shift_rows_in_window(mw, dv))) throw error(errc::usage, "shape mismatch");
  if (!is_natural(fw) || !is_natural(gw)) return false;
  ShiftVector two{2 * dv.d1, 2 * dv.d2};
  Morphism g_shift = shift_morphism_in_window(gw, dv);
  Morphism f_shift = shift_morphism_in_window(fw, dv);
  Morphism left = compose(g_shift, fw);
  Morphism right = compose(f_shift, gw);
  Morphism nat_m = natural_in_window(mw, two);
  Morphism nat_n = natural_in_window(nw, two);
  return left.comps == nat_m.comps && right.comps == nat_n.comps;
}

std::pair<bool, bool> kernel_cokernel_trivial(const Morphism& f, ShiftVector dv) {
  ShiftVector two{2 * dv.d1, 2 * dv.d2};
  GridRep ker = kernel_subrep(f);
  GridRep coker = cokernel_rep(f);
  return {is_trivial(ker, two), is_trivial(coker, two)};
}

namespace {

void append_exact_shift(ComponentMatching& out, const BDMultiset& from, const BDMultiset& to, int db,
                        int dd, const char* what) {
  BDMultiset must_hit = to;  // every target entry must be hit exactly
  for (const auto& [bd, mult] : from) {
    BD tgt{bd.b + db, bd.d + dd};
    auto it = must_hit.find(tgt);
    if (it == must_hit.end() || it->second != mult)
      throw error(errc::internal, std::string("rho matching multiplicity mismatch on ") + what);
    for (int k = 0; k < mult; ++k) out.pairs.push_back({Slot{bd, k}, Slot{tgt, k}});
    must_hit.erase(it);
  }
  if (!must_hit.empty())
    throw error(errc::internal, std::string("rho matching multiplicity mismatch on ") + what);
}

}  // namespace

MatchingTuple rho_matching(const UnpackedDiagram& ud_shifted, const UnpackedDiagram& ud, ShiftVector dv) {
  const int shift2 = dv.d1 + dv.d2;
  MatchingTuple rho;
  append_exact_shift(rho.comp[kUpper], ud_shifted.b2, ud.b2, shift2, shift2, "upper bars");
  append_exact_shift(rho.comp[kLower], ud_shifted.b1, ud.b1, dv.d1, dv.d1, "lower bars");
  // overlaps: image is exactly the entries of length >= d2
  BDMultiset target = truncate(ud, dv.d2).b21;
  for (const auto& [bd, mult] : ud_shifted.b21) {
    BD tgt{bd.b + dv.d1, bd.d + shift2};
    auto it = target.find(tgt);
    if (it == target.end() || it->second != mult)
      throw error(errc::internal, "rho matching multiplicity mismatch on overlaps");
    for (int k = 0; k < mult; ++k) rho.comp[kOverlap].pairs.push_back({Slot{bd, k}, Slot{tgt, k}});
    target.erase(it);
  }
  if (!target.empty()) throw error(errc::internal, "rho matching multiplicity mismatch on overlaps");
  return rho;
}

namespace {

// expand a multiset into slots ordered "longest first" within a group
std::vector<Slot> expand_group(const std::vector<std::pair<BD, int>>& group) {
  std::vector<Slot> out;
  for (const auto& [bd, mult] : group)
    for (int k = 0; k < mult; ++k) out.push_back({bd, k});
  return out;
}

ComponentMatching canonical_component(const BDMultiset& src, const BDMultiset& tgt,
                                      MatchDirection direction) {
  ComponentMatching out;
  auto group_key = [&](BD bd) { return direction == MatchDirection::by_death ? bd.d : bd.b; };
  std::vector<int> keys;
  for (const auto& [bd, m] : src) keys.push_back(group_key(bd));
  for (const auto& [bd, m] : tgt) keys.push_back(group_key(bd));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (int key : keys) {
    auto collect = [&](const BDMultiset& s) {
      std::vector<std::pair<BD, int>> group;
      for (const auto& [bd, m] : s)
        if (group_key(bd) == key) group.emplace_back(bd, m);
      // longest first: by_death -> ascending b; by_birth -> descending d
      std::sort(group.begin(), group.end(), [&](const auto& a, const auto& b) {
        return direction == MatchDirection::by_death ? a.first.b < b.first.b : a.first.d > b.first.d;
      });
      return expand_group(group);
    };
    std::vector<Slot> s = collect(src), t = collect(tgt);
    for (size_t k = 0; k < std::min(s.size(), t.size()); ++k) out.pairs.push_back({s[k], t[k]});
  }
  return out;
}

}  // namespace

MatchingTuple canonical_matching(const UnpackedDiagram& src, const UnpackedDiagram& tgt,
                                 MatchDirection direction) {
  MatchingTuple out;
  out.comp[kUpper] = canonical_component(src.b2, tgt.b2, direction);
  out.comp[kLower] = canonical_component(src.b1, tgt.b1, direction);
  out.comp[kOverlap] = canonical_component(src.b21, tgt.b21, direction);
  return out;
}

MatchingTuple compose(const MatchingTuple& g, const MatchingTuple& f) {
  MatchingTuple out;
  for (int c = 0; c < 3; ++c) {
    std::map<Slot, Slot> g_map;
    for (const auto& [a, b] : g.comp[c].pairs) g_map.emplace(a, b);
    for (const auto& [a, mid] : f.comp[c].pairs) {
      auto it = g_map.find(mid);
      if (it != g_map.end()) out.comp[c].pairs.push_back({a, it->second});
    }
  }
  return out;
}

MatchingTuple induced_matching(const Morphism& f) {
  ConnectedPD cpd_m = connected_pd(f.src);
  ConnectedPD cpd_n = connected_pd(f.tgt);
  if (has_negative(cpd_m) || has_negative(cpd_n)) throw error(errc::domain, "not-interval-decomposable");
  ImageFactorization img = image_subrep(f);
  ConnectedPD cpd_img = connected_pd(img.image);
  if (has_negative(cpd_img)) throw error(errc::domain, "image-not-interval-decomposable");
  UnpackedDiagram ud_m = unpack(cpd_m), ud_img = unpack(cpd_img), ud_n = unpack(cpd_n);
  MatchingTuple chi_q = canonical_matching(ud_m, ud_img, MatchDirection::by_birth);
  MatchingTuple chi_j = canonical_matching(ud_img, ud_n, MatchDirection::by_death);
  return compose(chi_j, chi_q);
}

namespace {

bool multiset_has_slot(const BDMultiset& s, const Slot& slot) {
  auto it = s.find(slot.bd);
  return it != s.end() && slot.idx >= 0 && slot.idx < it->second;
}

bool pair_within(const BD& u, const BD& v, int delta) {
  return v.b - delta <= u.b && u.b <= u.d && u.d <= v.d + delta && u.b - delta <= v.b && v.b <= v.d &&
         v.d <= u.d + delta;
}

}  // namespace

bool is_delta_matching(const MatchingTuple& sigma, const UnpackedDiagram& ud_m,
                       const UnpackedDiagram& ud_n, int delta) {
  const BDMultiset* ms[3] = {&ud_m.b2, &ud_m.b1, &ud_m.b21};
  const BDMultiset* ns[3] = {&ud_n.b2, &ud_n.b1, &ud_n.b21};
  for (int c = 0; c < 3; ++c) {
    std::map<Slot, int> seen_src, seen_dst;
    BDMultiset coim, im;
    for (const auto& [u, v] : sigma.comp[c].pairs) {
      if (!multiset_has_slot(*ms[c], u) || !multiset_has_slot(*ns[c], v)) return false;
      if (seen_src[u]++ || seen_dst[v]++) return false;  // not injective
      if (!pair_within(u.bd, v.bd, delta)) return false;
      ++coim[u.bd];
      ++im[v.bd];
    }
    for (const auto& [bd, mult] : *ms[c]) {
      if (bd.d - bd.b < 2 * delta) continue;
      auto it = coim.find(bd);
      if (it == coim.end() || it->second < mult) return false;
    }
    for (const auto& [bd, mult] : *ns[c]) {
      if (bd.d - bd.b < 2 * delta) continue;
      auto it = im.find(bd);
      if (it == im.end() || it->second < mult) return false;
    }
  }
  return true;
}

namespace {

// small Dinic max-flow
class FlowNet {
 public:
  explicit FlowNet(int n) : adj_(n) {}
  // returns the edge id; the flow can be read back after max_flow
  int add_edge(int u, int v, int cap) {
    int id = static_cast<int>(edges_.size());
    adj_[u].push_back(id);
    edges_.push_back({v, cap});
    adj_[v].push_back(id + 1);
    edges_.push_back({u, 0});
    return id;
  }
  int flow_on(int edge_id) const { return edges_[static_cast<size_t>(edge_id) ^ 1].cap; }
  int max_flow(int s, int t) {
    int total = 0;
    while (bfs(s, t)) {
      iter_.assign(adj_.size(), 0);
      while (int pushed = dfs(s, t, INT32_MAX)) total += pushed;
    }
    return total;
  }

 private:
  struct Edge {
    int to, cap;
  };
  bool bfs(int s, int t) {
    level_.assign(adj_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : adj_[u]) {
        const Edge& e = edges_[id];
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }
  int dfs(int u, int t, int f) {
    if (u == t) return f;
    for (size_t& i = iter_[u]; i < adj_[u].size(); ++i) {
      int id = adj_[u][i];
      Edge& e = edges_[id];
      if (e.cap <= 0 || level_[e.to] != level_[u] + 1) continue;
      int pushed = dfs(e.to, t, std::min(f, e.cap));
      if (pushed > 0) {
        e.cap -= pushed;
        edges_[id ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<size_t> iter_;
};

// Does a matching exist that saturates every entry of length >= 2*delta on
// both sides, with edges given by the delta-matching inequalities? Bipartite
// b-matching with lower bounds, solved as a feasible circulation. When
// `pairs` is non-null the realizing pairs (with counts) are appended.
bool component_feasible(const BDMultiset& ms, const BDMultiset& ns, int delta,
                        std::vector<std::tuple<BD, BD, int>>* pairs = nullptr) {
  std::vector<std::pair<BD, int>> left(ms.begin(), ms.end()), right(ns.begin(), ns.end());
  const int nl = static_cast<int>(left.size()), nr = static_cast<int>(right.size());
  // nodes: 0 = S, 1 = T, 2 = SS, 3 = TT, 4.. left, 4+nl.. right
  FlowNet net(4 + nl + nr);
  int need = 0;
  auto add_lb_edge = [&](int u, int v, int lb, int cap, std::vector<int>& excess) {
    net.add_edge(u, v, cap - lb);
    excess[v] += lb;
    excess[u] -= lb;
  };
  std::vector<int> excess(4 + nl + nr, 0);
  for (int i = 0; i < nl; ++i) {
    int lb = left[i].first.d - left[i].first.b >= 2 * delta ? left[i].second : 0;
    add_lb_edge(0, 4 + i, lb, left[i].second, excess);
  }
  for (int j = 0; j < nr; ++j) {
    int lb = right[j].first.d - right[j].first.b >= 2 * delta ? right[j].second : 0;
    add_lb_edge(4 + nl + j, 1, lb, right[j].second, excess);
  }
  std::vector<std::tuple<int, int, int>> lr_edges;  // (left, right, edge id)
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j)
      if (pair_within(left[i].first, right[j].first, delta))
        lr_edges.emplace_back(i, j, net.add_edge(4 + i, 4 + nl + j, std::min(left[i].second, right[j].second)));
  net.add_edge(1, 0, INT32_MAX / 2);  // close the circulation
  for (int v = 0; v < 4 + nl + nr; ++v) {
    if (excess[v] > 0) {
      net.add_edge(2, v, excess[v]);
      need += excess[v];
    } else if (excess[v] < 0) {
      net.add_edge(v, 3, -excess[v]);
    }
  }
  if (net.max_flow(2, 3) != need) return false;
  if (pairs)
    for (auto [i, j, id] : lr_edges) {
      int f = net.flow_on(id);
      if (f > 0) pairs->emplace_back(left[i].first, right[j].first, f);
    }
  return true;
}

}  // namespace

int bottleneck_distance(const ConnectedPD& cpd_m, const ConnectedPD& cpd_n) {
  UnpackedDiagram um = unpack(cpd_m), un = unpack(cpd_n);
  int longest = 0;
  for (const BDMultiset* s : {&um.b2, &um.b1, &um.b21, &un.b2, &un.b1, &un.b21})
    for (const auto& [bd, m] : *s) longest = std::max(longest, bd.d - bd.b);
  for (int delta = 0;; ++delta) {
    if (component_feasible(um.b2, un.b2, delta) && component_feasible(um.b1, un.b1, delta) &&
        component_feasible(um.b21, un.b21, delta))
      return delta;
    if (2 * delta > longest)
      throw error(errc::internal, "bottleneck scan exceeded the trivial-matching bound");
  }
}

std::optional<MatchingTuple> bottleneck_matching(const ConnectedPD& cpd_m, const ConnectedPD& cpd_n,
                                                 int delta) {
  UnpackedDiagram um = unpack(cpd_m), un = unpack(cpd_n);
  const BDMultiset* ms[3] = {&um.b2, &um.b1, &um.b21};
  const BDMultiset* ns[3] = {&un.b2, &un.b1, &un.b21};
  MatchingTuple out;
  for (int c = 0; c < 3; ++c) {
    std::vector<std::tuple<BD, BD, int>> flows;
    if (!component_feasible(*ms[c], *ns[c], delta, &flows)) return std::nullopt;
    std::map<BD, int> used_src, used_dst;
    for (const auto& [u, v, count] : flows)
      for (int k = 0; k < count; ++k)
        out.comp[c].pairs.push_back({Slot{u, used_src[u]++}, Slot{v, used_dst[v]++}});
  }
  return out;
}

int interleaving_lower_bound(const ConnectedPD& cpd_m, const ConnectedPD& cpd_n) {
  return (bottleneck_distance(cpd_m, cpd_n) + 1) / 2;
}

}  // namespace cladder
