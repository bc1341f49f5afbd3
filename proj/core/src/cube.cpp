#include "linksplit/cube.hpp"

#include <deque>
#include <numeric>

namespace linksplit {

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

Resolution resolve(const LinkDiagram& d, Mask mask) {
  const int labels = d.max_arc() + d.crossingless_circles() + 1;
  std::vector<int> parent(labels);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < d.num_crossings(); ++i) {
    const auto& c = d.crossing(i);
    if ((mask >> i) & 1) {
      unite(parent, c[0], c[3]);
      unite(parent, c[1], c[2]);
    } else {
      unite(parent, c[0], c[1]);
      unite(parent, c[2], c[3]);
    }
  }
  Resolution r;
  r.mask = mask;
  r.circle_of_arc.assign(labels, -1);
  std::vector<int> circle_of_root(labels, -1);
  auto add = [&](int arc) {
    const int root = find(parent, arc);
    if (circle_of_root[root] < 0) {
      circle_of_root[root] = r.num_circles++;
      r.circle_min_arc.push_back(arc);
    }
    r.circle_of_arc[arc] = circle_of_root[root];
  };
  for (int arc : d.arcs()) add(arc);
  for (int k = 0; k < d.crossingless_circles(); ++k) add(d.virtual_arc(k));
  if (r.num_circles > 31) throw InvariantViolation("more than 31 circles in one resolution");
  return r;
}

Gradings gradings(const LinkDiagram& d, int resolution_weight, int num_circles, int x_count) {
  Gradings g;
  g.h = resolution_weight - d.n_minus();
  g.l = 2 * x_count - num_circles - d.writhe();
  g.q = g.h - g.l;
  const int m = d.num_components();
  if ((g.q - m) % 2 != 0) throw InvariantViolation("quantum grading with the wrong parity");
  g.g = (g.q - m) / 2;
  return g;
}

Gradings gradings(const LinkDiagram& d, const Resolution& r, std::uint32_t mono) {
  return gradings(d, std::popcount(r.mask), r.num_circles, std::popcount(mono));
}

int EdgeMap::apply(std::uint32_t mono, std::array<std::uint32_t, 2>& out) const {
  std::uint32_t base = 0;
  for (std::size_t k = 0; k < passive.size(); ++k)
    if (passive[k] >= 0 && ((mono >> k) & 1u)) base |= 1u << passive[k];
  if (kind == SaddleKind::Merge) {
    const bool x0 = (mono >> two[0]) & 1u, x1 = (mono >> two[1]) & 1u;
    if (x0 && x1) return 0;
    out[0] = base | ((x0 || x1) ? 1u << one : 0u);
    return 1;
  }
  if ((mono >> one) & 1u) {
    out[0] = base | (1u << two[0]) | (1u << two[1]);
    return 1;
  }
  out[0] = base | (1u << two[1]);
  out[1] = base | (1u << two[0]);
  if (out[1] < out[0]) std::swap(out[0], out[1]);
  return 2;
}

EdgeMap edge_map(const LinkDiagram& d, const Resolution& from, const Resolution& to, int crossing) {
  const auto& c = d.crossing(crossing);
  const bool from_one = (from.mask >> crossing) & 1;
  // Arcs a and (b or c) sit on different local strands of the smoothing.
  const int pa = c[0];
  const int from_other = from_one ? c[1] : c[2];
  const int to_other = from_one ? c[2] : c[1];
  EdgeMap e;
  e.crossing = crossing;
  const int fa = from.circle_of(pa), fb = from.circle_of(from_other);
  if (fa != fb) {
    e.kind = SaddleKind::Merge;
    e.two = {fa, fb};
    e.one = to.circle_of(pa);
  } else {
    e.kind = SaddleKind::Split;
    e.one = fa;
    e.two = {to.circle_of(pa), to.circle_of(to_other)};
    if (e.two[0] == e.two[1]) throw InvariantViolation("saddle does not change the circle count");
  }
  e.passive.assign(from.num_circles, -1);
  for (int k = 0; k < from.num_circles; ++k) {
    if (e.kind == SaddleKind::Merge ? (k == fa || k == fb) : k == fa) continue;
    e.passive[k] = to.circle_of(from.circle_min_arc[k]);
  }
  return e;
}

EdgeMap edge_map(const LinkDiagram& d, Mask lower, int crossing, EdgeDirection dir) {
  if ((lower >> crossing) & 1) throw Error("edge_map expects the lower end of a cube edge");
  const Resolution ri = resolve(d, lower);
  const Resolution rj = resolve(d, lower | (Mask{1} << crossing));
  return dir == EdgeDirection::Forward ? edge_map(d, ri, rj, crossing) : edge_map(d, rj, ri, crossing);
}

std::vector<ArcEnds> arc_ends(const LinkDiagram& d) {
  std::vector<ArcEnds> ends(d.max_arc() + 1);
  for (std::size_t i = 0; i < d.num_crossings(); ++i) {
    const auto& c = d.crossing(i);
    const int in_over = d.over_incoming_position(i);
    const int out_over = 4 - in_over;
    const int ci = static_cast<int>(i);
    ends[c[0]].head_crossing = ci;
    ends[c[0]].head_position = 0;
    ends[c[in_over]].head_crossing = ci;
    ends[c[in_over]].head_position = in_over;
    ends[c[2]].tail_crossing = ci;
    ends[c[2]].tail_position = 2;
    ends[c[out_over]].tail_crossing = ci;
    ends[c[out_over]].tail_position = out_over;
  }
  return ends;
}

SignAssignment sign_assignment(const LinkDiagram& d) {
  const std::size_t n = d.num_crossings();
  SignAssignment s(n, 0);
  const auto ends = arc_ends(d);
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, beta)
  for (int arc : d.arcs()) {
    const auto& e = ends[arc];
    adj[e.tail_crossing].emplace_back(e.head_crossing, beta(e));
    adj[e.head_crossing].emplace_back(e.tail_crossing, beta(e));
  }
  for (std::size_t root = 0; root < n; ++root) {
    if (s[root] != 0) continue;
    s[root] = 1;
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (auto [v, b] : adj[u])
        if (s[v] == 0) {
          s[v] = b * s[u];
          queue.push_back(v);
        }
    }
  }
  if (!is_sign_assignment(d, s)) throw InconsistentSigns("no sign assignment satisfies every arc");
  return s;
}

bool is_sign_assignment(const LinkDiagram& d, const SignAssignment& s) {
  if (s.size() != d.num_crossings()) return false;
  for (int v : s)
    if (v != 1 && v != -1) return false;
  const auto ends = arc_ends(d);
  for (int arc : d.arcs()) {
    const auto& e = ends[arc];
    if (s[e.tail_crossing] * s[e.head_crossing] != beta(e)) return false;
  }
  return true;
}

}  // namespace linksplit
