#include "linksplit/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace linksplit {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string describe(const Crossing& c) {
  std::ostringstream os;
  os << "X(" << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ')';
  return os.str();
}

}  // namespace

TraceResult trace_components(std::span<const Crossing> crossings) {
  TraceResult out;
  std::map<int, int> uses;
  for (const auto& c : crossings)
    for (int a : c) {
      if (a <= 0) throw MalformedPD("arc labels must be positive, got " + std::to_string(a));
      ++uses[a];
    }
  for (const auto& [arc, n] : uses)
    if (n != 2)
      throw ArcMultiplicity("arc " + std::to_string(arc) + " is used " + std::to_string(n) +
                            " times (expected 2)");

  out.arcs.reserve(uses.size());
  for (const auto& [arc, n] : uses) out.arcs.push_back(arc);
  auto slot = [&](int arc) {
    return static_cast<int>(std::lower_bound(out.arcs.begin(), out.arcs.end(), arc) - out.arcs.begin());
  };

  UnionFind uf(out.arcs.size());
  for (const auto& c : crossings) {
    uf.unite(slot(c[0]), slot(c[2]));
    uf.unite(slot(c[1]), slot(c[3]));
  }

  // Components in order of their minimal arc; slots are sorted so roots are minimal.
  out.component_of_arc.assign(out.arcs.size(), -1);
  std::vector<int> comp_of_root(out.arcs.size(), -1);
  for (std::size_t s = 0; s < out.arcs.size(); ++s) {
    const int r = uf.find(static_cast<int>(s));
    if (comp_of_root[r] < 0) {
      comp_of_root[r] = static_cast<int>(out.component_arcs.size());
      out.component_arcs.emplace_back();
    }
    out.component_of_arc[s] = comp_of_root[r];
    out.component_arcs[comp_of_root[r]].push_back(out.arcs[s]);
  }
  std::vector<int> lo(out.component_arcs.size()), hi(out.component_arcs.size());
  for (std::size_t k = 0; k < out.component_arcs.size(); ++k) {
    const auto& arcs = out.component_arcs[k];
    lo[k] = arcs.front();
    hi[k] = arcs.back();
    if (hi[k] - lo[k] + 1 != static_cast<int>(arcs.size()))
      throw TraceFailure("arc labels of the component containing arc " + std::to_string(lo[k]) +
                         " are not consecutive");
  }
  auto succ = [&](int arc) {
    const int k = out.component_of_arc[slot(arc)];
    return arc == hi[k] ? lo[k] : arc + 1;
  };

  // Every arc enters one crossing and leaves one crossing. Under-strands are
  // oriented by convention; over-strands by succession, with the in/out count
  // settling the two-arc components where succession is symmetric.
  std::vector<int> in_count(out.arcs.size(), 0), out_count(out.arcs.size(), 0);
  for (const auto& c : crossings) {
    ++in_count[slot(c[0])];
    ++out_count[slot(c[2])];
  }
  out.over_incoming.assign(crossings.size(), 0);
  auto orient = [&](std::size_t i, int pos) {
    out.over_incoming[i] = pos;
    ++in_count[slot(crossings[i][pos])];
    ++out_count[slot(crossings[i][4 - pos])];
  };
  std::vector<std::size_t> ambiguous;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const int b = crossings[i][1], d = crossings[i][3];
    const bool bd = succ(b) == d, db = succ(d) == b;
    if (bd && !db) orient(i, 1);
    else if (db && !bd) orient(i, 3);
    else if (!bd && !db)
      throw TraceFailure("over-strand arcs at " + describe(crossings[i]) + " are not successive");
    else ambiguous.push_back(i);
  }
  while (!ambiguous.empty()) {
    bool progress = false;
    for (auto it = ambiguous.begin(); it != ambiguous.end();) {
      const int b = slot(crossings[*it][1]), d = slot(crossings[*it][3]);
      int pos = 0;
      if (in_count[b] > 0 || out_count[d] > 0) pos = 3;
      else if (in_count[d] > 0 || out_count[b] > 0) pos = 1;
      if (pos) {
        orient(*it, pos);
        it = ambiguous.erase(it);
        progress = true;
      } else {
        ++it;
      }
    }
    if (!progress) {
      // Fully symmetric: pick the smaller label as incoming at the first such crossing.
      const auto& c = crossings[ambiguous.front()];
      orient(ambiguous.front(), c[1] < c[3] ? 1 : 3);
      ambiguous.erase(ambiguous.begin());
    }
  }

  for (std::size_t s = 0; s < out.arcs.size(); ++s)
    if (in_count[s] != 1 || out_count[s] != 1)
      throw TraceFailure("arc " + std::to_string(out.arcs[s]) + " does not enter and leave exactly once");
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& c = crossings[i];
    const int p = out.over_incoming[i];
    if (succ(c[0]) != c[2] || succ(c[p]) != c[4 - p])
      throw TraceFailure("arc succession is inconsistent at " + describe(c));
  }
  return out;
}

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int crossingless_circles)
    : crossings_(std::move(crossings)), crossingless_(crossingless_circles) {
  if (crossingless_ < 0) throw MalformedPD("negative number of crossingless circles");
  if (crossings_.size() > static_cast<std::size_t>(kMaxCrossings))
    throw MalformedPD("at most " + std::to_string(kMaxCrossings) + " crossings are supported");
  trace_ = trace_components(crossings_);
  max_arc_ = trace_.arcs.empty() ? 0 : trace_.arcs.back();
  num_components_ = static_cast<int>(trace_.component_arcs.size()) + crossingless_;
  info_.reserve(crossings_.size());
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    CrossingInfo ci;
    ci.sign = trace_.over_incoming[i] == 3 ? +1 : -1;
    ci.over_component = component_of_arc(crossings_[i][1]);
    ci.under_component = component_of_arc(crossings_[i][0]);
    ci.mixed = ci.over_component != ci.under_component;
    (ci.sign > 0 ? n_plus_ : n_minus_)++;
    info_.push_back(ci);
  }
}

std::span<const int> LinkDiagram::component_arcs(int c) const {
  if (c < static_cast<int>(trace_.component_arcs.size())) return trace_.component_arcs[c];
  return {};
}

int LinkDiagram::component_of_arc(int arc) const {
  auto it = std::lower_bound(trace_.arcs.begin(), trace_.arcs.end(), arc);
  if (it != trace_.arcs.end() && *it == arc) return trace_.component_of_arc[it - trace_.arcs.begin()];
  const int traced = static_cast<int>(trace_.component_arcs.size());
  if (arc > max_arc_ && arc <= max_arc_ + crossingless_) return traced + (arc - max_arc_ - 1);
  throw Error("arc " + std::to_string(arc) + " is not part of the diagram");
}

LinkDiagram parse_pd(std::string_view text) {
  std::vector<Crossing> crossings;
  int circles = 0;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      else if (text[i] == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else break;
    }
  };
  auto fail = [&](const std::string& what) {
    throw MalformedPD(what + " at offset " + std::to_string(i));
  };
  auto expect = [&](char ch) {
    skip();
    if (i >= text.size() || text[i] != ch) fail(std::string("expected '") + ch + "'");
    ++i;
  };
  auto number = [&] {
    skip();
    const std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected an arc label");
    return std::stoi(std::string(text.substr(start, i - start)));
  };
  for (skip(); i < text.size(); skip()) {
    const char ch = text[i];
    if (ch == 'O') {
      ++i;
      ++circles;
    } else if (ch == 'X') {
      ++i;
      expect('(');
      Crossing c{};
      for (int k = 0; k < 4; ++k) {
        if (k) expect(',');
        c[k] = number();
      }
      expect(')');
      crossings.push_back(c);
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#')
      fail("tokens must be separated by whitespace");
  }
  return LinkDiagram(std::move(crossings), circles);
}

std::string serialize_pd(const LinkDiagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : d.crossings()) {
    if (!first) os << ' ';
    os << describe(c);
    first = false;
  }
  for (int k = 0; k < d.crossingless_circles(); ++k) {
    if (!first) os << ' ';
    os << 'O';
    first = false;
  }
  return os.str();
}

CrossingData crossing_data(const LinkDiagram& d) {
  CrossingData out;
  out.crossings.assign(d.crossing_infos().begin(), d.crossing_infos().end());
  out.writhe = d.writhe();
  out.n_plus = d.n_plus();
  out.n_minus = d.n_minus();
  return out;
}

std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d) {
  const int m = d.num_components();
  std::vector<std::vector<int>> twice(m, std::vector<int>(m, 0));
  for (const auto& ci : d.crossing_infos()) {
    if (!ci.mixed) continue;
    twice[ci.over_component][ci.under_component] += ci.sign;
    twice[ci.under_component][ci.over_component] += ci.sign;
  }
  for (auto& row : twice)
    for (auto& v : row) {
      if (v % 2 != 0) throw InvariantViolation("odd crossing-sign sum between two components");
      v /= 2;
    }
  return twice;
}

namespace {

// A two-arc component that is never an under-strand has an orientation the PD
// tuples cannot express. Rebuilds `cs` and swaps the two labels of any such
// component whose traced direction disagrees with `over_in` (the arc that should
// enter each crossing as the over-strand).
LinkDiagram with_over_arcs(std::vector<Crossing> cs, int circles, const std::vector<int>& over_in) {
  LinkDiagram out(cs, circles);
  std::map<int, int> swap;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (out.over_incoming_arc(i) == over_in[i]) continue;
    const auto arcs = out.component_arcs(out.component_of_arc(over_in[i]));
    if (arcs.size() != 2) throw TraceFailure("cannot preserve the orientation at " + describe(cs[i]));
    swap[arcs[0]] = arcs[1];
    swap[arcs[1]] = arcs[0];
  }
  if (swap.empty()) return out;
  for (auto& c : cs)
    for (int& a : c)
      if (auto it = swap.find(a); it != swap.end()) a = it->second;
  out = LinkDiagram(std::move(cs), circles);
  for (std::size_t i = 0; i < out.num_crossings(); ++i) {
    const int want = swap.contains(over_in[i]) ? swap.at(over_in[i]) : over_in[i];
    if (out.over_incoming_arc(i) != want) throw TraceFailure("cannot preserve the orientation of the diagram");
  }
  return out;
}

}  // namespace

LinkDiagram change_crossing(const LinkDiagram& d, std::size_t i) {
  if (i >= d.num_crossings()) throw Error("crossing index out of range");
  std::vector<Crossing> cs(d.crossings().begin(), d.crossings().end());
  const Crossing c = cs[i];
  // Start the quadruple at the incoming over-arc, which becomes the incoming under-arc.
  cs[i] = d.over_incoming_position(i) == 3 ? Crossing{c[3], c[0], c[1], c[2]}
                                            : Crossing{c[1], c[2], c[3], c[0]};
  std::vector<int> over_in(cs.size());
  for (std::size_t j = 0; j < cs.size(); ++j) over_in[j] = j == i ? c[0] : d.over_incoming_arc(j);
  return with_over_arcs(std::move(cs), d.crossingless_circles(), over_in);
}

LinkDiagram sublink(const LinkDiagram& d, std::span<const int> components) {
  const int m = d.num_components();
  std::vector<bool> keep(m, false);
  for (int c : components) {
    if (c < 0 || c >= m) throw Error("component index out of range");
    keep[c] = true;
  }
  const std::size_t n = d.num_crossings();
  std::vector<bool> kept(n, false);
  std::map<int, std::size_t> end_crossing;  // arc -> crossing it enters
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ci = d.crossing_info(i);
    kept[i] = keep[ci.over_component] && keep[ci.under_component];
    end_crossing[d.crossing(i)[0]] = i;
    end_crossing[d.over_incoming_arc(i)] = i;
  }

  std::map<int, int> relabel;
  int next = 1;
  int circles = 0;
  const int traced = m - d.crossingless_circles();
  for (int c = 0; c < m; ++c) {
    if (!keep[c]) continue;
    if (c >= traced) {
      ++circles;
      continue;
    }
    const auto arcs = d.component_arcs(c);
    const std::size_t k = arcs.size();
    std::size_t first_break = k;
    for (std::size_t j = 0; j < k; ++j)
      if (kept[end_crossing.at(arcs[j])]) {
        first_break = j;
        break;
      }
    if (first_break == k) {
      ++circles;
      continue;
    }
    const std::size_t start = (first_break + 1) % k;
    for (std::size_t step = 0; step < k; ++step) {
      const int arc = arcs[(start + step) % k];
      relabel[arc] = next;
      if (kept[end_crossing.at(arc)]) ++next;
    }
  }

  std::vector<Crossing> cs;
  std::vector<int> over_in;
  for (std::size_t i = 0; i < n; ++i) {
    if (!kept[i]) continue;
    Crossing c = d.crossing(i);
    for (int& a : c) a = relabel.at(a);
    cs.push_back(c);
    over_in.push_back(relabel.at(d.over_incoming_arc(i)));
  }
  return with_over_arcs(std::move(cs), circles, over_in);
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  std::vector<Crossing> cs(a.crossings().begin(), a.crossings().end());
  const int shift = a.max_arc();
  for (Crossing c : b.crossings()) {
    for (int& x : c) x += shift;
    cs.push_back(c);
  }
  return LinkDiagram(std::move(cs), a.crossingless_circles() + b.crossingless_circles());
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (std::size_t i = 0; i < d.num_crossings(); ++i) out = change_crossing(out, i);
  return out;
}

std::vector<LinkTableEntry> parse_link_table(std::string_view text) {
  std::vector<LinkTableEntry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw MalformedPD("link table line " + std::to_string(line_no) + " has no tab separator");
    out.push_back({std::string(line.substr(0, tab)), std::string(line.substr(tab + 1))});
  }
  return out;
}

std::vector<LinkTableEntry> read_link_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open link table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_link_table(ss.str());
}

}  // namespace linksplit
