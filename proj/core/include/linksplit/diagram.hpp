#pragma once

// Oriented planar link diagrams in PD notation.
//
// A crossing X(a,b,c,d) lists its four arc labels counterclockwise starting
// from the incoming under-strand, so the under-strand runs a -> c and the
// over-strand joins b and d. Arc labels along every component form one
// consecutive run lo, lo+1, ..., hi with hi followed by lo. Components without
// crossings are written `O`.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linksplit/errors.hpp"

namespace linksplit {

using Crossing = std::array<int, 4>;

inline constexpr int kMaxCrossings = 62;

struct CrossingInfo {
  int sign = 0;            // +1 or -1
  int over_component = 0;  // 0-based
  int under_component = 0;
  bool mixed = false;
  friend bool operator==(const CrossingInfo&, const CrossingInfo&) = default;
};

/// Output of tracing the arc succession of a list of crossings.
struct TraceResult {
  std::vector<int> arcs;               // sorted arc labels
  std::vector<int> component_of_arc;   // parallel to `arcs`, 0-based
  std::vector<std::vector<int>> component_arcs;  // arcs of each traced component in order
  std::vector<int> over_incoming;      // per crossing: 1 (position b) or 3 (position d)
};

/// Traces components and over-strand directions. Throws ArcMultiplicity or TraceFailure.
TraceResult trace_components(std::span<const Crossing> crossings);

class LinkDiagram {
 public:
  LinkDiagram() = default;
  /// Validates and traces; throws MalformedPD, ArcMultiplicity or TraceFailure.
  LinkDiagram(std::vector<Crossing> crossings, int crossingless_circles);

  std::span<const Crossing> crossings() const { return crossings_; }
  const Crossing& crossing(std::size_t i) const { return crossings_[i]; }
  std::size_t num_crossings() const { return crossings_.size(); }
  /// Components are numbered by ascending minimal arc label; crossingless circles come last.
  int num_components() const { return num_components_; }
  int crossingless_circles() const { return crossingless_; }
  std::size_t num_arcs() const { return trace_.arcs.size(); }
  std::span<const int> arcs() const { return trace_.arcs; }

  /// Traced arcs of component c in order of travel (empty for crossingless circles).
  std::span<const int> component_arcs(int c) const;
  int component_of_arc(int arc) const;
  /// Position (1 or 3) of the incoming over-strand arc at crossing i.
  int over_incoming_position(std::size_t i) const { return trace_.over_incoming[i]; }
  int over_incoming_arc(std::size_t i) const { return crossings_[i][over_incoming_position(i)]; }
  int over_outgoing_arc(std::size_t i) const { return crossings_[i][4 - over_incoming_position(i)]; }

  const CrossingInfo& crossing_info(std::size_t i) const { return info_[i]; }
  std::span<const CrossingInfo> crossing_infos() const { return info_; }
  int writhe() const { return n_plus_ - n_minus_; }
  int n_plus() const { return n_plus_; }
  int n_minus() const { return n_minus_; }

  /// Labels used internally for crossingless circles: one past the largest arc, upward.
  int virtual_arc(int circle) const { return max_arc_ + 1 + circle; }
  int max_arc() const { return max_arc_; }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.crossingless_ == b.crossingless_;
  }

 private:
  std::vector<Crossing> crossings_;
  int crossingless_ = 0;
  TraceResult trace_;
  std::vector<CrossingInfo> info_;
  int num_components_ = 0;
  int n_plus_ = 0;
  int n_minus_ = 0;
  int max_arc_ = 0;
};

/// Parses whitespace-separated `X(a,b,c,d)` and `O` tokens; `#` starts a comment.
LinkDiagram parse_pd(std::string_view text);
std::string serialize_pd(const LinkDiagram& d);

struct CrossingData {
  std::vector<CrossingInfo> crossings;
  int writhe = 0;
  int n_plus = 0;
  int n_minus = 0;
};
CrossingData crossing_data(const LinkDiagram& d);

/// Symmetric m x m matrix of pairwise linking numbers (zero diagonal).
std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d);

/// Swaps over and under at crossing i.
LinkDiagram change_crossing(const LinkDiagram& d, std::size_t i);

/// Keeps only the listed components (0-based); arcs are spliced and relabeled 1..N.
LinkDiagram sublink(const LinkDiagram& d, std::span<const int> components);

/// Disjoint union; arcs of `b` are shifted above those of `a`.
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

/// Mirror image (every crossing changed).
LinkDiagram mirror(const LinkDiagram& d);

struct LinkTableEntry {
  std::string name;
  std::string pd;
};

/// Reads `name<TAB>pd` lines; blank lines and lines starting with `#` are skipped.
std::vector<LinkTableEntry> parse_link_table(std::string_view text);
std::vector<LinkTableEntry> read_link_table(const std::string& path);

}  // namespace linksplit
