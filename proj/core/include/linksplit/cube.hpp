#pragma once

// Cube of resolutions: circles of each complete resolution, gradings of cube
// generators, cube and crossing signs, and the saddle maps of V = R[x]/(x^2).
//
// A generator is a pair (I, mono): I picks the resolution at every crossing,
// bit c of mono says circle c of I carries x. Monomial 1 has the higher q.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "linksplit/diagram.hpp"
#include "linksplit/field.hpp"
#include "linksplit/sparse_matrix.hpp"

namespace linksplit {

using Mask = std::uint64_t;

struct Resolution {
  Mask mask = 0;
  int num_circles = 0;
  /// Indexed by arc label, virtual arcs of crossingless circles included; slot 0 unused.
  std::vector<int> circle_of_arc;
  /// Minimal arc of each circle, ascending.
  std::vector<int> circle_min_arc;

  int circle_of(int arc) const { return circle_of_arc[arc]; }
};

/// At X(a,b,c,d) the 0-resolution joins a-b and c-d, the 1-resolution a-d and b-c.
Resolution resolve(const LinkDiagram& d, Mask mask);

/// (-1)^{#{k < i : I(k) = 1}}
inline int cube_sign(Mask mask, int i) {
  const Mask below = i >= 64 ? ~Mask{0} : ((Mask{1} << i) - 1);
  return (std::popcount(mask & below) & 1) ? -1 : 1;
}

struct Gradings {
  int h = 0;
  int l = 0;
  int q = 0;
  int g = 0;
  friend bool operator==(const Gradings&, const Gradings&) = default;
};

/// h = |I| - n_-, l = 2 #x - p(I) - writhe, q = h - l, g = (q - m) / 2.
/// Throws InvariantViolation when q - m is odd.
Gradings gradings(const LinkDiagram& d, int resolution_weight, int num_circles, int x_count);
Gradings gradings(const LinkDiagram& d, const Resolution& r, std::uint32_t mono);

enum class SaddleKind { Merge, Split };
enum class EdgeDirection { Forward, Reverse };

/// Saddle map between two resolutions differing at one crossing, on monomial masks.
struct EdgeMap {
  SaddleKind kind = SaddleKind::Merge;
  int crossing = 0;
  /// Merge: the two source circles and the target circle in first slot.
  /// Split: the source circle in first slot and the two target circles.
  std::array<int, 2> two{};
  int one = 0;
  /// Target circle of each untouched source circle, -1 for the saddle circles.
  std::vector<int> passive;

  /// Writes the images of `mono` (all with coefficient 1) and returns how many (0, 1 or 2).
  int apply(std::uint32_t mono, std::array<std::uint32_t, 2>& out) const;
};

/// Map from resolution `from` to resolution `to` (which differ exactly at `crossing`).
EdgeMap edge_map(const LinkDiagram& d, const Resolution& from, const Resolution& to, int crossing);

/// Forward: I -> I + {i} (merge m or split Delta). Reverse: the same saddle read
/// backwards, I + {i} -> I. Bit i of `lower` must be clear.
EdgeMap edge_map(const LinkDiagram& d, Mask lower, int crossing, EdgeDirection dir);

/// Matrix on the monomial bases, 2^{p(to)} x 2^{p(from)}.
template <Field F>
SparseMatrix<F> edge_map_matrix(const EdgeMap& e, int from_circles, int to_circles) {
  std::vector<std::tuple<Index, Index, F>> t;
  std::array<std::uint32_t, 2> out{};
  for (std::uint32_t mono = 0; mono < (1u << from_circles); ++mono) {
    const int k = e.apply(mono, out);
    for (int j = 0; j < k; ++j) t.emplace_back(out[j], mono, F::one());
  }
  return SparseMatrix<F>::from_triplets(std::size_t{1} << to_circles, std::size_t{1} << from_circles,
                                        std::move(t));
}

/// Where an arc leaves (tail, e(0)) and enters (head, e(1)) a crossing, with PD positions 0..3.
struct ArcEnds {
  int tail_crossing = -1;
  int tail_position = -1;
  int head_crossing = -1;
  int head_position = -1;
};

/// Indexed by arc label; slot 0 and unused labels are left default.
std::vector<ArcEnds> arc_ends(const LinkDiagram& d);

/// -1 when the arc is the over-strand at both ends or the under-strand at both ends.
inline int beta(const ArcEnds& e) {
  const bool upper0 = (e.tail_position & 1) != 0;
  const bool upper1 = (e.head_position & 1) != 0;
  return upper0 == upper1 ? -1 : 1;
}

using SignAssignment = std::vector<int>;

/// s(e(0)) s(e(1)) = beta(e) on every arc between crossings; +1 at the first
/// crossing of each connected piece of the diagram. Throws InconsistentSigns.
SignAssignment sign_assignment(const LinkDiagram& d);
bool is_sign_assignment(const LinkDiagram& d, const SignAssignment& s);

/// s(i) (w_over - w_under); zero at crossings of a component with itself.
template <Field F>
F weight_coeff(const LinkDiagram& d, std::size_t i, const SignAssignment& s, const std::vector<F>& w) {
  const auto& ci = d.crossing_info(i);
  if (!ci.mixed) return F::zero();
  const F diff = w[ci.over_component] - w[ci.under_component];
  return s[i] > 0 ? diff : -diff;
}

/// Component c gets the c-th element of the field enumeration.
template <Field F>
std::vector<F> default_weights(int m) {
  std::vector<F> w;
  w.reserve(m);
  for (int c = 0; c < m; ++c) w.push_back(F::enumerate(static_cast<std::size_t>(c)));
  return w;
}

}  // namespace linksplit
