#pragma once

// The filtered complex C(D, w, s) with total differential d = d0 + d1.
//
// d0 is the Khovanov differential along cube edges I -> I + {i}; d1 runs each
// edge backwards, scaled by s(i) (w_over - w_under). d raises l by one; d0
// keeps g and d1 lowers it by one.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "linksplit/cube.hpp"
#include "linksplit/diagram.hpp"
#include "linksplit/field.hpp"
#include "linksplit/sparse_matrix.hpp"

namespace linksplit {

inline constexpr std::size_t kMaxComplexCrossings = 24;

/// All resolutions of a diagram with the offset of each one in the generator list.
struct Cube {
  std::vector<Resolution> resolutions;  // indexed by mask
  std::vector<Index> offset;            // size 2^n + 1

  static Cube enumerate(const LinkDiagram& d);
  std::size_t num_generators() const { return offset.back(); }
  Index index_of(Mask I, std::uint32_t mono) const { return offset[I] + mono; }
};

struct Generator {
  Mask resolution = 0;
  std::uint32_t monomial = 0;
  Gradings grading;
};

template <Field F>
struct FilteredComplex {
  LinkDiagram diagram;
  std::vector<F> weights;
  SignAssignment signs;
  Cube cube;
  std::vector<Generator> generators;  // ascending resolution, then monomial
  SparseMatrix<F> differential;       // column j holds d(generator j)
  int m = 0;
  int n_plus = 0;
  int n_minus = 0;
  int writhe = 0;
  int g_min = 0;
  int g_max = 0;

  std::size_t size() const { return generators.size(); }
};

/// Throws WeightFieldMismatch when the weight count differs from the component count.
template <Field F>
FilteredComplex<F> build(const LinkDiagram& d, const std::vector<F>& weights, const SignAssignment& s);

/// Uses the sign assignment computed by `sign_assignment`.
template <Field F>
FilteredComplex<F> build(const LinkDiagram& d, const std::vector<F>& weights);

struct DSquaredCheck {
  bool ok = true;
  std::optional<Index> column;  // first column of d*d that is nonzero
};

template <Field F>
DSquaredCheck verify_d_squared(const FilteredComplex<F>& c);

/// Multiplication by x on the circle through `arc`, resolution by resolution.
template <Field F>
struct BasepointAction {
  int arc = 0;
  SparseMatrix<F> matrix;
};

template <Field F>
BasepointAction<F> basepoint_action(const FilteredComplex<F>& c, int arc);

/// Minimal arc of each component (virtual arcs for crossingless circles).
std::vector<int> default_basepoints(const LinkDiagram& d);

/// Ranks of i_* H(F^k C) for ascending k, from the first nonzero one up to the full rank.
template <Field F>
std::vector<std::size_t> filtration_rank_profile(const FilteredComplex<F>& c);

/// True when total homology has dimension 2^m and X_1 ... X_m acts nontrivially on it.
template <Field F>
bool free_module_test(const FilteredComplex<F>& c, const std::vector<int>& basepoints);

template <Field F>
bool free_module_test(const FilteredComplex<F>& c) {
  return free_module_test(c, default_basepoints(c.diagram));
}

/// Rank of H(C, d) in each l-degree.
template <Field F>
std::map<int, std::size_t> total_homology(const FilteredComplex<F>& c);

/// Induced maps of two chain maps agree on homology: rank([B | (A - A') Z]) = rank(B).
template <Field F>
bool same_map_on_homology(const FilteredComplex<F>& c, const SparseMatrix<F>& a, const SparseMatrix<F>& b);

}  // namespace linksplit
