#pragma once

#include <cstdint>
#include <vector>

#include "afc/affine.hpp"
#include "afc/tabloid.hpp"

namespace afc {

// True iff the balls {(i, w(i)) : residue of i in members} plus their
// (n, n)-translates form a southeast chain.
bool is_stream(const AffinePerm& w, const std::vector<int>& members);

// Greene-type invariant: parts from maximal total densities of disjoint
// streams, cross-checked against maximal disjoint southwest chains (computed
// over window_multiplier periods; 0 picks n). Exhaustive; guarded to n <= 8.
std::vector<int> shape_of(const AffinePerm& w, int window_multiplier = 0);

// w(i) < w(i+m) < ... < w(i+m(l-1)) < w(i)+n for every i in [1, m].
bool mod_chain_condition(const AffinePerm& w, const RectShape& shape);

// Mod-m threads increase within a period and m-blocks decrease.
bool in_left_cell_T(const AffinePerm& w, const RectShape& shape);

// The inverse window has increasing mod-m threads within a period and
// increasing m-blocks.
bool in_w0_R(const AffinePerm& w, const RectShape& shape);

// Diff_i(u) = sum_j ceil(u(i+1+jm)/n) - ceil(u(i+jm)/n), i in [1, m-1].
std::vector<int64_t> diff_vector(const AffinePerm& u, const RectShape& shape);

// Per-row alcove condition: fails exactly when every one of the l straddling
// inequalities on u holds. u plays the role of w^{-1}.
bool alcove_eq3_holds(const AffinePerm& u, const RectShape& shape, int i);

// Membership in the fundamental box: the inverse satisfies both monotonicity
// conditions and Diff = lch rowwise. Also evaluates the alcove variant and
// throws std::logic_error if the two characterizations disagree.
bool in_fundamental_box(const AffinePerm& w, const RectShape& shape);

// Inverse of the tabloid parametrization of the box: requires rectangular
// shape and m | charge(P); the result u satisfies relabel(u, T) = P.
AffinePerm fbox_from_tabloid(const Tabloid& p);

// The fundamental box, ordered by the canonical order of its tabloids.
std::vector<AffinePerm> enumerate_fundamental_box(const RectShape& shape);
// Cached inverse-side enumeration in the same order.
const std::vector<AffinePerm>& fundamental_box_inverses(const RectShape& shape);

// x = phi^k(u * w0 * v) with k in [0, m-1], u in the inverse box and
// in_w0_R(v); exhaustive over (k, u), uniqueness asserted.
struct CellDecomposition {
  int k;
  AffinePerm u;
  AffinePerm v;
};
CellDecomposition decompose(const AffinePerm& x, const RectShape& shape);

// Peels v in w0*R down to its fundamental-box base, collecting the block
// shift indices as a multiset (returned sorted ascending). Length additivity
// is asserted at every step.
struct Factorization {
  AffinePerm base;          // element of the fundamental box
  std::vector<int> shifts;  // multiset {1^d1, ..., (m-1)^d_{m-1}}
};
Factorization iterative_factorization(const AffinePerm& v, const RectShape& shape);

// The unique element of (S_m)^l sorting each m-block of w ascending.
AffinePerm block_sorter(const AffinePerm& w, const RectShape& shape);

}  // namespace afc
