#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "afc/affine.hpp"
#include "afc/tabloid.hpp"

namespace afc {

// Image of the matrix ball correspondence: insertion tabloid P, recording
// tabloid Q of the same shape, weight vector rho with sum 0.
struct AmbcTriple {
  Tabloid P;
  Tabloid Q;
  std::vector<int64_t> rho;
  bool operator==(const AmbcTriple&) const = default;
};

AmbcTriple make_triple(Tabloid p, Tabloid q, std::vector<int64_t> rho);

// rho - s(P) + s(Q).
std::vector<int64_t> centralized_weight(const AmbcTriple& t);

// Segmentwise weakly increasing centralized weight (segments = runs of equal
// part sizes).
bool is_dominant(const AmbcTriple& t);
AmbcTriple dominant_representative(const AmbcTriple& t);

// Triple of the inverse permutation: (Q, P, dominant representative of -rho).
AmbcTriple invert_triple(const AmbcTriple& t);

// Transport along phi^k: (P+k, Q+k, rho + delta^k(P) - delta^k(Q)).
AmbcTriple rotate_triple(const AmbcTriple& t, int64_t k);

// Transport along a left Knuth move exchanging residues i and i+1 in P.
// Q is unchanged; rho moves by one unit between the rows of n and 1 when the
// exchanged pair is (n, 1).
AmbcTriple knuth_transport(const AmbcTriple& t, int i);

// Closed form of the correspondence on windows whose mod-m threads increase
// within one period and whose m-blocks decrease; the recording tabloid is
// the column filling.
AmbcTriple phi_block_sorted(const AffinePerm& w, const RectShape& shape);

// The correspondence on the rectangular two-sided cell, computed through the
// (k, u, v) decomposition; rejects inputs outside the cell. Requires n >= 3.
AmbcTriple phi_rect(const AffinePerm& x, const RectShape& shape);

// Inverse correspondence on rectangular triples, via the component model:
// psi = rel_pos . theta_big_inverse. alpha_max < 0 picks a default bound.
AffinePerm psi_rect(const AmbcTriple& t, const RectShape& shape,
                    int alpha_max = -1);

// Number of triples mapping to x under psi: the multinomial counting distinct
// rearrangements of the centralized weight.
int64_t fiber_size(const AffinePerm& x, const RectShape& shape);

}  // namespace afc

template <>
struct std::hash<afc::AmbcTriple> {
  size_t operator()(const afc::AmbcTriple& t) const;
};
