#pragma once

#include <cstdint>
#include <vector>

#include "afc/ambc.hpp"
#include "afc/cells.hpp"

namespace afc {

// Name of an irreducible fiber component F^c(Y_w). Normalized labels have
// w in the fundamental box and c in N^m with min 0; general integer c is
// allowed before normalization.
struct ComponentLabel {
  RectShape shape;
  AffinePerm w;
  std::vector<int64_t> c;
};

ComponentLabel make_label(const RectShape& shape, AffinePerm w,
                          std::vector<int64_t> c);

// Pulls the all-ones direction out of c and compensates by rotating w; the
// result satisfies the label invariants or throws.
ComponentLabel normalize(const ComponentLabel& label);

// F^t action on a label (t need not sum to zero); result is normalized.
ComponentLabel translate(const ComponentLabel& label, const std::vector<int64_t>& t);

// Canonical representative of a pair of components modulo simultaneous
// translations.
struct PairRep {
  RectShape shape;
  int k = 0;        // first label is F^{1_k}(Y_{w1})
  AffinePerm w1;
  std::vector<int64_t> c;  // second label is F^c(Y_{w2}), min(c) = 0
  AffinePerm w2;
  bool operator==(const PairRep&) const = default;
};

PairRep orbit_rep_pair(const ComponentLabel& c1, const ComponentLabel& c2);

// The orbit piece containing F^c(Y_w): the nested block-shift product over
// the multiset read off the sorted c.
AffinePerm orbit_of_label(const ComponentLabel& label);

// Relative position of two components, through the orbit product.
AffinePerm rel_pos(const PairRep& pair);
AffinePerm rel_pos(const ComponentLabel& c1, const ComponentLabel& c2);

// Closed-formula triple for the relative position; equals
// phi_rect(rel_pos(pair)).
AmbcTriple rel_pos_triple(const PairRep& pair);
AmbcTriple rel_pos_triple(const ComponentLabel& c1, const ComponentLabel& c2);

// Component -> tabloid bijection (modulo translations).
Tabloid theta(const ComponentLabel& label);

// How the weight coordinate of theta_big reads (c - 1_k): as the tuple
// written backwards (the default, the bijective reading), or sorted
// descending (kept for comparison).
enum class RevMode { kTupleReverse, kSortDescending };

// Pair -> triple bijection; dominant_representative of it recovers
// rel_pos_triple.
AmbcTriple theta_big(const PairRep& pair, RevMode mode = RevMode::kTupleReverse);

// Inverse of theta_big by solving for (k, w1, c, w2); alpha_max < 0 picks a
// bound from the centralized weight. Throws if no candidate fits the bound.
PairRep theta_big_inverse(const AmbcTriple& t, const RectShape& shape,
                          int alpha_max = -1,
                          RevMode mode = RevMode::kTupleReverse);

// Number of components in the orbit piece of v (in_w0_R required): the index
// of the parabolic fixed by the rowwise alcove conditions.
int64_t num_components_in_orbit(const AffinePerm& v, const RectShape& shape);

// Equality of relative positions of two ordered pairs, decided by the
// translation-action criteria alone.
bool pairs_equivalent(const ComponentLabel& c1, const ComponentLabel& c2,
                      const ComponentLabel& d1, const ComponentLabel& d2);

}  // namespace afc
