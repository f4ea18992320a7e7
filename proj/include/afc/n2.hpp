#pragma once

#include <array>
#include <vector>

#include "afc/ambc.hpp"

namespace afc {

// Closed-form data for n = 2, where the cell machinery is replaced by
// explicit one-parameter families.
struct N2Entry {
  AffinePerm w;
  AmbcTriple triple;
};

struct N2PairEntry {
  AffinePerm r;       // relative position of the component pair
  AmbcTriple theta;   // its image under the pair bijection
};

struct N2Fixture {
  // Correspondence families, indexed by k >= 0:
  //   0: [2k+2, 1-2k]   1: [-1-2k, 4+2k]   2: [2k+1, 2-2k] (k >= 1)
  //   3: [-2k, 3+2k]
  std::array<std::vector<N2Entry>, 4> families;
  // Component-pair tables, indexed by k in [0, kmax]:
  //   (C0, C_{2k}), (C0, C_{2k+1}), (C1, C_{2k}), (C1, C_{2k+1})
  std::array<std::vector<N2PairEntry>, 4> pairs;
};

N2Fixture n2_tables(int kmax);

}  // namespace afc
