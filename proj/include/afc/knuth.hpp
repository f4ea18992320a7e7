#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "afc/affine.hpp"

namespace afc {

// Left Knuth moves w -> s_k w with incomparable left descent sets.
std::vector<std::pair<int, AffinePerm>> left_knuth_neighbors(const AffinePerm& w);

struct KnuthGraph {
  std::vector<AffinePerm> vertices;               // BFS discovery order
  std::vector<std::tuple<int, int, int>> edges;   // (a, b, k), a < b in discovery order
};

// BFS closure under left Knuth moves. budget <= 0 derives a default from the
// class-size formula for rectangular shapes when n <= 8, else from the
// environment; throws when the closure exceeds it.
KnuthGraph left_knuth_class(const AffinePerm& w, int64_t budget = 0);

// Weight lattice reachable inside a right Knuth class at fixed Q: spanned by
// the vectors sum_i a_i 1_{m_i} with sum a_i m_i = 0 over the distinct
// transpose part sizes. Returns a basis (empty for rectangles).
std::vector<std::vector<int64_t>> monodromy_group(const std::vector<int>& partition);

struct FboxTheoremReport {
  bool pass = false;
  size_t class_size = 0;
  size_t box_size = 0;
  bool sets_equal = false;
  bool rotation_stable = false;  // phi^m maps the class onto itself
};

// Checks that the left Knuth class of w0 equals the inverse fundamental box
// times w0, with the predicted cardinality n!/(m (l!)^m).
FboxTheoremReport verify_fbox_theorem(const RectShape& shape);

std::string to_dot(const KnuthGraph& graph, const std::string& name);
std::string dot_file_name(const RectShape& shape);  // lkc_<l>x<m>.dot

}  // namespace afc
