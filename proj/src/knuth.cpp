#include "afc/knuth.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "afc/cells.hpp"

namespace afc {

namespace {

bool incomparable(const std::vector<int>& a, const std::vector<int>& b) {
  bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
  bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
  return !a_in_b && !b_in_a;
}

int64_t expected_class_size(const RectShape& shape) {
  // n! / (m (l!)^m)
  int64_t num = 1;
  for (int i = 2; i <= shape.n; ++i) num *= i;
  int64_t lfact = 1;
  for (int i = 2; i <= shape.l; ++i) lfact *= i;
  for (int i = 0; i < shape.m; ++i) num /= lfact;
  return num / shape.m;
}

}  // namespace

std::vector<std::pair<int, AffinePerm>> left_knuth_neighbors(const AffinePerm& w) {
  const int n = w.period();
  std::vector<std::pair<int, AffinePerm>> out;
  auto lw = left_descents(w);
  for (int k = 0; k < n; ++k) {
    AffinePerm sw = simple_reflection(n, k) * w;
    if (incomparable(lw, left_descents(sw))) out.emplace_back(k, std::move(sw));
  }
  return out;
}

KnuthGraph left_knuth_class(const AffinePerm& w, int64_t budget) {
  const int n = w.period();
  if (budget <= 0) {
    budget = detail::env_budget(1'000'000);
    if (n <= 8) {
      auto parts = shape_of(w);
      bool rect = std::all_of(parts.begin(), parts.end(),
                              [&](int p) { return p == parts[0]; });
      if (rect)
        budget = 10 * expected_class_size(
                          rect_shape(parts[0], static_cast<int>(parts.size())));
    }
  }

  KnuthGraph g;
  std::unordered_map<AffinePerm, int> index;
  g.vertices.push_back(w);
  index.emplace(w, 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    AffinePerm current = g.vertices[static_cast<size_t>(at)];
    for (auto& [k, neighbor] : left_knuth_neighbors(current)) {
      auto it = index.find(neighbor);
      int to;
      if (it == index.end()) {
        to = static_cast<int>(g.vertices.size());
        if (to >= budget)
          throw std::domain_error("Knuth class closure exceeded the budget");
        g.vertices.push_back(neighbor);
        index.emplace(std::move(neighbor), to);
        queue.push_back(to);
      } else {
        to = it->second;
      }
      if (at < to) g.edges.emplace_back(at, to, k);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<std::vector<int64_t>> monodromy_group(const std::vector<int>& partition) {
  if (partition.empty()) throw std::domain_error("partition must be nonempty");
  const size_t rows = partition.size();
  // Distinct part sizes of the transpose, descending.
  std::vector<int> sizes;  // transpose parts: column heights
  for (int j = 1; j <= partition[0]; ++j) {
    int h = 0;
    for (int p : partition)
      if (p >= j) ++h;
    sizes.push_back(h);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  // Integer kernel of the row (m_1, ..., m_k), carried back through the
  // indicator vectors 1_{m_i}.
  std::vector<std::vector<int64_t>> basis;
  if (sizes.size() < 2) return basis;
  std::vector<int64_t> coeff{1};  // combination reaching gcd of the prefix
  int64_t g = sizes[0];
  for (size_t i = 1; i < sizes.size(); ++i) {
    int64_t mi = sizes[i];
    std::vector<int64_t> a(sizes.size(), 0);
    for (size_t t = 0; t < i; ++t) a[t] = coeff[t] * (mi / std::gcd(g, mi));
    a[i] = -g / std::gcd(g, mi);
    std::vector<int64_t> vec(rows, 0);
    for (size_t t = 0; t <= i; ++t)
      for (int r = 0; r < sizes[t]; ++r) vec[static_cast<size_t>(r)] += a[t];
    basis.push_back(std::move(vec));

    // Extend the gcd combination.
    int64_t old_g = g;
    g = std::gcd(g, mi);
    // x*old_g + y*mi = g via the extended algorithm on the pair.
    int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1, a0 = old_g, a1 = mi;
    while (a1 != 0) {
      int64_t q = a0 / a1;
      std::tie(a0, a1) = std::make_pair(a1, a0 - q * a1);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
      std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    detail::internal_check(a0 == g, "gcd bookkeeping drifted");
    for (auto& c : coeff) c *= x0;
    coeff.push_back(y0);
  }
  return basis;
}

FboxTheoremReport verify_fbox_theorem(const RectShape& shape) {
  FboxTheoremReport report;
  AffinePerm w0 = w0_lambda(shape);
  KnuthGraph g = left_knuth_class(w0);
  report.class_size = g.vertices.size();

  std::vector<AffinePerm> predicted;
  for (const AffinePerm& u : fundamental_box_inverses(shape))
    predicted.push_back(u * w0);
  report.box_size = predicted.size();

  std::unordered_map<AffinePerm, char> seen;
  for (const AffinePerm& v : g.vertices) seen.emplace(v, 1);
  report.sets_equal = predicted.size() == g.vertices.size() &&
                      std::all_of(predicted.begin(), predicted.end(),
                                  [&](const AffinePerm& p) { return seen.count(p) > 0; });

  report.rotation_stable = true;
  for (const AffinePerm& v : g.vertices)
    report.rotation_stable =
        report.rotation_stable && seen.count(rotate(v, shape.m)) > 0;

  report.pass = report.sets_equal && report.rotation_stable &&
                static_cast<int64_t>(report.class_size) == expected_class_size(shape);
  return report;
}

std::string to_dot(const KnuthGraph& graph, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  node [shape=box];\n";
  for (size_t i = 0; i < graph.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"[";
    const auto& win = graph.vertices[i].window();
    for (size_t j = 0; j < win.size(); ++j) {
      if (j) os << ",";
      os << win[j];
    }
    os << "]\"];\n";
  }
  for (const auto& [a, b, k] : graph.edges)
    os << "  v" << a << " -- v" << b << " [label=\"s" << k << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string dot_file_name(const RectShape& shape) {
  return "lkc_" + std::to_string(shape.l) + "x" + std::to_string(shape.m) + ".dot";
}

}  // namespace afc
