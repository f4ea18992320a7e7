#include "afc/cells.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "afc/ambc.hpp"

namespace afc {

namespace {

void require_period(const AffinePerm& w, const RectShape& shape) {
  if (w.period() != shape.n)
    throw std::domain_error("window period does not match the shape");
}

void require_desk_scale(const RectShape& shape) {
  if (shape.n < 3)
    throw std::domain_error("cell machinery requires n >= 3");
}

bool mod_chain_ok(const AffinePerm& w, const RectShape& shape) {
  for (int i = 1; i <= shape.m; ++i) {
    for (int j = 1; j < shape.l; ++j)
      if (w(i + (j - 1) * shape.m) >= w(i + j * shape.m)) return false;
    if (w(i + (shape.l - 1) * shape.m) >= w(i) + shape.n) return false;
  }
  return true;
}

bool blocks_increasing(const AffinePerm& w, const RectShape& shape) {
  for (int j = 0; j < shape.l; ++j)
    for (int i = 1; i < shape.m; ++i)
      if (w(j * shape.m + i) >= w(j * shape.m + i + 1)) return false;
  return true;
}

bool blocks_decreasing(const AffinePerm& w, const RectShape& shape) {
  for (int j = 0; j < shape.l; ++j)
    for (int i = 1; i < shape.m; ++i)
      if (w(j * shape.m + i) <= w(j * shape.m + i + 1)) return false;
  return true;
}

bool inverse_side_monotone(const AffinePerm& u, const RectShape& shape) {
  return mod_chain_ok(u, shape) && blocks_increasing(u, shape);
}

std::vector<int64_t> lch_vector(const Tabloid& p) {
  std::vector<int64_t> v(static_cast<size_t>(p.row_count() - 1));
  for (int i = 1; i < p.row_count(); ++i)
    v[static_cast<size_t>(i - 1)] = local_charge(p, i);
  return v;
}

}  // namespace

bool is_stream(const AffinePerm& w, const std::vector<int>& members) {
  const int n = w.period();
  std::vector<int> rows = members;
  std::sort(rows.begin(), rows.end());
  for (size_t t = 0; t < rows.size(); ++t) {
    if (rows[t] < 1 || rows[t] > n)
      throw std::domain_error("stream members must be residues in [1, n]");
    if (t > 0 && rows[t] == rows[t - 1])
      throw std::domain_error("stream members must be distinct");
  }
  if (rows.empty()) return true;
  // Chain under the southeast order: columns increase along increasing rows
  // and the period wrap keeps the total column span below n.
  for (size_t t = 1; t < rows.size(); ++t)
    if (w(rows[t]) <= w(rows[t - 1])) return false;
  return w(rows.back()) < w(rows.front()) + n;
}

std::vector<int> shape_of(const AffinePerm& w, int window_multiplier) {
  const int n = w.period();
  if (n > 8)
    throw std::domain_error("exhaustive shape oracle is limited to n <= 8");
  const int width = window_multiplier <= 0 ? n : window_multiplier;

  const int full = (1 << n) - 1;
  std::vector<char> streamable(static_cast<size_t>(full) + 1, 0);
  for (int mask = 1; mask <= full; ++mask) {
    std::vector<int> members;
    for (int r = 1; r <= n; ++r)
      if (mask & (1 << (r - 1))) members.push_back(r);
    streamable[static_cast<size_t>(mask)] = is_stream(w, members) ? 1 : 0;
  }

  // Minimal number of disjoint streams partitioning each residue subset.
  std::vector<int> min_streams(static_cast<size_t>(full) + 1, n + 1);
  min_streams[0] = 0;
  for (int mask = 1; mask <= full; ++mask)
    for (int sub = mask; sub != 0; sub = (sub - 1) & mask)
      if (streamable[static_cast<size_t>(sub)])
        min_streams[static_cast<size_t>(mask)] =
            std::min(min_streams[static_cast<size_t>(mask)],
                     min_streams[static_cast<size_t>(mask ^ sub)] + 1);

  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; prev < n; ++i) {
    int best = 0;
    for (int mask = 0; mask <= full; ++mask)
      if (min_streams[static_cast<size_t>(mask)] <= i)
        best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
    parts.push_back(best - prev);
    detail::internal_check(best > prev, "stream densities failed to grow");
    detail::internal_check(parts.size() < 2 || parts[parts.size() - 2] >= parts.back(),
                           "stream densities are not concave");
    prev = best;
  }

  // Independent cross-check: maximal disjoint southwest chains over a finite
  // window, read off a row-insertion shape.
  std::vector<std::vector<int64_t>> rsk;
  for (int t = 1; t <= width * n; ++t) {
    int64_t x = w(t);
    size_t r = 0;
    while (true) {
      if (r == rsk.size()) {
        rsk.push_back({x});
        break;
      }
      auto it = std::upper_bound(rsk[r].begin(), rsk[r].end(), x);
      if (it == rsk[r].end()) {
        rsk[r].push_back(x);
        break;
      }
      std::swap(*it, x);
      ++r;
    }
  }
  for (int j = 1; j <= parts[0]; ++j) {
    int anti = 0;
    for (const auto& row : rsk)
      if (static_cast<int>(row.size()) >= j) ++anti;
    int expect = 0;
    for (int p : parts)
      if (p >= j) ++expect;
    detail::internal_check(anti == expect,
                           "stream and anti-stream shapes are not transpose "
                           "(bug or window too small)");
  }
  return parts;
}

bool mod_chain_condition(const AffinePerm& w, const RectShape& shape) {
  require_period(w, shape);
  return mod_chain_ok(w, shape);
}

bool in_left_cell_T(const AffinePerm& w, const RectShape& shape) {
  require_period(w, shape);
  return mod_chain_ok(w, shape) && blocks_decreasing(w, shape);
}

bool in_w0_R(const AffinePerm& w, const RectShape& shape) {
  require_period(w, shape);
  return inverse_side_monotone(w.inverse(), shape);
}

std::vector<int64_t> diff_vector(const AffinePerm& u, const RectShape& shape) {
  require_period(u, shape);
  std::vector<int64_t> d(static_cast<size_t>(shape.m - 1), 0);
  for (int i = 1; i < shape.m; ++i)
    for (int j = 0; j < shape.l; ++j)
      d[static_cast<size_t>(i - 1)] += ceil_div(u(i + 1 + j * shape.m), shape.n) -
                                       ceil_div(u(i + j * shape.m), shape.n);
  return d;
}

bool alcove_eq3_holds(const AffinePerm& u, const RectShape& shape, int i) {
  require_period(u, shape);
  if (i < 1 || i >= shape.m)
    throw std::domain_error("alcove condition index out of range");
  bool all_straddle = true;
  for (int j = 0; j < shape.l - 1 && all_straddle; ++j)
    all_straddle = u(i + 1 + j * shape.m) > u(i + (j + 1) * shape.m);
  if (all_straddle)
    all_straddle = u(i + 1 + (shape.l - 1) * shape.m) > u(i) + shape.n;
  return !all_straddle;
}

bool in_fundamental_box(const AffinePerm& w, const RectShape& shape) {
  require_period(w, shape);
  AffinePerm u = w.inverse();
  if (!inverse_side_monotone(u, shape)) return false;
  Tabloid p = relabel(u, t_lambda(partition_of(shape)));
  auto diff = diff_vector(u, shape);
  bool by_stats = true;
  for (int i = 1; i < shape.m; ++i) {
    bool row_eq = diff[static_cast<size_t>(i - 1)] == local_charge(p, i);
    detail::internal_check(row_eq == alcove_eq3_holds(u, shape, i),
                           "offset and alcove characterizations disagree");
    by_stats = by_stats && row_eq;
  }
  return by_stats;
}

AffinePerm fbox_from_tabloid(const Tabloid& p) {
  auto shape_parts = p.shape();
  const int m = p.row_count();
  const int l = shape_parts[0];
  for (int part : shape_parts)
    if (part != l)
      throw std::domain_error("fundamental box requires a rectangular shape");
  const int n = p.modulus();

  int64_t ch = charge(p);
  if (ch % m != 0)
    throw std::domain_error("tabloid charge is not divisible by the row count");

  int64_t prefix = 0;
  int64_t total = 0;
  for (int i = 1; i < m; ++i) total += local_charge(p, i);
  int64_t e = total - ch / m;

  std::vector<int64_t> win(static_cast<size_t>(n));
  for (int i = 1; i <= m; ++i) {
    if (i > 1) prefix += local_charge(p, i - 1);
    for (int j = 0; j < l; ++j)
      win[static_cast<size_t>(i + j * m - 1)] = p.entry(i, j + 1 - e + prefix);
  }
  AffinePerm u = AffinePerm::from_window(std::move(win));
  detail::internal_check(relabel(u, t_lambda(shape_parts)) == p,
                         "box window does not reproduce its tabloid");
  return u;
}

namespace {

struct FboxCache {
  std::vector<AffinePerm> inverses;   // elements of the inverse box
  std::vector<AffinePerm> box;        // their inverses, same order
  std::vector<AffinePerm> w0_box;     // w0 * box[i], for the decomposition scan
};

const FboxCache& fbox_cache(const RectShape& shape) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FboxCache>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(shape.l, shape.m);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  auto entry = std::make_unique<FboxCache>();
  AffinePerm w0 = w0_lambda(shape);
  for (const Tabloid& p : enumerate_tabloids(partition_of(shape))) {
    if (charge(p) % shape.m != 0) continue;
    AffinePerm u = fbox_from_tabloid(p);
    AffinePerm f = u.inverse();
    entry->inverses.push_back(u);
    entry->box.push_back(f);
    entry->w0_box.push_back(w0 * f);
  }
  auto [pos, inserted] = cache.emplace(key, std::move(entry));
  (void)inserted;
  return *pos->second;
}

}  // namespace

std::vector<AffinePerm> enumerate_fundamental_box(const RectShape& shape) {
  require_desk_scale(shape);
  return fbox_cache(shape).box;
}

const std::vector<AffinePerm>& fundamental_box_inverses(const RectShape& shape) {
  require_desk_scale(shape);
  return fbox_cache(shape).inverses;
}

CellDecomposition decompose(const AffinePerm& x, const RectShape& shape) {
  require_desk_scale(shape);
  require_period(x, shape);
  const FboxCache& cache = fbox_cache(shape);

  int found = 0;
  CellDecomposition out{0, AffinePerm::identity(shape.n), AffinePerm::identity(shape.n)};
  for (int k = 0; k < shape.m; ++k) {
    AffinePerm xk = rotate(x, -k);
    for (size_t idx = 0; idx < cache.w0_box.size(); ++idx) {
      AffinePerm v = cache.w0_box[idx] * xk;
      if (inverse_side_monotone(v.inverse(), shape)) {
        ++found;
        detail::internal_check(found == 1, "cell decomposition is not unique");
        out = CellDecomposition{k, cache.inverses[idx], std::move(v)};
      }
    }
  }
  if (found == 0)
    throw std::domain_error("window is not in the rectangular two-sided cell");
  return out;
}

Factorization iterative_factorization(const AffinePerm& v, const RectShape& shape) {
  require_desk_scale(shape);
  if (!in_w0_R(v, shape))
    throw std::domain_error("factorization input must satisfy the orbit conditions");

  Tabloid t_base = t_lambda(partition_of(shape));
  AffinePerm y = v.inverse();

  auto gaps = [&](const AffinePerm& u) {
    auto diff = diff_vector(u, shape);
    auto lch = lch_vector(relabel(u, t_base));
    std::vector<int64_t> d(diff.size());
    for (size_t i = 0; i < diff.size(); ++i) {
      d[i] = diff[i] - lch[i];
      detail::internal_check(d[i] >= 0, "offset gap became negative");
    }
    return d;
  };

  std::vector<int> expected;
  {
    auto d = gaps(y);
    for (int i = 1; i < shape.m; ++i)
      for (int64_t c = 0; c < d[static_cast<size_t>(i - 1)]; ++c)
        expected.push_back(i);
  }

  std::vector<int> shifts;
  while (true) {
    auto d = gaps(y);
    int k = 0;
    for (int i = shape.m - 1; i >= 1; --i)
      if (d[static_cast<size_t>(i - 1)] > 0) {
        k = i;
        break;
      }
    if (k == 0) break;
    int64_t before = length(y);
    y = rotate(y * w_k(shape, k), -k);
    detail::internal_check(
        before == length(y) + int64_t(shape.l) * (shape.m - k) * k,
        "length additivity failed while peeling");
    shifts.push_back(k);
  }

  AffinePerm base = y.inverse();
  detail::internal_check(in_fundamental_box(base, shape),
                         "peeling did not terminate in the fundamental box");
  std::sort(shifts.begin(), shifts.end());
  detail::internal_check(shifts == expected,
                         "peeled multiset differs from the offset gaps");
  return Factorization{std::move(base), std::move(shifts)};
}

AffinePerm block_sorter(const AffinePerm& w, const RectShape& shape) {
  require_period(w, shape);
  std::vector<int64_t> win(static_cast<size_t>(shape.n));
  for (int j = 0; j < shape.l; ++j) {
    std::vector<int> idx(static_cast<size_t>(shape.m));
    std::iota(idx.begin(), idx.end(), 1);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return w(j * shape.m + a) < w(j * shape.m + b);
    });
    for (int t = 1; t <= shape.m; ++t)
      win[static_cast<size_t>(j * shape.m + t - 1)] =
          j * shape.m + idx[static_cast<size_t>(t - 1)];
  }
  return AffinePerm::from_window(std::move(win));
}

}  // namespace afc
