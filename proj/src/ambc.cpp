#include "afc/ambc.hpp"

#include <algorithm>
#include <stdexcept>

#include "afc/cells.hpp"

namespace afc {

AmbcTriple make_triple(Tabloid p, Tabloid q, std::vector<int64_t> rho) {
  if (p.modulus() != q.modulus() || p.shape() != q.shape())
    throw std::domain_error("triple tabloids must share one shape");
  if (rho.size() != static_cast<size_t>(p.row_count()))
    throw std::domain_error("weight length must match the number of rows");
  int64_t sum = 0;
  for (int64_t r : rho) sum += r;
  if (sum != 0) throw std::domain_error("weight entries must sum to zero");
  return AmbcTriple{std::move(p), std::move(q), std::move(rho)};
}

std::vector<int64_t> centralized_weight(const AmbcTriple& t) {
  auto sp = symmetrized_offset(t.P);
  auto sq = symmetrized_offset(t.Q);
  std::vector<int64_t> out(t.rho.size());
  for (size_t i = 0; i < t.rho.size(); ++i) out[i] = t.rho[i] - sp[i] + sq[i];
  return out;
}

namespace {

// Half-open segment ranges of equal part sizes.
std::vector<std::pair<size_t, size_t>> segments(const std::vector<int>& shape) {
  std::vector<std::pair<size_t, size_t>> segs;
  size_t start = 0;
  for (size_t i = 1; i <= shape.size(); ++i) {
    if (i == shape.size() || shape[i] != shape[start]) {
      segs.emplace_back(start, i);
      start = i;
    }
  }
  return segs;
}

}  // namespace

bool is_dominant(const AmbcTriple& t) {
  auto w = centralized_weight(t);
  for (auto [a, b] : segments(t.P.shape()))
    for (size_t i = a + 1; i < b; ++i)
      if (w[i - 1] > w[i]) return false;
  return true;
}

AmbcTriple dominant_representative(const AmbcTriple& t) {
  auto w = centralized_weight(t);
  for (auto [a, b] : segments(t.P.shape()))
    std::stable_sort(w.begin() + static_cast<ptrdiff_t>(a),
                     w.begin() + static_cast<ptrdiff_t>(b));
  auto sp = symmetrized_offset(t.P);
  auto sq = symmetrized_offset(t.Q);
  std::vector<int64_t> rho(w.size());
  for (size_t i = 0; i < w.size(); ++i) rho[i] = w[i] + sp[i] - sq[i];
  return AmbcTriple{t.P, t.Q, std::move(rho)};
}

AmbcTriple invert_triple(const AmbcTriple& t) {
  std::vector<int64_t> neg(t.rho.size());
  for (size_t i = 0; i < t.rho.size(); ++i) neg[i] = -t.rho[i];
  return dominant_representative(AmbcTriple{t.Q, t.P, std::move(neg)});
}

namespace {

std::vector<int64_t> delta_vector(const Tabloid& x, int64_t k) {
  const int n = x.modulus();
  std::vector<int64_t> d(static_cast<size_t>(x.row_count()), 0);
  for (int i = 0; i < x.row_count(); ++i)
    for (int e : x.rows()[static_cast<size_t>(i)])
      if (e >= n - k + 1) ++d[static_cast<size_t>(i)];
  return d;
}

}  // namespace

AmbcTriple rotate_triple(const AmbcTriple& t, int64_t k) {
  const int n = t.P.modulus();
  int64_t kk = pos_mod(k, n);
  auto dp = delta_vector(t.P, kk);
  auto dq = delta_vector(t.Q, kk);
  std::vector<int64_t> rho(t.rho.size());
  for (size_t i = 0; i < rho.size(); ++i) rho[i] = t.rho[i] + dp[i] - dq[i];
  return make_triple(t.P.shifted(kk), t.Q.shifted(kk), std::move(rho));
}

AmbcTriple knuth_transport(const AmbcTriple& t, int i) {
  auto moved = knuth_move(t.P, i);
  if (!moved)
    throw std::domain_error("not a valid tabloid Knuth move at this residue");
  std::vector<int64_t> rho = t.rho;
  const int n = t.P.modulus();
  if (i == n) {
    int row_n = t.P.row_of(n);
    int row_1 = t.P.row_of(1);
    rho[static_cast<size_t>(row_n - 1)] += 1;
    rho[static_cast<size_t>(row_1 - 1)] -= 1;
  }
  return make_triple(*moved, t.Q, std::move(rho));
}

AmbcTriple phi_block_sorted(const AffinePerm& w, const RectShape& shape) {
  if (w.period() != shape.n)
    throw std::domain_error("window period does not match the shape");
  if (!in_left_cell_T(w, shape))
    throw std::domain_error(
        "window does not satisfy the block-sorted hypotheses");
  const int m = shape.m, l = shape.l, n = shape.n;
  std::vector<std::vector<int>> rows(static_cast<size_t>(m));
  std::vector<int64_t> rho(static_cast<size_t>(m), 0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= l; ++j) {
      int idx = j * m + 1 - i;
      rows[static_cast<size_t>(i - 1)].push_back(w.residue_at(idx));
      rho[static_cast<size_t>(i - 1)] += ceil_div(w(idx), n);
    }
    rho[static_cast<size_t>(i - 1)] -= l;
  }
  return make_triple(Tabloid::from_rows(n, std::move(rows)),
                     t_lambda(partition_of(shape)), std::move(rho));
}

AmbcTriple phi_rect(const AffinePerm& x, const RectShape& shape) {
  auto dec = decompose(x, shape);
  AffinePerm w0 = w0_lambda(shape);
  AmbcTriple left = phi_block_sorted(dec.u * w0, shape);
  AmbcTriple right = invert_triple(phi_block_sorted(dec.v.inverse() * w0, shape));
  std::vector<int64_t> rho(left.rho.size());
  for (size_t i = 0; i < rho.size(); ++i) rho[i] = left.rho[i] + right.rho[i];
  AmbcTriple out = rotate_triple(
      make_triple(left.P, right.Q, std::move(rho)), dec.k);
  detail::internal_check(is_dominant(out), "phi produced a non-dominant weight");
  return out;
}

int64_t fiber_size(const AffinePerm& x, const RectShape& shape) {
  auto w = centralized_weight(phi_rect(x, shape));
  detail::internal_check(std::is_sorted(w.begin(), w.end()),
                         "centralized weight of an image must be sorted");
  int64_t result = 1;
  int seen = 0;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    // multiply binomial(seen + run, run) into the multinomial
    int run = static_cast<int>(j - i);
    for (int t = 1; t <= run; ++t) result = result * (seen + t) / t;
    seen += run;
    i = j;
  }
  return result;
}

}  // namespace afc

size_t std::hash<afc::AmbcTriple>::operator()(const afc::AmbcTriple& t) const {
  size_t h = std::hash<afc::Tabloid>()(t.P);
  h = h * 1000003u ^ std::hash<afc::Tabloid>()(t.Q);
  for (int64_t r : t.rho)
    h ^= static_cast<size_t>(r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
