#include "afc/tabloid.hpp"

#include <algorithm>
#include <stdexcept>

namespace afc {

Tabloid Tabloid::from_rows(int n, std::vector<std::vector<int>> rows) {
  if (n < 1) throw std::domain_error("tabloid modulus must be positive");
  if (rows.empty()) throw std::domain_error("tabloid must have at least one row");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  size_t total = 0;
  for (auto& row : rows) {
    if (row.empty()) throw std::domain_error("tabloid rows must be nonempty");
    for (int e : row) {
      if (e < 1 || e > n)
        throw std::domain_error("tabloid entries must be residues in [1, n]");
      if (seen[static_cast<size_t>(e - 1)])
        throw std::domain_error("tabloid entries must be distinct residues");
      seen[static_cast<size_t>(e - 1)] = 1;
    }
    total += row.size();
    std::sort(row.begin(), row.end());
  }
  if (total != static_cast<size_t>(n))
    throw std::domain_error("tabloid rows must partition the residues [1, n]");
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() > rows[i - 1].size())
      throw std::domain_error("tabloid shape must be a partition");
  return Tabloid(n, std::move(rows));
}

std::vector<int> Tabloid::shape() const {
  std::vector<int> s;
  s.reserve(rows_.size());
  for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
  return s;
}

int Tabloid::row_of(int residue) const {
  int r = static_cast<int>(pos_mod(residue - 1, n_)) + 1;
  for (size_t i = 0; i < rows_.size(); ++i)
    for (int e : rows_[i])
      if (e == r) return static_cast<int>(i) + 1;
  detail::fail_internal("tabloid rows do not cover a residue");
}

int64_t Tabloid::entry(int i, int64_t j) const {
  if (i < 1 || i > row_count()) throw std::domain_error("tabloid row index out of range");
  const auto& row = rows_[static_cast<size_t>(i - 1)];
  int64_t len = static_cast<int64_t>(row.size());
  int64_t q = floor_div(j - 1, len);
  int64_t r = j - 1 - q * len;
  return row[static_cast<size_t>(r)] + q * n_;
}

Tabloid Tabloid::shifted(int64_t k) const {
  std::vector<std::vector<int>> rows = rows_;
  for (auto& row : rows)
    for (int& e : row) e = static_cast<int>(pos_mod(e - 1 + k, n_)) + 1;
  return from_rows(n_, std::move(rows));
}

Tabloid Tabloid::relabeled(const std::vector<int>& sigma) const {
  if (sigma.size() != static_cast<size_t>(n_))
    throw std::domain_error("relabeling permutation has wrong size");
  std::vector<char> seen(static_cast<size_t>(n_), 0);
  for (int v : sigma) {
    if (v < 1 || v > n_ || seen[static_cast<size_t>(v - 1)])
      throw std::domain_error("relabeling map is not a permutation of the residues");
    seen[static_cast<size_t>(v - 1)] = 1;
  }
  std::vector<std::vector<int>> rows = rows_;
  for (auto& row : rows)
    for (int& e : row) e = sigma[static_cast<size_t>(e - 1)];
  return from_rows(n_, std::move(rows));
}

Tabloid t_lambda(const std::vector<int>& partition) {
  if (partition.empty()) throw std::domain_error("partition must be nonempty");
  int n = 0;
  for (size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] < 1) throw std::domain_error("partition parts must be positive");
    if (i > 0 && partition[i] > partition[i - 1])
      throw std::domain_error("partition parts must be weakly decreasing");
    n += partition[i];
  }
  std::vector<std::vector<int>> rows(partition.size());
  int next = 1;
  for (int col = 1; col <= partition[0]; ++col)
    for (size_t i = 0; i < partition.size(); ++i)
      if (partition[i] >= col) rows[i].push_back(next++);
  return Tabloid::from_rows(n, std::move(rows));
}

Tabloid relabel(const AffinePerm& w, const Tabloid& x) {
  if (w.period() != x.modulus())
    throw std::domain_error("permutation and tabloid moduli differ");
  return x.relabeled(w.residue_window());
}

std::vector<int> tau_invariant(const Tabloid& x) {
  std::vector<int> out;
  const int n = x.modulus();
  for (int i = 1; i <= n; ++i)
    if (x.row_of(i) < x.row_of(i % n + 1)) out.push_back(i);
  return out;
}

int64_t local_charge(const Tabloid& x, int i) {
  if (i < 1 || i >= x.row_count())
    throw std::domain_error("local charge row index out of range");
  auto shape = x.shape();
  int li = shape[static_cast<size_t>(i - 1)];
  if (li != shape[static_cast<size_t>(i)]) return 0;
  // Minimal gamma with X_{i+1, j+gamma} >= X_{i,j} for all j; always in [0, li].
  for (int64_t gamma = 0;; ++gamma) {
    bool ok = true;
    for (int j = 1; j <= li && ok; ++j)
      ok = x.entry(i + 1, j + gamma) >= x.entry(i, j);
    if (ok) return gamma;
    detail::internal_check(gamma <= li, "local charge exceeded its bound");
  }
}

std::vector<int64_t> symmetrized_offset(const Tabloid& x) {
  auto shape = x.shape();
  std::vector<int64_t> s(shape.size(), 0);
  for (size_t i = 1; i < shape.size(); ++i) {
    if (shape[i] == shape[i - 1])
      s[i] = s[i - 1] + local_charge(x, static_cast<int>(i));
  }
  return s;
}

int64_t charge(const Tabloid& x) {
  int64_t c = 0;
  for (int i = 1; i < x.row_count(); ++i) c += i * local_charge(x, i);
  return c;
}

std::optional<Tabloid> knuth_move(const Tabloid& x, int i) {
  const int n = x.modulus();
  if (i < 1 || i > n) throw std::domain_error("knuth move index out of range");
  int a = i, b = i % n + 1;
  std::vector<int> sigma(static_cast<size_t>(n));
  for (int r = 1; r <= n; ++r) sigma[static_cast<size_t>(r - 1)] = r;
  std::swap(sigma[static_cast<size_t>(a - 1)], sigma[static_cast<size_t>(b - 1)]);
  Tabloid y = x.relabeled(sigma);
  auto ta = tau_invariant(x);
  auto tb = tau_invariant(y);
  bool a_in_b = std::includes(tb.begin(), tb.end(), ta.begin(), ta.end());
  bool b_in_a = std::includes(ta.begin(), ta.end(), tb.begin(), tb.end());
  if (a_in_b || b_in_a) return std::nullopt;
  return y;
}

int64_t tabloid_count(const std::vector<int>& partition) {
  int n = 0;
  for (int p : partition) n += p;
  // n! / prod(lambda_i!) built without intermediate overflow at desk scale
  int64_t count = 1;
  int next = 1;
  for (int p : partition) {
    for (int j = 1; j <= p; ++j) {
      count = count * next / j;
      ++next;
    }
  }
  (void)n;
  return count;
}

namespace {

void enumerate_rows(int n, const std::vector<int>& partition, size_t row,
                    std::vector<char>& used, std::vector<std::vector<int>>& acc,
                    std::vector<Tabloid>& out) {
  if (row == partition.size()) {
    out.push_back(Tabloid::from_rows(n, acc));
    return;
  }
  // Choose the row as a sorted subset of the unused residues; iterating
  // combinations in lexicographic order yields the global canonical order.
  std::vector<int> avail;
  for (int r = 1; r <= n; ++r)
    if (!used[static_cast<size_t>(r - 1)]) avail.push_back(r);
  int need = partition[row];
  std::vector<int> pick;
  auto rec = [&](auto&& self, size_t from) -> void {
    if (static_cast<int>(pick.size()) == need) {
      for (int r : pick) used[static_cast<size_t>(r - 1)] = 1;
      acc.push_back(pick);
      enumerate_rows(n, partition, row + 1, used, acc, out);
      acc.pop_back();
      for (int r : pick) used[static_cast<size_t>(r - 1)] = 0;
      return;
    }
    for (size_t t = from; t < avail.size(); ++t) {
      pick.push_back(avail[t]);
      self(self, t + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Tabloid> enumerate_tabloids(const std::vector<int>& partition,
                                        int64_t budget) {
  if (budget <= 0) budget = detail::env_budget(5'000'000);
  int n = 0;
  for (size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] < 1) throw std::domain_error("partition parts must be positive");
    if (i > 0 && partition[i] > partition[i - 1])
      throw std::domain_error("partition parts must be weakly decreasing");
    n += partition[i];
  }
  if (tabloid_count(partition) > budget)
    throw std::domain_error("tabloid enumeration exceeds the configured budget");
  std::vector<Tabloid> out;
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> acc;
  enumerate_rows(n, partition, 0, used, acc, out);
  return out;
}

}  // namespace afc

size_t std::hash<afc::Tabloid>::operator()(const afc::Tabloid& x) const {
  size_t h = static_cast<size_t>(x.modulus());
  for (const auto& row : x.rows()) {
    h = h * 1000003u + row.size();
    for (int e : row) h = h * 1000003u + static_cast<size_t>(e);
  }
  return h;
}
