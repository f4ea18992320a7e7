#include "afc/affine.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace afc {

namespace {
// Keeps every downstream sum/product safely inside int64.
constexpr int64_t kMaxEntry = int64_t(1) << 40;
}  // namespace

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

int64_t pos_mod(int64_t a, int64_t b) { return a - b * floor_div(a, b); }

namespace detail {

void fail_internal(const char* what) {
  throw std::logic_error(std::string("internal consistency failure: ") + what);
}

int64_t env_budget(int64_t fallback) {
  const char* s = std::getenv("AFFINE_CELLS_BUDGET");
  if (s == nullptr || *s == '\0') return fallback;
  char* end = nullptr;
  long long v = std::strtoll(s, &end, 10);
  if (end == nullptr || *end != '\0' || v <= 0) return fallback;
  return v;
}

}  // namespace detail

AffinePerm AffinePerm::from_window(std::vector<int64_t> window) {
  if (window.empty()) throw std::domain_error("window must be nonempty");
  const int n = static_cast<int>(window.size());
  std::vector<char> seen(n, 0);
  int64_t sum = 0;
  for (int64_t x : window) {
    if (x > kMaxEntry || x < -kMaxEntry)
      throw std::domain_error("window entry exceeds supported magnitude");
    int64_t r = pos_mod(x - 1, n);
    if (seen[static_cast<size_t>(r)])
      throw std::domain_error("duplicate residues: window is not a bijection");
    seen[static_cast<size_t>(r)] = 1;
    sum += x;
  }
  if (sum != int64_t(n) * (n + 1) / 2)
    throw std::domain_error("window sum must be n(n+1)/2");
  return AffinePerm(n, std::move(window));
}

AffinePerm AffinePerm::identity(int n) {
  std::vector<int64_t> win(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) win[static_cast<size_t>(i)] = i + 1;
  return from_window(std::move(win));
}

int64_t AffinePerm::operator()(int64_t i) const {
  int64_t q = floor_div(i - 1, n_);
  int64_t r = i - 1 - q * n_;
  return win_[static_cast<size_t>(r)] + q * n_;
}

int AffinePerm::residue_at(int i) const {
  return static_cast<int>(pos_mod((*this)(i)-1, n_)) + 1;
}

std::vector<int> AffinePerm::residue_window() const {
  std::vector<int> res(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i) res[static_cast<size_t>(i - 1)] = residue_at(i);
  return res;
}

AffinePerm AffinePerm::inverse() const {
  std::vector<int64_t> inv(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    int64_t j = win_[static_cast<size_t>(i - 1)];
    int r = static_cast<int>(pos_mod(j - 1, n_)) + 1;
    // w^{-1}(r) = w^{-1}(j) - (j - r) = i - j + r
    inv[static_cast<size_t>(r - 1)] = i - j + r;
  }
  return AffinePerm(n_, std::move(inv));
}

bool AffinePerm::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    if (win_[static_cast<size_t>(i - 1)] != i) return false;
  return true;
}

AffinePerm operator*(const AffinePerm& u, const AffinePerm& v) {
  if (u.period() != v.period())
    throw std::domain_error("cannot compose affine permutations with different periods");
  std::vector<int64_t> win(static_cast<size_t>(u.period()));
  for (int i = 1; i <= u.period(); ++i)
    win[static_cast<size_t>(i - 1)] = u(v(i));
  return AffinePerm(u.period(), std::move(win));
}

AffinePerm simple_reflection(int n, int i) {
  if (n < 1 || i < 0 || i >= n)
    throw std::domain_error("simple reflection index out of range");
  std::vector<int64_t> win(static_cast<size_t>(n));
  for (int x = 1; x <= n; ++x) {
    int64_t y = x;
    if (pos_mod(x - i, n) == 0)
      y = x + 1;
    else if (pos_mod(x - i - 1, n) == 0)
      y = x - 1;
    win[static_cast<size_t>(x - 1)] = y;
  }
  return AffinePerm::from_window(std::move(win));
}

AffinePerm rotate(const AffinePerm& w, int64_t k) {
  const int n = w.period();
  int64_t kk = pos_mod(k, n);
  if (kk == 0) return w;
  std::vector<int64_t> win(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) win[static_cast<size_t>(i - 1)] = w(i - kk) + kk;
  return AffinePerm::from_window(std::move(win));
}

int64_t length(const AffinePerm& w) {
  const int n = w.period();
  const auto& win = w.window();

  int64_t by_floor = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int64_t f = floor_div(win[static_cast<size_t>(j)] - win[static_cast<size_t>(i)], n);
      by_floor += f >= 0 ? f : -f;
    }

  // Count {(i, j) in [n] x Z_{>0} : i < j, w(i) > w(j)} per residue class of j.
  int64_t by_inversions = 0;
  for (int i = 1; i <= n; ++i) {
    int64_t wi = win[static_cast<size_t>(i - 1)];
    for (int r = 1; r <= n; ++r) {
      int64_t wr = win[static_cast<size_t>(r - 1)];
      int64_t t_min = floor_div(i - r, n) + 1;       // j = r + t*n > i
      int64_t t_max = ceil_div(wi - wr, n) - 1;      // w(r) + t*n < w(i)
      if (t_max >= t_min) by_inversions += t_max - t_min + 1;
    }
  }

  detail::internal_check(by_floor == by_inversions,
                         "the two length formulas disagree");
  return by_floor;
}

std::vector<int> right_descents(const AffinePerm& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.period(); ++i)
    if (w(i) > w(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> left_descents(const AffinePerm& w) {
  return right_descents(w.inverse());
}

RectShape rect_shape(int l, int m) {
  if (l < 1 || m < 1) throw std::domain_error("rectangle sides must be positive");
  return RectShape{l, m, l * m};
}

std::vector<int> partition_of(const RectShape& shape) {
  return std::vector<int>(static_cast<size_t>(shape.m), shape.l);
}

AffinePerm w0_lambda(const RectShape& shape) {
  std::vector<int64_t> win(static_cast<size_t>(shape.n));
  for (int j = 0; j < shape.l; ++j)
    for (int i = 1; i <= shape.m; ++i)
      win[static_cast<size_t>(j * shape.m + i - 1)] = j * shape.m + shape.m + 1 - i;
  return AffinePerm::from_window(std::move(win));
}

AffinePerm w_k(const RectShape& shape, int k) {
  if (shape.m < 2 || k < 1 || k >= shape.m)
    throw std::domain_error("w_k requires k in [1, m-1]");
  std::vector<int64_t> win(static_cast<size_t>(shape.n));
  for (int j = 0; j < shape.l; ++j) {
    int base = j * shape.m;
    for (int t = 0; t < k; ++t)
      win[static_cast<size_t>(base + t)] = base + shape.m - k + 1 + t;
    for (int t = 0; t < shape.m - k; ++t)
      win[static_cast<size_t>(base + k + t)] = base + 1 + t;
  }
  return rotate(AffinePerm::from_window(std::move(win)), k);
}

}  // namespace afc

size_t std::hash<afc::AffinePerm>::operator()(const afc::AffinePerm& w) const {
  size_t h = static_cast<size_t>(w.period()) * 0x9e3779b97f4a7c15ULL;
  for (int64_t x : w.window())
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
