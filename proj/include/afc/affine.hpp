#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace afc {

// Integer division with mathematically consistent rounding for negatives.
int64_t floor_div(int64_t a, int64_t b);
int64_t ceil_div(int64_t a, int64_t b);
int64_t pos_mod(int64_t a, int64_t b);  // result in [0, b)

// Affine permutation in window notation: a bijection w of Z satisfying
// w(i+n) = w(i)+n, normalized so that sum_{i=1}^n w(i) = n(n+1)/2.
// Values are immutable after construction.
class AffinePerm {
public:
  // Validates both invariants (distinct residues, window sum) and the
  // supported magnitude bound; throws std::domain_error naming the
  // violated invariant otherwise.
  static AffinePerm from_window(std::vector<int64_t> window);
  static AffinePerm identity(int n);

  int period() const { return n_; }
  const std::vector<int64_t>& window() const { return win_; }

  // Total on Z via periodicity.
  int64_t operator()(int64_t i) const;

  // Residue of w(i) in [1, n]; i in [1, n].
  int residue_at(int i) const;
  std::vector<int> residue_window() const;

  AffinePerm inverse() const;
  bool is_identity() const;

  friend AffinePerm operator*(const AffinePerm& u, const AffinePerm& v);
  bool operator==(const AffinePerm&) const = default;

private:
  AffinePerm(int n, std::vector<int64_t> win) : n_(n), win_(std::move(win)) {}
  int n_ = 0;
  std::vector<int64_t> win_;
};

// s_i for i in [0, n-1], with s_0 = s_n.
AffinePerm simple_reflection(int n, int i);

// phi^k with phi(w)(i) = w(i-1)+1; any integer k (phi^n = id).
AffinePerm rotate(const AffinePerm& w, int64_t k);

// Coxeter length, computed by both the floor-sum and the inversion-count
// formula; throws std::logic_error if they disagree.
int64_t length(const AffinePerm& w);

// Descent sets as sorted residue lists in [1, n].
std::vector<int> right_descents(const AffinePerm& w);
std::vector<int> left_descents(const AffinePerm& w);

// Rectangle lambda = (l^m) with n = l*m.
struct RectShape {
  int l = 0;  // row length
  int m = 0;  // number of rows
  int n = 0;
  bool operator==(const RectShape&) const = default;
};

RectShape rect_shape(int l, int m);
std::vector<int> partition_of(const RectShape& shape);

// Longest element of the finite parabolic S_m x ... x S_m (l blocks of
// size m): [m,...,1, 2m,...,m+1, ..., n,...,n-m+1].
AffinePerm w0_lambda(const RectShape& shape);

// Block-shift element, k in [1, m-1]; has length l*(m-k)*k.
AffinePerm w_k(const RectShape& shape, int k);

namespace detail {
[[noreturn]] void fail_internal(const char* what);
inline void internal_check(bool ok, const char* what) {
  if (!ok) fail_internal(what);
}
// AFFINE_CELLS_BUDGET env override, else fallback.
int64_t env_budget(int64_t fallback);
}  // namespace detail

}  // namespace afc

template <>
struct std::hash<afc::AffinePerm> {
  size_t operator()(const afc::AffinePerm& w) const;
};
