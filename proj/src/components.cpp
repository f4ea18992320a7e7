#include "afc/components.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace afc {

namespace {

void require_label(const ComponentLabel& label) {
  if (label.shape.n < 3)
    throw std::domain_error("component labels require n >= 3");
  if (label.w.period() != label.shape.n)
    throw std::domain_error("label window period does not match the shape");
  if (label.c.size() != static_cast<size_t>(label.shape.m))
    throw std::domain_error("label weight length must be the number of rows");
}

int64_t sum_of(const std::vector<int64_t>& v) {
  return std::accumulate(v.begin(), v.end(), int64_t(0));
}

// rho~(w0 * w') as a scalar, from u = (w')^{-1}.
int64_t kappa(const AffinePerm& u, const RectShape& shape) {
  int64_t s = shape.l;
  for (int j = 0; j < shape.l; ++j)
    s -= ceil_div(u(1 + j * shape.m), shape.n);
  return s;
}

// delta^alpha_1 of the residue window of u.
int64_t delta1(const AffinePerm& u, const RectShape& shape, int64_t alpha) {
  int64_t count = 0;
  for (int j = 0; j < shape.l; ++j)
    if (u.residue_at(1 + j * shape.m) >= shape.n - alpha + 1) ++count;
  return count;
}

void require_pair(const PairRep& pair) {
  if (pair.shape.n < 3)
    throw std::domain_error("component pairs require n >= 3");
  if (pair.k < 0 || pair.k >= pair.shape.m)
    throw std::domain_error("pair rotation index out of range");
  if (pair.c.size() != static_cast<size_t>(pair.shape.m))
    throw std::domain_error("pair weight length must be the number of rows");
  int64_t mn = *std::min_element(pair.c.begin(), pair.c.end());
  if (mn != 0)
    throw std::domain_error("pair weight must be normalized with min 0");
}

// Common part of the two triple formulas; v is the placed (c - 1_k) term.
AmbcTriple pair_triple(const PairRep& pair, std::vector<int64_t> v) {
  const RectShape& shape = pair.shape;
  Tabloid base = t_lambda(partition_of(shape));
  AffinePerm u1 = pair.w1.inverse();
  AffinePerm u2 = pair.w2.inverse();
  int64_t total = sum_of(pair.c);

  Tabloid p = relabel(u1, base).shifted(pair.k);
  Tabloid q = relabel(u2, base).shifted(total);

  int64_t scalar = -kappa(u1, shape) + kappa(u2, shape) -
                   (floor_div(total, shape.n) * shape.l +
                    delta1(u2, shape, pos_mod(total, shape.n)) -
                    delta1(u1, shape, pair.k));

  auto sp = symmetrized_offset(p);
  auto sq = symmetrized_offset(q);
  std::vector<int64_t> rho(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    rho[i] = sp[i] - sq[i] + scalar + v[i];
  return make_triple(std::move(p), std::move(q), std::move(rho));
}

std::vector<int64_t> c_minus_ones(const PairRep& pair) {
  std::vector<int64_t> e = pair.c;
  for (int i = 0; i < pair.k; ++i) --e[static_cast<size_t>(i)];
  return e;
}

int64_t factorial(int64_t x) {
  int64_t f = 1;
  for (int64_t i = 2; i <= x; ++i) f *= i;
  return f;
}

}  // namespace

ComponentLabel make_label(const RectShape& shape, AffinePerm w,
                          std::vector<int64_t> c) {
  ComponentLabel label{shape, std::move(w), std::move(c)};
  require_label(label);
  return label;
}

ComponentLabel normalize(const ComponentLabel& label) {
  require_label(label);
  int64_t mn = *std::min_element(label.c.begin(), label.c.end());
  std::vector<int64_t> c(label.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = label.c[i] - mn;
  AffinePerm w = rotate(label.w, int64_t(label.shape.m) * mn);
  if (!in_fundamental_box(w, label.shape))
    throw std::domain_error(
        "label window is not in the fundamental box after shifting");
  return ComponentLabel{label.shape, std::move(w), std::move(c)};
}

ComponentLabel translate(const ComponentLabel& label, const std::vector<int64_t>& t) {
  require_label(label);
  if (t.size() != label.c.size())
    throw std::domain_error("translation vector has the wrong length");
  std::vector<int64_t> c(label.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = label.c[i] + t[i];
  return normalize(ComponentLabel{label.shape, label.w, std::move(c)});
}

PairRep orbit_rep_pair(const ComponentLabel& c1, const ComponentLabel& c2) {
  if (!(c1.shape == c2.shape))
    throw std::domain_error("pair labels must share one shape");
  ComponentLabel l1 = normalize(c1);
  ComponentLabel l2 = normalize(c2);
  const int m = l1.shape.m;

  int64_t total = sum_of(l1.c);
  int64_t alpha = floor_div(total, m);
  int beta = static_cast<int>(total - m * alpha);

  // Translate both labels by -(c' - alpha*1 - 1_beta); the first becomes
  // F^{1_beta} of a rotated base component.
  std::vector<int64_t> t(l1.c.size());
  for (size_t i = 0; i < t.size(); ++i)
    t[i] = -(l1.c[i] - alpha - (static_cast<int>(i) < beta ? 1 : 0));
  ComponentLabel moved = translate(l2, t);

  return PairRep{l1.shape, beta, rotate(l1.w, int64_t(m) * alpha),
                 std::move(moved.c), std::move(moved.w)};
}

AffinePerm orbit_of_label(const ComponentLabel& label) {
  ComponentLabel l = normalize(label);
  const RectShape& shape = l.shape;
  std::vector<int64_t> sorted = l.c;
  std::sort(sorted.begin(), sorted.end(), std::greater<int64_t>());

  // Shift multiset {1^{d_1}, ..., (m-1)^{d_{m-1}}}, d_i the sorted gaps,
  // applied innermost-first.
  std::vector<int> shifts;
  for (int i = 1; i < shape.m; ++i)
    for (int64_t r = 0; r < sorted[static_cast<size_t>(i - 1)] - sorted[static_cast<size_t>(i)]; ++r)
      shifts.push_back(i);

  AffinePerm w = l.w;
  std::sort(shifts.begin(), shifts.end());
  for (int k : shifts) w = w_k(shape, k) * rotate(w, k);
  detail::internal_check(in_w0_R(w, shape),
                         "orbit product left the expected coset");
  return w;
}

AffinePerm rel_pos(const PairRep& pair) {
  require_pair(pair);
  const RectShape& shape = pair.shape;

  AffinePerm y = pair.w2;
  std::vector<int64_t> e = c_minus_ones(pair);
  if (pair.k > 0 &&
      *std::min_element(e.begin(), e.begin() + pair.k) < 0) {
    // c - 1_k leaves the nonnegative cone; absorb one full translation.
    y = rotate(y, -shape.m);
    for (auto& x : e) ++x;
  }
  AffinePerm w = orbit_of_label(ComponentLabel{shape, std::move(y), std::move(e)});
  return rotate(pair.w1.inverse() * w0_lambda(shape) * w, pair.k);
}

AffinePerm rel_pos(const ComponentLabel& c1, const ComponentLabel& c2) {
  return rel_pos(orbit_rep_pair(c1, c2));
}

AmbcTriple rel_pos_triple(const PairRep& pair) {
  require_pair(pair);
  std::vector<int64_t> v = c_minus_ones(pair);
  std::sort(v.begin(), v.end());
  return pair_triple(pair, std::move(v));
}

AmbcTriple rel_pos_triple(const ComponentLabel& c1, const ComponentLabel& c2) {
  return rel_pos_triple(orbit_rep_pair(c1, c2));
}

Tabloid theta(const ComponentLabel& label) {
  ComponentLabel l = normalize(label);
  const int m = l.shape.m;
  int64_t total = sum_of(l.c);
  int64_t alpha = floor_div(total, m);
  int64_t beta = total - m * alpha;
  Tabloid base = t_lambda(partition_of(l.shape));
  return relabel(rotate(l.w.inverse(), int64_t(m) * alpha), base).shifted(beta);
}

AmbcTriple theta_big(const PairRep& pair, RevMode mode) {
  require_pair(pair);
  std::vector<int64_t> v = c_minus_ones(pair);
  if (mode == RevMode::kTupleReverse)
    std::reverse(v.begin(), v.end());
  else
    std::sort(v.begin(), v.end(), std::greater<int64_t>());
  return pair_triple(pair, std::move(v));
}

PairRep theta_big_inverse(const AmbcTriple& t, const RectShape& shape,
                          int alpha_max, RevMode mode) {
  if (shape.n < 3) throw std::domain_error("component pairs require n >= 3");
  if (t.P.modulus() != shape.n || t.P.shape() != partition_of(shape))
    throw std::domain_error("triple shape does not match the rectangle");
  if (sum_of(t.rho) != 0)
    throw std::domain_error("triple weight must sum to zero");

  const int m = shape.m;
  if (alpha_max < 0) {
    int64_t biggest = 0;
    for (int64_t x : centralized_weight(t)) biggest = std::max(biggest, std::llabs(x));
    alpha_max = static_cast<int>(biggest) + m + 2;
  }

  int k = static_cast<int>(pos_mod(-charge(t.P), m));
  AffinePerm u1 = fbox_from_tabloid(t.P.shifted(-k));
  AffinePerm w1 = u1.inverse();
  int beta = static_cast<int>(pos_mod(-charge(t.Q), m));

  auto sp = symmetrized_offset(t.P);
  auto sq = symmetrized_offset(t.Q);

  for (int alpha = 0; alpha <= alpha_max; ++alpha) {
    int64_t total = int64_t(m) * alpha + beta;
    AffinePerm u2 = fbox_from_tabloid(t.Q.shifted(-total));
    int64_t scalar = -kappa(u1, shape) + kappa(u2, shape) -
                     (floor_div(total, shape.n) * shape.l +
                      delta1(u2, shape, pos_mod(total, shape.n)) -
                      delta1(u1, shape, k));
    std::vector<int64_t> v(t.rho.size());
    for (size_t i = 0; i < v.size(); ++i)
      v[i] = t.rho[i] - sp[i] + sq[i] - scalar;
    if (mode == RevMode::kTupleReverse)
      std::reverse(v.begin(), v.end());
    else
      std::sort(v.begin(), v.end(), std::greater<int64_t>());
    std::vector<int64_t> c = v;
    for (int i = 0; i < k; ++i) ++c[static_cast<size_t>(i)];

    bool ok = sum_of(c) == total &&
              *std::min_element(c.begin(), c.end()) == 0 &&
              std::all_of(c.begin(), c.end(), [](int64_t x) { return x >= 0; });
    if (!ok) continue;
    PairRep pair{shape, k, w1, std::move(c), u2.inverse()};
    if (theta_big(pair, mode) == t) return pair;
  }
  throw std::domain_error("no pair preimage found within the alpha bound");
}

int64_t num_components_in_orbit(const AffinePerm& v, const RectShape& shape) {
  if (!in_w0_R(v, shape))
    throw std::domain_error("orbit element must satisfy the orbit conditions");
  AffinePerm u = v.inverse();
  int64_t count = factorial(shape.m);
  int block = 1;
  for (int i = 1; i < shape.m; ++i) {
    if (alcove_eq3_holds(u, shape, i)) {
      ++block;
    } else {
      count /= factorial(block);
      block = 1;
    }
  }
  count /= factorial(block);
  return count;
}

bool pairs_equivalent(const ComponentLabel& c1, const ComponentLabel& c2,
                      const ComponentLabel& d1, const ComponentLabel& d2) {
  for (const ComponentLabel* label : {&c1, &c2, &d1, &d2}) {
    require_label(*label);
    if (!(label->shape == c1.shape))
      throw std::domain_error("pair labels must share one shape");
    if (!in_fundamental_box(label->w, label->shape))
      throw std::domain_error("label window must lie in the fundamental box");
  }
  const int m = c1.shape.m;
  int64_t sc1 = sum_of(c1.c), sc2 = sum_of(c2.c);
  int64_t sd1 = sum_of(d1.c), sd2 = sum_of(d2.c);

  if (rotate(c1.w, sc1) != rotate(d1.w, sd1)) return false;
  if (rotate(c2.w, sc2) != rotate(d2.w, sd2)) return false;
  if (pos_mod(sc1 - sd1, m) != 0 || pos_mod(sc2 - sd2, m) != 0) return false;

  // Some coordinate permutation of (c - c') matches (d - d') up to a
  // constant vector.
  std::vector<int64_t> x(c2.c.size()), y(d2.c.size());
  for (size_t i = 0; i < x.size(); ++i) {
    x[i] = c2.c[i] - c1.c[i];
    y[i] = d2.c[i] - d1.c[i];
  }
  int64_t diff = sum_of(x) - sum_of(y);
  if (pos_mod(diff, m) != 0) return false;
  int64_t shift = diff / m;
  for (auto& e : y) e += shift;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

AffinePerm psi_rect(const AmbcTriple& t, const RectShape& shape, int alpha_max) {
  return rel_pos(theta_big_inverse(t, shape, alpha_max));
}

}  // namespace afc
