#include "afc/n2.hpp"

namespace afc {

namespace {

Tabloid col(int top, int bottom) {
  return Tabloid::from_rows(2, {{top}, {bottom}});
}

AmbcTriple triple2(int p_top, int q_top, int64_t k) {
  return make_triple(col(p_top, 3 - p_top), col(q_top, 3 - q_top), {-k, k});
}

AffinePerm window2(int64_t a, int64_t b) {
  return AffinePerm::from_window({a, b});
}

// Product of s-generators in written order.
AffinePerm word(const std::vector<int>& gens) {
  AffinePerm w = AffinePerm::identity(2);
  for (int g : gens) w = w * simple_reflection(2, g);
  return w;
}

std::vector<int> alternating(int first, int count) {
  std::vector<int> gens;
  for (int i = 0; i < count; ++i) gens.push_back(i % 2 == 0 ? first : 1 - first);
  return gens;
}

}  // namespace

N2Fixture n2_tables(int kmax) {
  N2Fixture fx;
  for (int64_t k = 0; k <= kmax; ++k) {
    // s1 (s0 s1)^k
    fx.families[0].push_back({window2(2 * k + 2, 1 - 2 * k), triple2(1, 1, k)});
    // (s1 s0)^{k+1}
    fx.families[1].push_back({window2(-1 - 2 * k, 4 + 2 * k), triple2(1, 2, k)});
    // (s0 s1)^k, k >= 1
    if (k >= 1)
      fx.families[2].push_back({window2(2 * k + 1, 2 - 2 * k), triple2(2, 1, k)});
    // s0 (s1 s0)^k
    fx.families[3].push_back({window2(-2 * k, 3 + 2 * k), triple2(2, 2, k)});

    detail::internal_check(
        fx.families[0].back().w == word(alternating(1, 2 * static_cast<int>(k) + 1)),
        "n=2 family window disagrees with its generator word");
    detail::internal_check(
        fx.families[1].back().w == word(alternating(1, 2 * static_cast<int>(k) + 2)),
        "n=2 family window disagrees with its generator word");
    if (k >= 1)
      detail::internal_check(
          fx.families[2].back().w == word(alternating(0, 2 * static_cast<int>(k))),
          "n=2 family window disagrees with its generator word");
    detail::internal_check(
        fx.families[3].back().w == word(alternating(0, 2 * static_cast<int>(k) + 1)),
        "n=2 family window disagrees with its generator word");

    // r(C0, C_{2k}) = (s1 s0)^k s1, theta = ((1|2),(1|2),(-k,k))
    fx.pairs[0].push_back(
        {word(alternating(1, 2 * static_cast<int>(k) + 1)), triple2(1, 1, k)});
    // r(C0, C_{2k+1}) = (s1 s0)^{k+1}, theta = ((1|2),(2|1),(-k,k))
    fx.pairs[1].push_back(
        {word(alternating(1, 2 * static_cast<int>(k) + 2)), triple2(1, 2, k)});
    // r(C1, C_{2k}) = (s0 s1)^{max(k,1)}, theta = ((2|1),(1|2),(-k,k))
    fx.pairs[2].push_back(
        {word(alternating(0, 2 * std::max<int>(static_cast<int>(k), 1))),
         triple2(2, 1, k)});
    // r(C1, C_{2k+1}) = (s0 s1)^k s0, theta = ((2|1),(2|1),(-k,k))
    fx.pairs[3].push_back(
        {word(alternating(0, 2 * static_cast<int>(k) + 1)), triple2(2, 2, k)});
  }
  return fx;
}

}  // namespace afc
