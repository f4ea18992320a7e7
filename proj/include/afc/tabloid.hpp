#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "afc/affine.hpp"

namespace afc {

// Tabloid of shape lambda: the rows partition the residues [1, n], row i
// holding lambda_i of them. Canonical form keeps each row sorted by least
// positive representative.
class Tabloid {
public:
  static Tabloid from_rows(int n, std::vector<std::vector<int>> rows);

  int modulus() const { return n_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  std::vector<int> shape() const;

  int row_of(int residue) const;  // 1-based

  // X_{i,j} extended to all j in Z via X_{i, j+k*lambda_i} = X_{i,j} + k*n.
  int64_t entry(int i, int64_t j) const;

  Tabloid shifted(int64_t k) const;
  // Entrywise relabeling by a permutation sigma of [1, n] (sigma[r-1] is the
  // image of r); throws if sigma is not bijective.
  Tabloid relabeled(const std::vector<int>& sigma) const;

  bool operator==(const Tabloid&) const = default;

private:
  Tabloid(int n, std::vector<std::vector<int>> rows)
      : n_(n), rows_(std::move(rows)) {}
  int n_ = 0;
  std::vector<std::vector<int>> rows_;
};

// Column filling: residue 1 in row 1, 2 in row 2, ... cycling down columns.
Tabloid t_lambda(const std::vector<int>& partition);

// Relabeling by the residue permutation of w.
Tabloid relabel(const AffinePerm& w, const Tabloid& x);

std::vector<int> tau_invariant(const Tabloid& x);

int64_t local_charge(const Tabloid& x, int i);
std::vector<int64_t> symmetrized_offset(const Tabloid& x);
int64_t charge(const Tabloid& x);

// Exchange residues i and i+1 (n and 1 for i = n) when the tau-invariants of
// the two tabloids are incomparable; nullopt otherwise.
std::optional<Tabloid> knuth_move(const Tabloid& x, int i);

int64_t tabloid_count(const std::vector<int>& partition);
// All tabloids of the given shape in lexicographic order on sorted rows.
// budget <= 0 uses AFFINE_CELLS_BUDGET (default 5e6); throws when the count
// exceeds it.
std::vector<Tabloid> enumerate_tabloids(const std::vector<int>& partition,
                                        int64_t budget = 0);

}  // namespace afc

template <>
struct std::hash<afc::Tabloid> {
  size_t operator()(const afc::Tabloid& x) const;
};
