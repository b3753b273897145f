#pragma once

#include <vector>

#include "ropelab/hpoly.hpp"
#include "ropelab/linalg.hpp"

namespace ropelab {

// Direct sum of S(-a_j); generator j sits in degree a_j.
struct GradedFreeModule {
  Field field;
  std::vector<int> twists;

  std::size_t rank() const { return twists.size(); }
  std::size_t dim(int d) const;
  // Offset of component j inside the degree-d piece.
  std::size_t offset(int d, std::size_t j) const;
};

// Degree-preserving S-linear map; entries[i][j] maps source j to target i and
// has degree source.twists[j] - target.twists[i].
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(GradedFreeModule source, GradedFreeModule target, std::vector<std::vector<HomPoly>> entries);

  const Field& field() const { return source_.field; }
  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }
  const HomPoly& entry(std::size_t i, std::size_t j) const { return e_[i][j]; }
  const std::vector<std::vector<HomPoly>>& entries() const { return e_; }

  GradedMap transpose() const;

 private:
  GradedFreeModule source_, target_;
  std::vector<std::vector<HomPoly>> e_;
};

// m o n; requires n.target == m.source (twists).
GradedMap compose(const GradedMap& m, const GradedMap& n);
bool is_zero_map(const GradedMap& m);

// K-linear map [source]_d -> [target]_d. Row count is dim target_d; monomials
// t^(e-i) u^i ordered by i within each component.
LinearSystem degree_piece(const GradedMap& m, int d);
std::vector<Vec> dense(const LinearSystem& sys);

struct KernelResult {
  GradedMap generators;
  // dim ker of the degree piece and dim of the generated submodule, per degree
  std::vector<int> degrees;
  std::vector<std::size_t> kernel_dims;
  std::vector<std::size_t> generated_dims;
};

// Minimal generators of ker m found degree by degree up to degree_bound.
// The result is certified: the generator count must equal the generic corank
// and the maximal minors of the generator matrix must have a constant gcd;
// that pins the generated module to the whole kernel.
KernelResult kernel_with_certificate(const GradedMap& m, int degree_bound);
GradedMap kernel_generators(const GradedMap& m, int degree_bound);
int default_kernel_bound(const GradedMap& m);

// Rank over the fraction field, by fraction-free elimination.
std::size_t generic_rank(const GradedMap& m);

struct Minor {
  std::vector<std::size_t> deleted;  // deleted rows (tall) or columns (wide)
  HomPoly det;                       // plain determinant of what is left
  HomPoly signed_value;              // (-1)^(sum of deleted) * det
};

HomPoly determinant(std::vector<std::vector<HomPoly>> m, const Field& f);
std::vector<Minor> maximal_minors(const GradedMap& m);
bool minors_codim2(const GradedMap& m);
std::size_t coker_hilbert(const GradedMap& m, int d);

// Square submatrix with the given rows and columns.
std::vector<std::vector<HomPoly>> submatrix(const GradedMap& m, const std::vector<std::size_t>& rows,
                                            const std::vector<std::size_t>& cols);

// Calls f on every k-subset of {0..n-1} in lex order; stops when f returns false.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    if (!f(static_cast<const std::vector<std::size_t>&>(s))) return;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace ropelab
