#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ropelab/multipoly.hpp"
#include "ropelab/rope.hpp"

namespace ropelab {

// Matrix over R; e[row][col], source generator degrees src, target tgt.
struct PolyMatrix {
  std::vector<int> src, tgt;
  std::vector<std::vector<MultiPoly>> e;
};

// F_L -> ... -> F_1 -> F_0. modules[i] lists generator degrees of F_i and
// maps[i-1] is the differential F_i -> F_{i-1}.
struct ComplexRep {
  Field field;
  int nvars = 0;
  std::vector<std::vector<int>> modules;
  std::vector<std::vector<std::string>> labels;
  std::vector<PolyMatrix> maps;
  std::string name;
};

int desk_bound();
void set_desk_bound(int n);  // 0 restores the default lookup

// Sorted subsets of {0..m-1} by size, lex within a size.
class KoszulBasis {
 public:
  explicit KoszulBasis(int m);
  int rank_P() const { return m_; }
  const std::vector<std::vector<int>>& wedge(int i) const { return sets_.at(i); }
  std::size_t index(const std::vector<int>& T) const;

 private:
  int m_;
  std::vector<std::vector<std::vector<int>>> sets_;
};

// Koszul differential on x_0..x_r, delta_i : wedge^i P -> wedge^(i-1) P.
PolyMatrix koszul_map(const Field& f, int n, int i);

ComplexRep i2_resolution(int n, const Field& f);
ComplexRep minimal_i2_resolution(int n, const Field& f);
ComplexRep rope_resolution(const Rope& c, bool allow_degenerate = false);
ComplexRep struct_sheaf_resolution(const Rope& c);

bool verify_complex(const ComplexRep& c);
// Every nonzero entry is homogeneous of degree src - tgt.
bool verify_grading(const ComplexRep& c);
bool is_minimal(const ComplexRep& c);

struct ExactnessReport {
  bool euler_ok = false;
  bool rank_ok = false;
  std::vector<std::size_t> ranks;  // ranks[i] = generic rank bound of maps[i]
  int first_bad_degree = 0;
  bool ok() const { return euler_ok && rank_ok; }
};

ExactnessReport exactness_certificate(const ComplexRep& c, const std::function<long long(int)>& expected_hf,
                                      int d_lo, int d_hi, std::uint64_t seed = 1);
bool verify_exactness_certificate(const ComplexRep& c, const std::function<long long(int)>& expected_hf, int d_lo,
                                  int d_hi, std::uint64_t seed = 1);

// Hilbert function of R/(I_L)^2.
long long hf_square_of_line(int n, int d);

// The block of the canonical map wedge^i P -> wedge^(i-1) P (x) P on the
// discarded coordinates (T', j), j > max T', as a square integer matrix.
std::vector<std::vector<int>> split_block(int n, int i);

}  // namespace ropelab
