#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ropelab/linalg.hpp"
#include "ropelab/rope.hpp"

namespace ropelab {

// One homogeneous unknown of the normal-sheaf system, expanded into
// degree+1 coefficient slots (low u-power first).
struct UnknownBlock {
  enum Kind { Pij, Ps, Qijl } kind;
  int i = 0, j = 0, s = 0, l = 0;
  int degree = 0;
  std::size_t offset = 0;
  std::string label() const;
};

struct NormalSystem {
  Rope rope;
  std::vector<UnknownBlock> blocks;
  LinearSystem sys;
  long long free_params = 0;

  std::size_t pij(int i, int j) const;
  std::size_t ps(int s) const;  // s is 0-based; labels print s+1
  std::size_t qijl(int l, int i, int j) const;
  std::size_t nunknowns() const { return sys.ncols; }
};

// A point of the solution space, written as polynomials.
struct NormalSolution {
  std::vector<std::vector<HomPoly>> P;               // symmetric (r+1)x(r+1)
  std::vector<HomPoly> Ps;                           // k entries
  std::vector<std::vector<std::vector<HomPoly>>> Q;  // Q[l][i][j], symmetric in i,j
};

struct NormalSections {
  long long h0 = 0;
  long long free_params = 0;
  std::vector<NormalSolution> basis;
  bool p_in_image = false;
};

NormalSystem assemble_system(const Rope& c);
Vec to_vector(const NormalSystem& ns, const NormalSolution& sol);
NormalSolution from_vector(const NormalSystem& ns, const Vec& v);
bool satisfies(const NormalSystem& ns, const Vec& v);

NormalSections h0_normal(const Rope& c);
bool check_pij(const Rope& c, const NormalSections& sec);
bool check_p_in_image(const Rope& c, const NormalSections& sec);

int normal_lower_bound(const Rope& c);
int expected_h0_if_p_in_image(const Rope& c);
long long double_line_formula(int n, int g, long long characteristic);

struct DoubleLineParams {
  std::vector<HomPoly> lambda;       // r+1 linear forms, characteristic != 2
  std::vector<HomPoly> P;            // P^s for every column of B, characteristic 2
  std::optional<Scalar> c_prime;     // characteristic 2 and genus -1
  std::optional<Scalar> c_line;      // multiple of (a00^2, a00 a01, a01^2), genus -1
};

// Explicit solution of the three systems for a double line whose matrices
// are in block form (A', 0), (B' 0; 0 D) with D constant diagonal.
NormalSolution double_line_solution_oracle(const Rope& c, const DoubleLineParams& p);

}  // namespace ropelab
