#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ropelab/graded.hpp"
#include "ropelab/multipoly.hpp"
#include "ropelab/rope.hpp"

namespace ropelab {

struct TypeVector {
  enum Tag { Right, Left } tag = Right;
  std::vector<int> v;  // ascending
  int sum() const;
  std::string str() const;
};

long long dim_V_alpha(int n, const std::vector<int>& alpha);
long long dim_W_beta(int n, const std::vector<int>& beta);

// Most balanced right and left types of genus g with k columns in B.
std::pair<TypeVector, TypeVector> minimal_types(int n, int k, int g);

// Ascending sequences of `parts` integers >= min_part summing to total.
std::vector<std::vector<int>> partitions(int total, int parts, int min_part);

// Rao function read off the types: the right type for z <= 0, the left type after.
int rao_from_types(const std::vector<int>& alpha, const std::vector<int>& beta, int g, int z);

// Every right type (z <= 0) and left type (z > 0) of genus g against the
// minimal one. Raises SizeLimit when -g exceeds max_minus_g.
bool rho_min_dominates(int n, int k, int g, int z_lo, int z_hi, int max_minus_g = 12);

// Dimension of the component of ropes of degree d and genus g on lines;
// d = 2, g = -1 is the skew-line component 4(n-1).
long long component_dim(int n, int d, int g);

enum class Tri { False, True, Unknown };
const char* tri_name(Tri t);

struct Classification {
  enum Member { SkewLines, Rope, Unknown };
  long long component_dim = 0;
  bool dim_exact = false;  // false: only a lower bound is known
  Tri generically_smooth = Tri::Unknown;
  Tri nonreduced = Tri::Unknown;
  Member general_member = Unknown;
  // degree >= 3: g <= min(-3(d-1), d-n), and g <= d-n with
  // g <= -3(d-1) or -g = 2(d-1)
  bool strict_gate = false;
  bool either_gate = false;
};
const char* member_name(Classification::Member m);

Classification classify(int n, int d, int g, long long characteristic);

// True when h0 of the normal sheaf exceeds the component dimension; Unknown
// outside the range where that dimension is known.
Tri is_obstructed(const Rope& c, long long characteristic);

// Generic initial ideal for degrevlex: all x_i x_j and x_(j-1) t^beta_j.
std::vector<MultiPoly> gin_ideal(const Rope& c);

// Block-diagonal A with right type (p x w, p+1 x s) whose rope sits in
// P^(r+2). repair = true fixes the layouts that leave a zero column.
struct StaircaseBlock {
  std::string name;  // "A~j", "A'i", "A''i"
  int rows = 0, cols = 0;
};
std::vector<StaircaseBlock> staircase_layout(int p, int s, int w, int r, bool repair = false);
GradedMap staircase_matrix(int p, int s, int w, int r, const Field& f, bool repair = false);
// True when the unrepaired layout puts an empty A~ block (one zero column) in front.
bool staircase_has_zero_column(int p, int s, int w, int r);

}  // namespace ropelab
