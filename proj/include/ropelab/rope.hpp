#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "ropelab/graded.hpp"
#include "ropelab/multipoly.hpp"

namespace ropelab {

// Rope on the line x_0 = ... = x_r = 0 in P^n, r = n-2.
// B is (r+1) x k with column j of degree beta_j; A is (r+1-k) x (r+1) with
// row i of degree alpha_i; A B = 0. Both types are sorted ascending.
struct Rope {
  Field field;
  int n = 0, k = 0, r = 0;
  GradedMap B;  // source twists beta_j + 1, target twists 1
  GradedMap A;  // source twists 1, target twists 1 - alpha_i
  std::vector<int> alpha, beta;
  int genus = 0;

  int degree() const { return n - k; }
  bool nondegenerate() const;
  int nvars() const { return r + 3; }
};

// Builds phi_B from a matrix whose column j is homogeneous of one degree.
GradedMap make_B(const Field& f, const std::vector<std::vector<HomPoly>>& entries);
// Builds phi_A from a matrix whose row i is homogeneous of one degree.
GradedMap make_A(const Field& f, const std::vector<std::vector<HomPoly>>& entries);

Rope rope_from_B(int n, const GradedMap& B);
Rope rope_from_A(int n, const GradedMap& A);

struct RandomStats {
  int attempts = 0;
};
Rope random_rope(int n, std::vector<int> alpha, const Field& f, std::uint64_t seed, RandomStats* stats = nullptr);

// Small deterministic generator shared by the samplers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  // uniform-ish in [lo, hi]
  long long range(long long lo, long long hi);
  Scalar scalar(const Field& f);
  Scalar nonzero_scalar(const Field& f);
  HomPoly poly(const Field& f, int deg);

 private:
  std::mt19937_64 eng_;
};

int binom1(int a);
long long binom(long long a, long long b);

int hilbert_function(const Rope& c, int j);
int rao_function(const Rope& c, int i);
int rao_via_cokerA(const Rope& c, int i);
// Closed form of the Rao function split at zero.
int rao_split_formula(const Rope& c, int i);
int regularity(const Rope& c);
int h0_structure(const Rope& c, int d);

// Twist multiplicities of G_1..G_n: betti[i-1][degree] = count.
struct BettiTable {
  std::vector<std::map<int, int>> gens;
  int alternating_rank_sum() const;
};
BettiTable betti_table(const Rope& c);

std::vector<MultiPoly> ideal_generators(const Rope& c);

// The constant c with det A_J = c (-1)^(sum I) det B_I for every split
// {0..r} = I u J, |I| = k; nullopt if no such constant exists.
std::optional<Scalar> duality_constant(const Rope& c);

// True when the rows of the two maps generate the same submodule.
bool same_row_span(const GradedMap& a, const GradedMap& b);

}  // namespace ropelab
