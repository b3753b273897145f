#pragma once

#include <random>

#include "ropelab/hpoly.hpp"

namespace th {

using namespace ropelab;

inline Scalar rand_scalar(const Field& f, std::mt19937_64& rng, int span = 5) {
  long long v = static_cast<long long>(rng() % (2 * span + 1)) - span;
  if (f.is_rational() && rng() % 4 == 0) {
    long long den = 1 + static_cast<long long>(rng() % 4);
    return Scalar(f, mpq_class(static_cast<long>(v), static_cast<unsigned long>(den)));
  }
  return Scalar(f, v);
}

inline HomPoly rand_poly(const Field& f, int deg, std::mt19937_64& rng, int span = 5) {
  std::vector<Scalar> c;
  for (int i = 0; i <= deg; ++i) c.push_back(rand_scalar(f, rng, span));
  return HomPoly(f, deg, c);
}

inline HomPoly P(const Field& f, const std::string& s) { return parse_hompoly(f, s); }

}  // namespace th
