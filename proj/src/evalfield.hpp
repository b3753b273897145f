#pragma once

// Finite field used for random-point rank bounds: F_q with q = p^e built from
// a primitive polynomial (log tables) when p is small, F_p directly when p is
// large, and F_(2^61-1) for rational input.

#include <cstdint>
#include <vector>

#include "ropelab/field.hpp"

namespace ropelab::detail {

class EvalField {
 public:
  explicit EvalField(const Field& base);

  std::uint64_t size() const { return q_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t embed(const Scalar& s) const;
  std::uint64_t pow(std::uint64_t a, unsigned e) const;

  std::size_t rank(std::vector<std::vector<std::uint64_t>> m) const;

 private:
  std::uint64_t p_ = 0, q_ = 0;
  unsigned e_ = 1;
  bool tables_ = false;
  bool mersenne_ = false;
  std::vector<std::uint32_t> exp_, log_;
};

}  // namespace ropelab::detail
