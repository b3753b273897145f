#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <type_traits>
#include <utility>
#include <vector>

#include "ropelab/field.hpp"

namespace ropelab::detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

struct ModOps {
  using T = std::uint64_t;
  std::uint64_t p;
  T zero() const { return 0; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + (p - b); }
  T neg(T a) const { return a ? p - a : 0; }
  T mul(T a, T b) const { return mulmod(a, b, p); }
  T inv(T a) const { return powmod(a, p - 2, p); }
};

struct ExactOps {
  using T = Scalar;
  Field f;
  T zero() const { return Scalar::zero(f); }
  bool is_zero(const T& a) const { return a.is_zero(); }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return scalar_inv(a); }
};

// Row echelon form built one row at a time. Each stored pivot row has leading
// coefficient 1 at its smallest column, so reduction only moves rightwards.
template <class Ops>
class SparseEchelon {
 public:
  using T = typename Ops::T;
  using Row = std::vector<std::pair<std::uint32_t, T>>;

  SparseEchelon(Ops ops, std::size_t ncols)
      : ops_(ops), ncols_(ncols), pivot_of_col_(ncols, -1), acc_(ncols, ops.zero()), mark_(ncols, 0) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }

  bool insert(const Row& row) { return reduce(row, true); }
  bool independent(const Row& row) { return reduce(row, false); }

  // Kernel of the inserted rows: free columns and dense basis vectors.
  void kernel(std::vector<std::size_t>& free_cols, std::vector<std::vector<T>>& basis) const {
    free_cols.clear();
    std::vector<long> fidx(ncols_, -1);
    for (std::size_t c = 0; c < ncols_; ++c)
      if (pivot_of_col_[c] < 0) {
        fidx[c] = static_cast<long>(free_cols.size());
        free_cols.push_back(c);
      }
    const std::size_t nf = free_cols.size();
    basis.assign(nf, std::vector<T>(ncols_, ops_.zero()));
    for (std::size_t i = 0; i < nf; ++i) basis[i][free_cols[i]] = unit();
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lead_[a] > lead_[b]; });
    for (std::size_t ri : order) {
      const Row& r = rows_[ri];
      const std::size_t c = lead_[ri];
      for (std::size_t k = 1; k < r.size(); ++k) {
        const std::size_t c2 = r[k].first;
        const T& v = r[k].second;
        for (std::size_t i = 0; i < nf; ++i) {
          const T& x = basis[i][c2];
          if (!ops_.is_zero(x)) basis[i][c] = ops_.sub(basis[i][c], ops_.mul(v, x));
        }
      }
    }
  }

 private:
  T unit() const {
    if constexpr (std::is_same_v<T, Scalar>) return Scalar::one(ops_.f);
    else return T(1);
  }

  bool reduce(const Row& row, bool store) {
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<std::uint32_t>> heap;
    touched_.clear();
    for (const auto& [c, v] : row) {
      if (ops_.is_zero(v)) continue;
      if (!mark_[c]) {
        mark_[c] = 1;
        acc_[c] = v;
        heap.push(c);
        touched_.push_back(c);
      } else {
        acc_[c] = ops_.add(acc_[c], v);
      }
    }
    bool result = false;
    while (!heap.empty()) {
      const std::uint32_t c = heap.top();
      heap.pop();
      if (ops_.is_zero(acc_[c])) continue;
      const long pi = pivot_of_col_[c];
      if (pi < 0) {
        result = true;
        if (store) {
          Row nr;
          const T inv = ops_.inv(acc_[c]);
          nr.emplace_back(c, unit());
          while (!heap.empty()) {
            const std::uint32_t c2 = heap.top();
            heap.pop();
            if (!ops_.is_zero(acc_[c2])) nr.emplace_back(c2, ops_.mul(acc_[c2], inv));
          }
          pivot_of_col_[c] = static_cast<long>(rows_.size());
          lead_.push_back(c);
          rows_.push_back(std::move(nr));
        }
        break;
      }
      const T f = acc_[c];
      const Row& pr = rows_[pi];
      for (std::size_t k = 1; k < pr.size(); ++k) {
        const std::uint32_t c2 = pr[k].first;
        const T d = ops_.mul(f, pr[k].second);
        if (!mark_[c2]) {
          mark_[c2] = 1;
          acc_[c2] = ops_.neg(d);
          heap.push(c2);
          touched_.push_back(c2);
        } else {
          acc_[c2] = ops_.sub(acc_[c2], d);
        }
      }
      acc_[c] = ops_.zero();
    }
    for (std::uint32_t c : touched_) {
      mark_[c] = 0;
      acc_[c] = ops_.zero();
    }
    return result;
  }

  Ops ops_;
  std::size_t ncols_;
  std::vector<long> pivot_of_col_;
  std::vector<Row> rows_;
  std::vector<std::size_t> lead_;
  std::vector<T> acc_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace ropelab::detail
