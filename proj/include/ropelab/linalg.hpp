#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "ropelab/field.hpp"

namespace ropelab {

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;
using Vec = std::vector<Scalar>;

// Rows of a K-linear system M x = 0 with a fixed column count.
struct LinearSystem {
  Field field;
  std::size_t ncols = 0;
  std::vector<SparseRow> rows;

  LinearSystem() = default;
  LinearSystem(Field f, std::size_t n) : field(f), ncols(n) {}
  void add_row(SparseRow row);
  void add_dense_row(const Vec& row);
};

struct Kernel {
  std::vector<std::size_t> free_cols;
  // basis[i] is the unique kernel vector equal to 1 at free_cols[i] and 0 at the other free columns.
  std::vector<Vec> basis;
  std::size_t nullity() const { return basis.size(); }
};

// Exact kernel. Over Q the work is done modulo 2^61-1, lifted by rational
// reconstruction and accepted only after exact verification; otherwise the
// exact elimination runs.
Kernel kernel(const LinearSystem& sys);
std::size_t rank(const LinearSystem& sys);

std::size_t rank_of_rows(const Field& f, std::size_t ncols, const std::vector<Vec>& rows);
Kernel kernel_of_rows(const Field& f, std::size_t ncols, const std::vector<Vec>& rows);

// Incremental exact row space.
class RowSpace {
 public:
  RowSpace(Field f, std::size_t ncols);
  ~RowSpace();
  RowSpace(RowSpace&&) noexcept;
  RowSpace& operator=(RowSpace&&) noexcept;

  // True when v was independent of the rows inserted so far.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t rank() const;
  std::size_t ncols() const { return ncols_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::size_t ncols_;
};

// Statistics of the last kernel() call in this thread, used by tests.
struct KernelStats {
  bool modular_path = false;
  bool fell_back = false;
};
KernelStats last_kernel_stats();

}  // namespace ropelab
