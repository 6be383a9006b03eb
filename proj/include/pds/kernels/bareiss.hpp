#pragma once

// Exact rank over Q by fraction-free (Bareiss) elimination on integer
// matrices. Every intermediate entry is a minor of the input, so all
// divisions are exact and no rationals are formed.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace pds::kernels {

class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpz_class> data_;
};

namespace serial {
std::size_t bareiss_rank(IntegerMatrix m);
}  // namespace serial

namespace omp {
// Row updates below each pivot run in parallel.
std::size_t bareiss_rank(IntegerMatrix m);
}  // namespace omp

}  // namespace pds::kernels
