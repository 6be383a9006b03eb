#include "pds/kernels/bareiss.hpp"

#include <cstdint>
#include <optional>

namespace pds::kernels {

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) swap(at(a, c), at(b, c));
}

namespace {

std::optional<std::size_t> find_pivot(const IntegerMatrix& m, std::size_t from, std::size_t col) {
  for (std::size_t r = from; r < m.rows(); ++r) {
    if (sgn(m.at(r, col)) != 0) return r;
  }
  return std::nullopt;
}

// row <- (pivot * row - row[col] * pivot_row) / previous, for columns > col.
void eliminate_row(IntegerMatrix& m, std::size_t row, std::size_t pivot_row, std::size_t col,
                   const mpz_class& previous, mpz_class& scratch) {
  const mpz_class& pivot = m.at(pivot_row, col);
  const mpz_class factor = m.at(row, col);
  const bool factor_zero = sgn(factor) == 0;
  for (std::size_t c = col + 1; c < m.cols(); ++c) {
    mpz_class& entry = m.at(row, c);
    mpz_mul(entry.get_mpz_t(), entry.get_mpz_t(), pivot.get_mpz_t());
    if (!factor_zero) {
      mpz_mul(scratch.get_mpz_t(), factor.get_mpz_t(), m.at(pivot_row, c).get_mpz_t());
      mpz_sub(entry.get_mpz_t(), entry.get_mpz_t(), scratch.get_mpz_t());
    }
    mpz_divexact(entry.get_mpz_t(), entry.get_mpz_t(), previous.get_mpz_t());
  }
  m.at(row, col) = 0;
}

template <bool Parallel>
std::size_t bareiss_rank_impl(IntegerMatrix m) {
  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    const auto pivot = find_pivot(m, rank, col);
    if (!pivot) continue;
    m.swap_rows(rank, *pivot);
    const auto first = static_cast<std::int64_t>(rank + 1);
    const auto last = static_cast<std::int64_t>(m.rows());
    if constexpr (Parallel) {
#pragma omp parallel
      {
        mpz_class scratch;
#pragma omp for schedule(dynamic, 4)
        for (std::int64_t r = first; r < last; ++r) {
          eliminate_row(m, static_cast<std::size_t>(r), rank, col, previous, scratch);
        }
      }
    } else {
      mpz_class scratch;
      for (std::int64_t r = first; r < last; ++r) {
        eliminate_row(m, static_cast<std::size_t>(r), rank, col, previous, scratch);
      }
    }
    previous = m.at(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace

namespace serial {
std::size_t bareiss_rank(IntegerMatrix m) { return bareiss_rank_impl<false>(std::move(m)); }
}  // namespace serial

namespace omp {
std::size_t bareiss_rank(IntegerMatrix m) { return bareiss_rank_impl<true>(std::move(m)); }
}  // namespace omp

}  // namespace pds::kernels
