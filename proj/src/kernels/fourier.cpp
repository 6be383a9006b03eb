#include "pds/kernels/fourier.hpp"

#include <cstdint>

namespace pds::kernels {

namespace {

// Codewords as flat coordinate rows.
std::vector<int> codeword_table(const CodeSet& code) {
  const TorusParams& params = code.params();
  std::vector<int> table;
  table.reserve(code.size() * static_cast<std::size_t>(params.n()));
  for (VertexIndex v : code.indices()) {
    for (int axis = 0; axis < params.n(); ++axis) table.push_back(coordinate_of(v, axis, params));
  }
  return table;
}

void tally(const std::vector<int>& table, const TorusParams& params, VertexIndex frequency,
           std::vector<int>& y, CyclotomicElement& out) {
  const int n = params.n();
  const int p = params.p();
  for (int axis = 0; axis < n; ++axis) y[axis] = coordinate_of(frequency, axis, params);
  for (std::size_t row = 0; row < table.size(); row += static_cast<std::size_t>(n)) {
    long long dot = 0;
    for (int axis = 0; axis < n; ++axis) dot += static_cast<long long>(table[row + axis]) * y[axis];
    out.add_power(-(dot % p));
  }
}

}  // namespace

CyclotomicElement fourier_coefficient(const CodeSet& code, VertexIndex frequency) {
  const auto table = codeword_table(code);
  std::vector<int> y(static_cast<std::size_t>(code.params().n()));
  CyclotomicElement out(code.params().p());
  tally(table, code.params(), frequency, y, out);
  return out;
}

namespace serial {

std::vector<VertexIndex> fourier_support(const CodeSet& code) {
  const TorusParams& params = code.params();
  params.require_prime("fourier_support");
  const auto table = codeword_table(code);
  std::vector<int> y(static_cast<std::size_t>(params.n()));
  std::vector<VertexIndex> support;
  for (VertexIndex f = 0; f < params.num_vertices(); ++f) {
    CyclotomicElement c(params.p());
    tally(table, params, f, y, c);
    if (!c.is_zero()) support.push_back(f);
  }
  return support;
}

}  // namespace serial

namespace omp {

std::vector<VertexIndex> fourier_support(const CodeSet& code) {
  const TorusParams& params = code.params();
  params.require_prime("fourier_support");
  const auto table = codeword_table(code);
  const auto m = static_cast<std::int64_t>(params.num_vertices());
  std::vector<std::uint8_t> nonzero(static_cast<std::size_t>(m), 0);
#pragma omp parallel
  {
    std::vector<int> y(static_cast<std::size_t>(params.n()));
#pragma omp for schedule(static)
    for (std::int64_t f = 0; f < m; ++f) {
      CyclotomicElement c(params.p());
      tally(table, params, static_cast<VertexIndex>(f), y, c);
      nonzero[static_cast<std::size_t>(f)] = c.is_zero() ? 0 : 1;
    }
  }
  std::vector<VertexIndex> support;
  for (std::int64_t f = 0; f < m; ++f) {
    if (nonzero[static_cast<std::size_t>(f)]) support.push_back(static_cast<VertexIndex>(f));
  }
  return support;
}

}  // namespace omp

}  // namespace pds::kernels
