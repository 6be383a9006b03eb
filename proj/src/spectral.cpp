#include "pds/spectral.hpp"

#include "pds/errors.hpp"
#include "pds/kernels/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace pds {

std::uint64_t kernel_size_formula(int n) {
  std::uint64_t size = 1;
  for (int i = 1; i <= n; ++i) size *= static_cast<std::uint64_t>(2 * i);
  return size;
}

bool satisfies_kernel_condition(std::span<const int> y, int p) {
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  for (int v : y) {
    seen[static_cast<std::size_t>(mod(v, p))] = true;
    seen[static_cast<std::size_t>(mod(-v, p))] = true;
  }
  for (int r = 1; r < p; ++r) {
    if (!seen[static_cast<std::size_t>(r)]) return false;
  }
  return !seen[0];
}

CyclotomicElement eigenvalue_factor(const FrequencyVector& y, int p) {
  CyclotomicElement lambda(p);
  lambda.add_power(0);
  for (int v : y.y) {
    lambda.add_power(v);
    lambda.add_power(-v);
  }
  return lambda;
}

double eigenvalue_numeric(const FrequencyVector& y, int p) {
  double value = 1.0;
  for (int v : y.y) value += 2.0 * std::cos(2.0 * std::numbers::pi * v / p);
  return value;
}

bool is_kernel(const FrequencyVector& y, const TorusParams& params) {
  params.require_prime("is_kernel");
  validate_point(TorusPoint{y.y}, params);
  const bool by_condition = satisfies_kernel_condition(y.y, params.p());
  const bool by_cyclotomic = eigenvalue_factor(y, params.p()).is_zero();
  if (by_condition != by_cyclotomic) {
    throw std::logic_error("kernel tests disagree at y=" + std::to_string(index_of(TorusPoint{y.y}, params)));
  }
  return by_condition;
}

KernelSet enumerate_kernel(const TorusParams& params) {
  params.require_prime("enumerate_kernel");
  const int n = params.n();
  const int p = params.p();
  std::vector<int> magnitudes(static_cast<std::size_t>(n));
  std::iota(magnitudes.begin(), magnitudes.end(), 1);

  std::vector<std::pair<VertexIndex, FrequencyVector>> found;
  found.reserve(kernel_size_formula(n));
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      FrequencyVector y;
      y.y.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const int m = magnitudes[static_cast<std::size_t>(i)];
        y.y[static_cast<std::size_t>(i)] = (signs >> i) & 1u ? p - m : m;
      }
      if (!is_kernel(y, params)) {
        throw std::logic_error("signed permutation outside the kernel set");
      }
      const VertexIndex idx = index_of(TorusPoint{y.y}, params);
      found.emplace_back(idx, std::move(y));
    }
  } while (std::next_permutation(magnitudes.begin(), magnitudes.end()));

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  KernelSet kernel{params, {}};
  kernel.members.reserve(found.size());
  for (auto& [idx, y] : found) kernel.members.push_back(std::move(y));
  return kernel;
}

kernels::IntegerMatrix adjacency_plus_identity(const TorusParams& params) {
  const VertexIndex m = params.num_vertices();
  kernels::IntegerMatrix matrix(m, m);
  for (VertexIndex v = 0; v < m; ++v) {
    for (VertexIndex u : closed_ball_indices(v, params)) matrix.at(v, u) = 1;
  }
  return matrix;
}

std::size_t rank_A_plus_I(const TorusParams& params, VertexIndex guard, Execution exec) {
  if (params.num_vertices() > guard) {
    throw ResourceLimitError("rank of A+I: p^n=" + std::to_string(params.num_vertices()) +
                             " exceeds guard " + std::to_string(guard));
  }
  auto matrix = adjacency_plus_identity(params);
  return exec == Execution::Serial ? kernels::serial::bareiss_rank(std::move(matrix))
                                   : kernels::omp::bareiss_rank(std::move(matrix));
}

std::vector<FrequencyVector> fourier_support(const CodeSet& code, std::uint64_t guard,
                                             Execution exec) {
  const TorusParams& params = code.params();
  params.require_prime("fourier_support");
  const std::uint64_t work = static_cast<std::uint64_t>(code.size()) * params.num_vertices();
  if (work > guard) {
    throw ResourceLimitError("fourier_support: |code|*p^n=" + std::to_string(work) +
                             " exceeds guard " + std::to_string(guard));
  }
  const auto support = exec == Execution::Serial ? kernels::serial::fourier_support(code)
                                                 : kernels::omp::fourier_support(code);
  std::vector<FrequencyVector> out;
  out.reserve(support.size());
  for (VertexIndex f : support) out.push_back(FrequencyVector{point_of(f, params).coords});
  return out;
}

}  // namespace pds
