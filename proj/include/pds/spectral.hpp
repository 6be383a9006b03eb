#pragma once

// Character theory of the torus graph.
//
// The characters chi_y(x) = w^(x.y) diagonalize A+I with eigenvalue
//   lambda(y) = 1 + sum_i (w^(y_i) + w^(-y_i)),
// an element of Z[w]. For prime p, lambda(y) = 0 exactly when
// {±y_1,...,±y_n} = {1,...,p-1}; those y form the kernel set, of size n! 2^n.

#include "pds/cyclotomic.hpp"
#include "pds/execution.hpp"
#include "pds/kernels/bareiss.hpp"
#include "pds/torus.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pds {

struct FrequencyVector {
  std::vector<int> y;
  friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;
  friend auto operator<=>(const FrequencyVector&, const FrequencyVector&) = default;
};

struct KernelSet {
  TorusParams params;
  std::vector<FrequencyVector> members;  // sorted by index
};

inline constexpr VertexIndex kDefaultRankGuard = 500;
inline constexpr std::uint64_t kDefaultFourierGuard = 100'000'000;

// n! 2^n
std::uint64_t kernel_size_formula(int n);

// {±y_i} covers every nonzero residue.
bool satisfies_kernel_condition(std::span<const int> y, int p);

CyclotomicElement eigenvalue_factor(const FrequencyVector& y, int p);

// 1 + 2 sum cos(2 pi y_i / p); a floating-point sanity check only.
double eigenvalue_numeric(const FrequencyVector& y, int p);

// Computes membership by the absolute-value condition and by the cyclotomic
// zero test; throws std::logic_error if they disagree. Prime p only.
bool is_kernel(const FrequencyVector& y, const TorusParams& params);

// Generated from signed permutations of (1,...,n); each member re-checked
// with is_kernel. Prime p only.
KernelSet enumerate_kernel(const TorusParams& params);

kernels::IntegerMatrix adjacency_plus_identity(const TorusParams& params);

// Exact rank over Q of A+I. Throws ResourceLimitError if p^n > guard.
std::size_t rank_A_plus_I(const TorusParams& params, VertexIndex guard = kDefaultRankGuard,
                          Execution exec = Execution::Parallel);

// Frequencies where the code's indicator has a nonzero transform, sorted by
// index. Throws ResourceLimitError if |code| * p^n > guard.
std::vector<FrequencyVector> fourier_support(const CodeSet& code,
                                             std::uint64_t guard = kDefaultFourierGuard,
                                             Execution exec = Execution::Parallel);

}  // namespace pds
