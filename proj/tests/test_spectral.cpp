#include "oracles.hpp"
#include "pds/errors.hpp"
#include "pds/kernels/bareiss.hpp"
#include "pds/kernels/fourier.hpp"
#include "pds/linear_codes.hpp"
#include "pds/spectral.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace pds;

namespace {

FrequencyVector fv(std::initializer_list<int> y) { return FrequencyVector{std::vector<int>(y)}; }

std::vector<std::int64_t> coeffs(const CyclotomicElement& e) { return {e.coeffs().begin(), e.coeffs().end()}; }

// Condition checked as a set equation, independent of the library helper.
bool kernel_by_sets(const std::vector<int>& y, int p) {
  std::set<int> got;
  for (int v : y) {
    got.insert(((v % p) + p) % p);
    got.insert(((-v % p) + p) % p);
  }
  std::set<int> want;
  for (int r = 1; r < p; ++r) want.insert(r);
  return got == want;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  const auto w2 = CyclotomicElement::power(5, 2);
  const auto w4 = CyclotomicElement::power(5, 4);
  CHECK(coeffs(w2 * w4) == std::vector<std::int64_t>{0, 1, 0, 0, 0});
  CHECK(coeffs(w2 + w4) == std::vector<std::int64_t>{0, 0, 1, 0, 1});
  CyclotomicElement all(5, {1, 1, 1, 1, 1});
  CHECK(all.is_zero());
  CHECK_FALSE(w2.is_zero());
  CHECK(coeffs(CyclotomicElement(5, {3, 4, 3, 5, 3}).reduced()) == std::vector<std::int64_t>{0, 1, 0, 2, 0});
  CHECK_THROWS_AS(CyclotomicElement(9).is_zero(), UnsupportedParametersError);
  CHECK_THROWS_AS(CyclotomicElement(5, {1, 2}), InvalidInputError);
  CHECK(std::abs(all.to_complex()) < 1e-12);
  CHECK(std::abs(w2.to_complex() - std::polar(1.0, 4.0 * std::numbers::pi / 5)) < 1e-12);
}

TEST_CASE("eigenvalue_factor examples") {
  CHECK(coeffs(eigenvalue_factor(fv({1, 2}), 5)) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(coeffs(eigenvalue_factor(fv({1, 1}), 5)) == std::vector<std::int64_t>{1, 2, 0, 0, 2});
  CHECK(coeffs(eigenvalue_factor(fv({0, 0}), 5)) == std::vector<std::int64_t>{5, 0, 0, 0, 0});
}

TEST_CASE("is_kernel examples") {
  const TorusParams p5(5);
  CHECK(is_kernel(fv({1, 2}), p5));
  CHECK_FALSE(is_kernel(fv({1, 1}), p5));
  CHECK_FALSE(is_kernel(fv({0, 3}), p5));
  CHECK_THROWS_AS(is_kernel(fv({1, 2, 3, 4}), TorusParams(9)), UnsupportedParametersError);
}

TEST_CASE("both kernel routes agree on every frequency") {
  for (int p : {3, 5, 7}) {
    const TorusParams params(p);
    std::size_t count = 0;
    for (const auto& y : oracle::all_points(params)) {
      const FrequencyVector f{y.coords};
      const bool member = is_kernel(f, params);  // throws if the routes disagree
      CHECK(member == kernel_by_sets(y.coords, p));
      CHECK(member == (std::abs(eigenvalue_numeric(f, p)) < 1e-9));
      count += member ? 1 : 0;
    }
    CHECK(count == kernel_size_formula(params.n()));
  }
}

TEST_CASE("enumerate_kernel") {
  const auto k3 = enumerate_kernel(TorusParams(3));
  CHECK(k3.members == std::vector<FrequencyVector>{fv({1}), fv({2})});
  CHECK(enumerate_kernel(TorusParams(5)).members.size() == 8);
  CHECK(enumerate_kernel(TorusParams(7)).members.size() == 48);
  CHECK_THROWS_AS(enumerate_kernel(TorusParams(9)), UnsupportedParametersError);

  // Same set as an exhaustive scan, in index order.
  for (int p : {3, 5, 7}) {
    const TorusParams params(p);
    std::vector<FrequencyVector> scan;
    for (const auto& y : oracle::all_points(params)) {
      if (kernel_by_sets(y.coords, p)) scan.push_back(FrequencyVector{y.coords});
    }
    CHECK(enumerate_kernel(params).members == scan);
  }
}

TEST_CASE("kernel at n=5 has 3840 members") {
  const TorusParams p11(11);
  const auto kernel = enumerate_kernel(p11);
  CHECK(kernel.members.size() == 3840);
  CHECK(kernel_size_formula(5) == 3840);
  std::set<FrequencyVector> distinct(kernel.members.begin(), kernel.members.end());
  CHECK(distinct.size() == 3840);
  for (std::size_t i = 0; i < kernel.members.size(); i += 97) {
    CHECK(kernel_by_sets(kernel.members[i].y, 11));
    CHECK(std::abs(eigenvalue_numeric(kernel.members[i], 11)) < 1e-9);
  }
  // spot checks outside the kernel
  CHECK_FALSE(is_kernel(fv({1, 2, 3, 4, 4}), p11));
  CHECK_FALSE(is_kernel(fv({1, 2, 3, 4, 0}), p11));
  CHECK(is_kernel(fv({10, 2, 8, 4, 5}), p11));
}

TEST_CASE("Bareiss rank matches rational elimination") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> dim(1, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(dim(rng));
    const std::size_t cols = static_cast<std::size_t>(dim(rng));
    const std::size_t true_rank = std::min<std::size_t>(static_cast<std::size_t>(dim(rng)), std::min(rows, cols));
    // product of rows x r and r x cols integer matrices, rank <= r
    std::vector<std::vector<int>> left(rows, std::vector<int>(true_rank));
    std::vector<std::vector<int>> right(true_rank, std::vector<int>(cols));
    for (auto& r : left)
      for (auto& v : r) v = entry(rng);
    for (auto& r : right)
      for (auto& v : r) v = entry(rng);
    kernels::IntegerMatrix m(rows, cols);
    std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        long s = 0;
        for (std::size_t t = 0; t < true_rank; ++t) s += left[i][t] * right[t][j];
        m.at(i, j) = s;
        q[i][j] = s;
      }
    }
    const std::size_t expected = oracle::rational_rank(q);
    CHECK(kernels::serial::bareiss_rank(m) == expected);
    CHECK(kernels::omp::bareiss_rank(m) == expected);
  }
}

TEST_CASE("rank of A+I") {
  for (int p : {3, 5}) {
    const TorusParams params(p);
    const std::size_t expected = oracle::rational_rank(oracle::adjacency_plus_identity(params));
    CHECK(rank_A_plus_I(params, kDefaultRankGuard, Execution::Serial) == expected);
    CHECK(rank_A_plus_I(params) == expected);
    CHECK(expected == params.num_vertices() - kernel_size_formula(params.n()));
  }
  CHECK(rank_A_plus_I(TorusParams(3)) == 1);
  CHECK(rank_A_plus_I(TorusParams(5)) == 17);
  CHECK_THROWS_AS(rank_A_plus_I(TorusParams(7), 100), ResourceLimitError);
}

TEST_CASE("fourier_support examples") {
  const TorusParams p5(5);
  const auto support = fourier_support(build_eq1(Eq1Spec{{1}, 0}, p5));
  // multiples of the normal (2,4) of 2x_1 - x_2 = 0
  std::vector<FrequencyVector> expected;
  for (int t = 0; t < 5; ++t) expected.push_back(fv({mod(2 * t, 5), mod(4 * t, 5)}));
  std::sort(expected.begin(), expected.end());
  CHECK(support == expected);

  CHECK(fourier_support(CodeSet::full(p5)) == std::vector<FrequencyVector>{fv({0, 0})});
  CodeSet delta(p5);
  delta.insert(0);
  CHECK(fourier_support(delta).size() == 25);

  CHECK_THROWS_AS(fourier_support(CodeSet::full(p5), 10), ResourceLimitError);
}

TEST_CASE("fourier_support agrees with a floating-point DFT") {
  std::mt19937 rng(99);
  for (int p : {3, 5, 7}) {
    const TorusParams params(p);
    for (int trial = 0; trial < 4; ++trial) {
      const CodeSet code = oracle::random_code(params, 0.15, rng);
      const auto serial = fourier_support(code, kDefaultFourierGuard, Execution::Serial);
      CHECK(serial == fourier_support(code));
      std::vector<FrequencyVector> numeric;
      for (const auto& y : oracle::all_points(params)) {
        if (oracle::fourier_magnitude(code.points(), y.coords, p) > 1e-6) numeric.push_back(FrequencyVector{y.coords});
      }
      CHECK(serial == numeric);
    }
  }
}

TEST_CASE("support of signed codes lies in {0} and the kernel") {
  for (int p : {5, 7}) {
    const TorusParams params(p);
    const auto kernel = enumerate_kernel(params);
    std::set<FrequencyVector> allowed(kernel.members.begin(), kernel.members.end());
    allowed.insert(FrequencyVector{std::vector<int>(static_cast<std::size_t>(params.n()), 0)});
    for (const auto& spec : all_eq1_specs(params)) {
      for (const auto& y : fourier_support(build_eq1(spec, params))) CHECK(allowed.count(y) == 1);
    }
  }
}
