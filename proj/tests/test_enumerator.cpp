#include "oracles.hpp"
#include "pds/code_io.hpp"
#include "pds/enumerator.hpp"
#include "pds/errors.hpp"
#include "pds/kernels/exact_cover.hpp"
#include "pds/linear_codes.hpp"
#include "pds/spectral.hpp"
#include "pds/verifier.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <set>

using namespace pds;
namespace fs = std::filesystem;

namespace {

// Distinct hyperplane point sets over all perfect normals and offsets.
std::set<std::vector<TorusPoint>> hyperplane_sets(const TorusParams& params) {
  std::set<std::vector<TorusPoint>> out;
  for (const auto& a : oracle::all_points(params)) {
    std::set<int> abs_values;
    for (int v : a.coords) abs_values.insert(std::min(v, params.p() - v));
    if (abs_values.size() != static_cast<std::size_t>(params.n()) || abs_values.count(0) ||
        *abs_values.rbegin() != params.n()) {
      continue;
    }
    for (int k = 0; k < params.p(); ++k) out.insert(oracle::hyperplane_points(a.coords, k, params));
  }
  return out;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const char* name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("enumerate p=3") {
  const TorusParams p3(3);
  const auto family = enumerate_all(p3);
  REQUIRE(family.codes.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(family.codes[i].indices() == std::vector<VertexIndex>{static_cast<VertexIndex>(i)});
  CHECK(family.complete);
}

TEST_CASE("enumerate p=5 matches the hyperplane count") {
  const TorusParams p5(5);
  const auto family = enumerate_all(p5);
  CHECK(family.codes.size() == 10);
  const auto planes = hyperplane_sets(p5);
  CHECK(planes.size() == 10);
  CHECK(kernel_size_formula(2) * 5 / 4 == 10);
  for (const auto& code : family.codes) {
    CHECK(planes.count(code.points()) == 1);
    CHECK(match_eq1(code).has_value());
    CHECK(oracle::perfect(code.points(), p5));
    CHECK(check_line_property(code).holds);
  }
}

TEST_CASE("enumerate p=7 matches the hyperplane count") {
  const TorusParams p7(7);
  const auto family = enumerate_all(p7);
  CHECK(family.codes.size() == 56);
  const auto planes = hyperplane_sets(p7);
  CHECK(planes.size() == 56);
  CHECK(kernel_size_formula(3) * 7 / 6 == 56);
  std::size_t eq1 = 0;
  for (const auto& code : family.codes) {
    CHECK(planes.count(code.points()) == 1);
    CHECK(classify(code).has_value());
    CHECK(check_line_property(code).holds);
    eq1 += match_eq1(code) ? 1 : 0;
  }
  CHECK(eq1 == 28);
}

TEST_CASE("pruning and parallelism do not change the family") {
  for (int p : {3, 5, 7}) {
    const TorusParams params(p);
    const auto reference = kernels::serial::ball_partitions(params, false);
    CHECK(kernels::serial::ball_partitions(params, true) == reference);
    CHECK(kernels::omp::ball_partitions(params, false) == reference);
    CHECK(kernels::omp::ball_partitions(params, true) == reference);
  }
  kernels::ExactCoverStats pruned, unpruned;
  kernels::serial::ball_partitions(TorusParams(7), true, &pruned);
  kernels::serial::ball_partitions(TorusParams(7), false, &unpruned);
  CHECK(pruned.nodes > 0);
  CHECK(pruned.nodes <= unpruned.nodes);
}

TEST_CASE("enumeration errors") {
  CHECK_THROWS_AS(enumerate_all(TorusParams(9)), ResourceLimitError);
  EnumerateOptions opts;
  opts.guard = 10000;
  opts.prune_lines = true;
  CHECK_THROWS_AS(enumerate_all(TorusParams(9), opts), UnsupportedParametersError);
}

TEST_CASE("orbit decomposition") {
  auto r3 = orbit_decomposition(enumerate_all(TorusParams(3)));
  CHECK(r3.orbit_sizes == std::vector<std::size_t>{3});
  CHECK(r3.translation_orbit_sizes == std::vector<std::size_t>{3});

  auto r5 = orbit_decomposition(enumerate_all(TorusParams(5)));
  CHECK(r5.translation_orbit_sizes == std::vector<std::size_t>{5, 5});
  CHECK(r5.orbit_sizes == std::vector<std::size_t>{10});

  const auto family7 = enumerate_all(TorusParams(7));
  auto r7 = orbit_decomposition(family7);
  std::size_t total = 0;
  for (auto s : r7.orbit_sizes) total += s;
  CHECK(total == 56);
  CHECK(r7.translation_orbit_sizes.size() == 8);
  CHECK(r7.orbit_of.size() == 56);

  CodeFamily partial = family7;
  partial.complete = false;
  CHECK_THROWS_AS(orbit_decomposition(partial), InvalidInputError);
  // Dropping a member breaks closure.
  CodeFamily missing = family7;
  missing.codes.pop_back();
  CHECK_THROWS_AS(orbit_decomposition(missing), std::logic_error);
}

TEST_CASE("family cache") {
  TempDir dir("pds_cache_test");
  const TorusParams p5(5);
  const auto first = load_or_enumerate(dir.path, p5);
  CHECK_FALSE(first.cache_hit);
  CHECK(first.path == dir.path / "p5n2.family");
  CHECK(fs::exists(first.path));
  const auto second = load_or_enumerate(dir.path, p5);
  CHECK(second.cache_hit);
  CHECK(second.family.codes == first.family.codes);
  CHECK(read_text_file(first.path).rfind("pds-family v1 p=5 n=2 count=10 complete=1\n", 0) == 0);

  // A cached member that is not perfect is detected.
  write_text_file(dir.path / "p3n1.family", "pds-family v1 p=3 n=1 count=1 complete=1\n\np=3 n=1\n0\n1\n");
  CHECK_THROWS_AS(load_or_enumerate(dir.path, TorusParams(3)), InvalidInputError);
  // Unsorted members are rejected.
  write_text_file(dir.path / "p3n1.family",
                  "pds-family v1 p=3 n=1 count=2 complete=1\n\np=3 n=1\n1\n\np=3 n=1\n0\n");
  CHECK_THROWS_AS(load_or_enumerate(dir.path, TorusParams(3)), InvalidInputError);
}
