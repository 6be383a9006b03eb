#include "oracles.hpp"
#include "pds/errors.hpp"
#include "pds/linear_codes.hpp"
#include "pds/verifier.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace pds;

namespace {

TorusPoint pt(std::initializer_list<int> c) { return TorusPoint{std::vector<int>(c)}; }

std::vector<TorusPoint> sorted(std::vector<TorusPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Independent restatement of the absolute-value condition.
bool satisfies_condition(const std::vector<int>& a, int p) {
  std::set<int> abs_values;
  for (int v : a) abs_values.insert(std::min(v, p - v));
  std::set<int> want;
  for (int i = 1; i <= static_cast<int>(a.size()); ++i) want.insert(i);
  return abs_values == want;
}

// Lexicographically least (normal, k) among all perfect normals and offsets
// whose hyperplane, built by full scan, equals the code.
std::optional<HyperplaneSpec> brute_force_classify(const CodeSet& code) {
  const TorusParams& params = code.params();
  const auto target = sorted(code.points());
  std::optional<HyperplaneSpec> best;
  for (const auto& a : oracle::all_points(params)) {
    if (!satisfies_condition(a.coords, params.p())) continue;
    for (int k = 0; k < params.p(); ++k) {
      if (sorted(oracle::hyperplane_points(a.coords, k, params)) == target) {
        HyperplaneSpec h{a.coords, k};
        if (!best || h < *best) best = h;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("build_eq1 examples") {
  const TorusParams p5(5);
  CHECK(build_eq1(Eq1Spec{{1}, 0}, p5).points() ==
        sorted({pt({0, 0}), pt({1, 2}), pt({2, 4}), pt({3, 1}), pt({4, 3})}));
  CHECK(build_eq1(Eq1Spec{{}, 2}, TorusParams(3)).points() == std::vector<TorusPoint>{pt({2})});

  const TorusParams p7(7);
  const CodeSet c = build_eq1(Eq1Spec{{1, -1}, 0}, p7);
  std::vector<TorusPoint> expected;
  for (int x1 = 0; x1 < 7; ++x1) {
    for (int x2 = 0; x2 < 7; ++x2) expected.push_back(pt({x1, x2, mod(2 * x1 - 3 * x2, 7)}));
  }
  CHECK(c.points() == sorted(expected));
  CHECK(oracle::perfect(c.points(), p7));
}

TEST_CASE("build_eq1 errors") {
  CHECK_THROWS_AS(build_eq1(Eq1Spec{{1, 1, 1}, 0}, TorusParams(9)), UnsupportedParametersError);
  CHECK_THROWS_AS(build_eq1(Eq1Spec{{1, 1}, 0}, TorusParams(5)), InvalidInputError);
  CHECK_THROWS_AS(build_eq1(Eq1Spec{{2}, 0}, TorusParams(5)), InvalidInputError);
  CHECK_THROWS_AS(build_eq1(Eq1Spec{{1}, 5}, TorusParams(5)), InvalidInputError);
}

TEST_CASE("build_hyperplane examples") {
  const TorusParams p5(5), p7(7);
  CHECK(build_hyperplane(HyperplaneSpec{{2, 4}, 0}, p5) == build_eq1(Eq1Spec{{1}, 0}, p5));

  const CodeSet h = build_hyperplane(HyperplaneSpec{{1, 3, 2}, 0}, p7);
  CHECK(h.points() == sorted(oracle::hyperplane_points({1, 3, 2}, 0, p7)));
  CHECK(oracle::perfect(h.points(), p7));
  for (const auto& spec : all_eq1_specs(p7)) CHECK_FALSE(build_eq1(spec, p7) == h);

  CHECK_THROWS_AS(build_hyperplane(HyperplaneSpec{{1, 1}, 0}, p5), InvalidInputError);
  CHECK_THROWS_AS(build_hyperplane(HyperplaneSpec{{1, 0, 2}, 0}, p7), InvalidInputError);
  CHECK_THROWS_AS(build_hyperplane(HyperplaneSpec{{1, 2}, 7}, p5), InvalidInputError);
}

TEST_CASE("build_hyperplane matches a full scan for every perfect normal") {
  for (int p : {3, 5, 7}) {
    const TorusParams params(p);
    const auto normals = all_perfect_normals(params);
    CHECK(normals.size() == static_cast<std::size_t>(params.n() == 1 ? 2 : params.n() == 2 ? 8 : 48));
    for (const auto& a : normals) {
      CHECK(satisfies_condition(a, p));
      for (int k = 0; k < p; ++k) {
        const CodeSet code = build_hyperplane(HyperplaneSpec{a, k}, params);
        CHECK(code.points() == sorted(oracle::hyperplane_points(a, k, params)));
        CHECK(is_perfect(code).perfect);
      }
    }
  }
}

TEST_CASE("signed codes are perfect") {
  for (int p : {3, 5, 7}) {
    const TorusParams params(p);
    for (const auto& spec : all_eq1_specs(params)) CHECK(oracle::perfect(build_eq1(spec, params).points(), params));
  }
  const TorusParams p11(11);
  const auto specs = all_eq1_specs(p11);
  CHECK(specs.size() == 176);
  for (std::size_t i = 0; i < specs.size(); i += 7) CHECK(is_perfect(build_eq1(specs[i], p11)).perfect);
}

TEST_CASE("signed code equals its hyperplane") {
  for (int p : {3, 5, 7}) {
    const TorusParams params(p);
    for (const auto& spec : all_eq1_specs(params)) {
      // x_n - sum eps_i (i+1) x_i = k
      std::vector<int> a;
      for (int i = 1; i < params.n(); ++i) a.push_back(mod(-spec.eps[i - 1] * (i + 1), p));
      a.push_back(1);
      CHECK(build_eq1(spec, params).points() == sorted(oracle::hyperplane_points(a, spec.k, params)));
      CHECK(eq1_hyperplane(spec, params) == HyperplaneSpec{a, spec.k});
    }
  }
}

TEST_CASE("distinct signed specs give distinct codes") {
  for (int p : {3, 5, 7}) {
    const TorusParams params(p);
    std::vector<CodeSet> codes;
    for (const auto& spec : all_eq1_specs(params)) codes.push_back(build_eq1(spec, params));
    std::sort(codes.begin(), codes.end(), code_less);
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
    CHECK(codes.size() == (std::size_t{1} << (params.n() - 1)) * static_cast<std::size_t>(p));
  }
}

TEST_CASE("hyperplane is invariant under scaling") {
  for (int p : {5, 7}) {
    const TorusParams params(p);
    for (const auto& a : all_perfect_normals(params)) {
      const CodeSet base = build_hyperplane(HyperplaneSpec{a, 1}, params);
      for (int t = 1; t < p; ++t) {
        std::vector<int> ta;
        for (int v : a) ta.push_back(mod(t * v, p));
        CHECK(build_hyperplane(HyperplaneSpec{ta, mod(t, p)}, params) == base);
      }
    }
  }
}

TEST_CASE("dominator_of examples") {
  const TorusParams p5(5);
  const Eq1Spec spec{{1}, 0};
  CHECK(dominator_of(spec, pt({1, 0}), p5) == pt({0, 0}));
  CHECK(dominator_of(spec, pt({1, 2}), p5) == pt({1, 2}));
  CHECK(dominator_of(spec, pt({1, 1}), p5) == pt({1, 2}));
  CHECK_THROWS_AS(dominator_of(Eq1Spec{{1, 1, 1}, 0}, pt({0, 0, 0, 0}), TorusParams(9)),
                  UnsupportedParametersError);
}

TEST_CASE("dominator_of lands in the code and dominates y") {
  for (int p : {3, 5, 7}) {
    const TorusParams params(p);
    for (const auto& spec : all_eq1_specs(params)) {
      const CodeSet code = build_eq1(spec, params);
      for (const auto& y : oracle::all_points(params)) {
        const TorusPoint d = dominator_of(spec, y, params);
        CHECK(code.contains(d));
        CHECK(oracle::dominates(d, y, p));
      }
    }
  }
  const TorusParams p11(11);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coord(0, 10);
  const auto specs = all_eq1_specs(p11);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto& spec = specs[static_cast<std::size_t>(trial) % specs.size()];
    TorusPoint y;
    for (int i = 0; i < 5; ++i) y.coords.push_back(coord(rng));
    const TorusPoint d = dominator_of(spec, y, p11);
    CHECK(oracle::dominates(d, y, 11));
    long long last = spec.k;
    for (int i = 1; i < 5; ++i) last += spec.eps[i - 1] * (i + 1) * d.coords[i - 1];
    CHECK(mod(last, 11) == d.coords[4]);
  }
}

TEST_CASE("classify examples against brute force") {
  const TorusParams p5(5), p7(7);
  const CodeSet eq1 = build_eq1(Eq1Spec{{1}, 0}, p5);
  const auto h = classify(eq1);
  REQUIRE(h);
  CHECK(*h == brute_force_classify(eq1));
  CHECK(*h == HyperplaneSpec{{1, 2}, 0});

  const CodeSet h132 = build_hyperplane(HyperplaneSpec{{1, 3, 2}, 3}, p7);
  CHECK(classify(h132) == HyperplaneSpec{{1, 3, 2}, 3});
  CHECK(classify(h132) == brute_force_classify(h132));

  // Every hyperplane at p=5 classifies to its brute-force orbit minimum.
  for (const auto& a : all_perfect_normals(p5)) {
    for (int k = 0; k < 5; ++k) {
      const CodeSet code = build_hyperplane(HyperplaneSpec{a, k}, p5);
      CHECK(classify(code) == brute_force_classify(code));
      CHECK(classify(code) == canonical(HyperplaneSpec{a, k}, p5));
    }
  }
}

TEST_CASE("classify rejects imperfect input") {
  const TorusParams p5(5);
  CodeSet code = build_eq1(Eq1Spec{{1}, 0}, p5);
  code.erase(pt({0, 0}));
  CHECK_THROWS_AS(classify(code), InvalidInputError);
}

TEST_CASE("match_eq1") {
  for (int p : {3, 5, 7}) {
    const TorusParams params(p);
    for (const auto& spec : all_eq1_specs(params)) CHECK(match_eq1(build_eq1(spec, params)) == spec);
  }
  CHECK_FALSE(match_eq1(build_hyperplane(HyperplaneSpec{{1, 3, 2}, 0}, TorusParams(7))));
}

TEST_CASE("text forms") {
  CHECK(to_string(Eq1Spec{{1, -1, 1}, 3}) == "eps=+-+ k=3");
  CHECK(to_string(HyperplaneSpec{{1, 3, 2}, 3}) == "a=1,3,2 k=3");
  CHECK(parse_signs("+-") == std::vector<int>{1, -1});
  CHECK(parse_signs("").empty());
  CHECK_THROWS_AS(parse_signs("+x"), InvalidInputError);
}
