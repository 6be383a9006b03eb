#include "pds/enumerator.hpp"

#include "pds/errors.hpp"
#include "pds/kernels/exact_cover.hpp"
#include "pds/verifier.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace pds {

std::optional<std::size_t> CodeFamily::find(const CodeSet& code) const {
  if (!(code.params() == params)) return std::nullopt;
  auto it = std::lower_bound(codes.begin(), codes.end(), code, code_less);
  if (it == codes.end() || !(*it == code)) return std::nullopt;
  return static_cast<std::size_t>(it - codes.begin());
}

CodeFamily enumerate_all(const TorusParams& params, const EnumerateOptions& options) {
  if (params.num_vertices() > options.guard) {
    throw ResourceLimitError("enumeration: p^n=" + std::to_string(params.num_vertices()) +
                             " exceeds guard " + std::to_string(options.guard));
  }
  if (options.prune_lines) params.require_prime("line-property pruning");

  const auto solutions = options.exec == Execution::Serial
                             ? kernels::serial::ball_partitions(params, options.prune_lines)
                             : kernels::omp::ball_partitions(params, options.prune_lines);
  CodeFamily family{params, {}, true};
  family.codes.reserve(solutions.size());
  for (const auto& centers : solutions) {
    CodeSet code(params, centers);
    if (!is_perfect(code, options.exec).perfect) {
      throw std::logic_error("exact cover produced a non-perfect code");
    }
    family.codes.push_back(std::move(code));
  }
  std::sort(family.codes.begin(), family.codes.end(), code_less);
  return family;
}

namespace {

CodeSet map_points(const CodeSet& code, const std::function<void(TorusPoint&)>& fn) {
  CodeSet out(code.params());
  for (TorusPoint pt : code.points()) {
    fn(pt);
    out.insert(pt);
  }
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t root(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Orbit sizes (ordered by smallest member) and per-member orbit numbers.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> collect(DisjointSets& sets, std::size_t n) {
  std::vector<std::size_t> number(n, n);
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> orbit_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = sets.root(i);
    if (number[r] == n) {
      number[r] = sizes.size();
      sizes.push_back(0);
    }
    orbit_of[i] = number[r];
    ++sizes[number[r]];
  }
  return {sizes, orbit_of};
}

}  // namespace

OrbitReport orbit_decomposition(const CodeFamily& family) {
  if (!family.complete) throw InvalidInputError("orbit decomposition needs a complete family");
  const TorusParams& params = family.params;
  const int n = params.n();
  const int p = params.p();

  std::vector<std::function<void(TorusPoint&)>> translations;
  std::vector<std::function<void(TorusPoint&)>> generators;
  for (int axis = 0; axis < n; ++axis) {
    translations.emplace_back([axis, p](TorusPoint& x) { x.coords[axis] = mod(x.coords[axis] + 1, p); });
    generators.emplace_back([axis, p](TorusPoint& x) { x.coords[axis] = mod(-x.coords[axis], p); });
    if (axis + 1 < n) {
      generators.emplace_back([axis](TorusPoint& x) { std::swap(x.coords[axis], x.coords[axis + 1]); });
    }
  }
  generators.insert(generators.end(), translations.begin(), translations.end());

  const std::size_t count = family.codes.size();
  DisjointSets full(count);
  DisjointSets shifts(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const auto image = family.find(map_points(family.codes[i], generators[g]));
      if (!image) throw std::logic_error("code family not closed under its symmetry group");
      full.unite(i, *image);
      if (g >= generators.size() - translations.size()) shifts.unite(i, *image);
    }
  }
  OrbitReport report;
  std::tie(report.orbit_sizes, report.orbit_of) = collect(full, count);
  report.translation_orbit_sizes = collect(shifts, count).first;
  return report;
}

FamilyFile to_family_file(const CodeFamily& family) {
  return FamilyFile{family.params.p(), family.params.n(), family.complete, family.codes};
}

CodeFamily from_family_file(const FamilyFile& file) {
  const TorusParams params(file.p, file.n);
  CodeFamily family{params, file.codes, file.complete};
  for (std::size_t i = 0; i < family.codes.size(); ++i) {
    if (i > 0 && !code_less(family.codes[i - 1], family.codes[i])) {
      throw InvalidInputError("family members not strictly sorted at member " + std::to_string(i));
    }
  }
  return family;
}

std::filesystem::path family_cache_path(const std::filesystem::path& dir, const TorusParams& params) {
  return dir / ("p" + std::to_string(params.p()) + "n" + std::to_string(params.n()) + ".family");
}

CachedFamily load_or_enumerate(const std::filesystem::path& dir, const TorusParams& params,
                               const EnumerateOptions& options) {
  const auto path = family_cache_path(dir, params);
  if (std::filesystem::exists(path)) {
    CodeFamily family = from_family_file(parse_family(read_text_file(path)));
    if (!(family.params == params) || !family.complete) {
      throw InvalidInputError(path.string() + ": cached family does not match " + params.to_string());
    }
    if (!family.codes.empty()) {
      std::mt19937 rng(static_cast<std::mt19937::result_type>(params.p()));
      std::uniform_int_distribution<std::size_t> pick(0, family.codes.size() - 1);
      for (int s = 0; s < 3; ++s) {
        const auto& code = family.codes[pick(rng)];
        if (!is_perfect(code, options.exec).perfect) {
          throw InvalidInputError(path.string() + ": cached member failed verification");
        }
      }
    }
    return CachedFamily{std::move(family), path, true};
  }
  CodeFamily family = enumerate_all(params, options);
  std::filesystem::create_directories(dir);
  write_text_file(path, serialize_family(to_family_file(family)));
  return CachedFamily{std::move(family), path, false};
}

}  // namespace pds
