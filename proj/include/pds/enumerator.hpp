#pragma once

// All perfect dominating sets of the torus graph at small n, found as exact
// covers of Z_p^n by closed balls.

#include "pds/code_io.hpp"
#include "pds/execution.hpp"
#include "pds/torus.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace pds {

inline constexpr VertexIndex kDefaultEnumerationGuard = 343;

struct EnumerateOptions {
  // Reject centers whose axis line is already occupied. Requires prime p.
  bool prune_lines = true;
  VertexIndex guard = kDefaultEnumerationGuard;
  Execution exec = Execution::Parallel;
};

struct CodeFamily {
  TorusParams params;
  std::vector<CodeSet> codes;  // sorted by code_less, no duplicates
  bool complete = false;

  // Position of `code` in the family.
  std::optional<std::size_t> find(const CodeSet& code) const;
};

CodeFamily enumerate_all(const TorusParams& params, const EnumerateOptions& options = {});

struct OrbitReport {
  // Orbits under translations, coordinate permutations and negations.
  std::vector<std::size_t> orbit_sizes;     // one entry per orbit, ordered by smallest member
  std::vector<std::size_t> orbit_of;        // orbit number of each family member
  // Orbits under translations only.
  std::vector<std::size_t> translation_orbit_sizes;
};

// Throws InvalidInputError for an incomplete family and std::logic_error if
// the family is not closed under the symmetry group.
OrbitReport orbit_decomposition(const CodeFamily& family);

FamilyFile to_family_file(const CodeFamily& family);
// Checks parameters, ordering and that every member is perfect.
CodeFamily from_family_file(const FamilyFile& file);

std::filesystem::path family_cache_path(const std::filesystem::path& dir, const TorusParams& params);

struct CachedFamily {
  CodeFamily family;
  std::filesystem::path path;
  bool cache_hit = false;
};

// Loads p<p>n<n>.family from `dir`, re-verifying 3 sampled members, or
// enumerates and writes it.
CachedFamily load_or_enumerate(const std::filesystem::path& dir, const TorusParams& params,
                               const EnumerateOptions& options = {});

}  // namespace pds
