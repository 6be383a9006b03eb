#pragma once

// Defining sets: D ⊆ S such that S is the only member of a reference family
// containing D.
//
// Three constructions are provided:
//   greedy_defining       grows D one vertex at a time, each time choosing a
//                         vertex that lowers dim span{f : f in family, f ⊇ D};
//   min_defining          exhaustive search by increasing size;
//   proposition_defining  explicit points for a signed-family code, valid
//                         relative to the signed family only.

#include "pds/enumerator.hpp"
#include "pds/linear_codes.hpp"
#include "pds/torus.hpp"

#include <optional>
#include <span>
#include <vector>

namespace pds {

enum class FamilyKind {
  Full,    // every perfect code (an enumerated CodeFamily)
  Linear,  // the 2^(n-1) p signed-family codes
};

struct DefiningSet {
  std::vector<TorusPoint> points;
  CodeSet target;
  FamilyKind family;
};

struct SignedBinary {
  std::vector<int> eps;  // eps[j] multiplies 2^j
  friend bool operator==(const SignedBinary&, const SignedBinary&) = default;
};

inline constexpr int kDefaultMinDefiningCap = 4;

// floor(log2 p)
int floor_log2(int p);

// 1 + ceil((n-1) / floor(log2 p))
std::size_t proposition_size(const TorusParams& params);

// All signed codes as a complete CodeFamily.
CodeFamily linear_family(const TorusParams& params);

// Throws InvalidInputError if S is not in the family or D ⊄ S.
bool is_defining(std::span<const TorusPoint> points, const CodeSet& target, const CodeFamily& family);

// dim span of the indicator vectors of the members containing every point.
std::size_t span_dimension(std::span<const TorusPoint> points, const CodeFamily& family);

DefiningSet greedy_defining(const CodeSet& target, const CodeFamily& family);

// nullopt when no defining set of size <= cap exists. Among sets of the
// minimum size, the lexicographically first (by member index) is returned.
std::optional<DefiningSet> min_defining(const CodeSet& target, const CodeFamily& family,
                                        int cap = kDefaultMinDefiningCap);

// Requires prime p. For n = 1 the set is the single codeword.
DefiningSet proposition_defining(const Eq1Spec& spec, const TorusParams& params);

// Reads the sign vector and offset back from proposition_defining's points.
Eq1Spec recover_eq1(std::span<const TorusPoint> points, const TorusParams& params);

// The unique eps in {-1,+1}^m with sum eps_j 2^j = c (mod p), if any.
// Requires 0 <= m <= floor(log2 p).
std::optional<SignedBinary> signed_binary_solve(int c, int m, int p);

// sum eps_j 2^j mod p for every sign vector, masks in increasing order
// (bit j set means eps_j = -1).
std::vector<int> signed_binary_values(int m, int p);

}  // namespace pds
