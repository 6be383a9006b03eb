#pragma once

// Linear perfect codes.
//
// Signed family:  { (x_1,...,x_{n-1}, k + sum_i eps_i (i+1) x_i) }, eps_i = ±1.
// Hyperplane family:  { x : a.x = k (mod p) } where the Lee absolute values
// of a_1..a_n are exactly 1..n. The signed family is the subfamily whose
// normal, scaled so that a_n = 1, reads a_i = -(i+1) eps_i.

#include "pds/torus.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pds {

struct Eq1Spec {
  std::vector<int> eps;  // n-1 entries, each +1 or -1
  int k = 0;
  friend bool operator==(const Eq1Spec&, const Eq1Spec&) = default;
};

struct HyperplaneSpec {
  std::vector<int> normal;  // n residues
  int k = 0;
  friend bool operator==(const HyperplaneSpec&, const HyperplaneSpec&) = default;
  friend auto operator<=>(const HyperplaneSpec&, const HyperplaneSpec&) = default;
};

void validate(const Eq1Spec& spec, const TorusParams& params);
// Checks length, reduction and the absolute-value condition on the normal.
void validate(const HyperplaneSpec& spec, const TorusParams& params);

CodeSet build_eq1(const Eq1Spec& spec, const TorusParams& params);
CodeSet build_hyperplane(const HyperplaneSpec& spec, const TorusParams& params);

// The hyperplane x_n - sum eps_i (i+1) x_i = k describing build_eq1(spec).
HyperplaneSpec eq1_hyperplane(const Eq1Spec& spec, const TorusParams& params);

// Unique codeword of build_eq1(spec) whose closed ball contains y.
TorusPoint dominator_of(const Eq1Spec& spec, const TorusPoint& y, const TorusParams& params);

// Lexicographically least (t*a, t*k) over t = 1..p-1.
HyperplaneSpec canonical(const HyperplaneSpec& spec, const TorusParams& params);

// All 2^(n-1) * p signed specs: sign patterns in binary order ('+' before
// '-', eps_1 most significant), then k ascending.
std::vector<Eq1Spec> all_eq1_specs(const TorusParams& params);

// All n! 2^n normals satisfying the absolute-value condition, ascending.
std::vector<std::vector<int>> all_perfect_normals(const TorusParams& params);

// Canonical hyperplane description of a perfect code, or nullopt if it is
// not a hyperplane. Throws InvalidInputError when the code is not perfect.
std::optional<HyperplaneSpec> classify(const CodeSet& code);

// Signed-family spec equal to this code, if any.
std::optional<Eq1Spec> match_eq1(const CodeSet& code);

// "eps=+- k=3" and "a=1,3,2 k=3".
std::string to_string(const Eq1Spec& spec);
std::string to_string(const HyperplaneSpec& spec);

// "+-+" -> {+1,-1,+1}. Throws InvalidInputError on other characters.
std::vector<int> parse_signs(std::string_view text);

}  // namespace pds
