#include "pds/linear_codes.hpp"

#include "pds/errors.hpp"
#include "pds/spectral.hpp"
#include "pds/verifier.hpp"

#include <algorithm>
#include <numeric>

namespace pds {

void validate(const Eq1Spec& spec, const TorusParams& params) {
  if (spec.eps.size() != static_cast<std::size_t>(params.n() - 1)) {
    throw InvalidInputError("sign vector has length " + std::to_string(spec.eps.size()) +
                            ", expected n-1=" + std::to_string(params.n() - 1));
  }
  for (int e : spec.eps) {
    if (e != 1 && e != -1) throw InvalidInputError("signs must be +1 or -1");
  }
  if (spec.k < 0 || spec.k >= params.p()) throw InvalidInputError("offset k not reduced modulo p");
}

void validate(const HyperplaneSpec& spec, const TorusParams& params) {
  validate_point(TorusPoint{spec.normal}, params);
  if (spec.k < 0 || spec.k >= params.p()) throw InvalidInputError("offset k not reduced modulo p");
  if (!satisfies_kernel_condition(spec.normal, params.p())) {
    throw InvalidInputError("normal " + to_string(spec) +
                            " does not have absolute values {1,...,n}");
  }
}

CodeSet build_eq1(const Eq1Spec& spec, const TorusParams& params) {
  params.require_prime("build_eq1");
  validate(spec, params);
  const int p = params.p();
  const int n = params.n();
  CodeSet code(params);
  // j enumerates (x_1,...,x_{n-1}) in mixed radix; the codeword index is j*p + x_n.
  for (VertexIndex j = 0; j < params.code_size(); ++j) {
    long long last = spec.k;
    VertexIndex rest = j;
    for (int i = n - 1; i >= 1; --i) {
      const long long x = static_cast<long long>(rest % static_cast<VertexIndex>(p));
      rest /= static_cast<VertexIndex>(p);
      last += static_cast<long long>(spec.eps[static_cast<std::size_t>(i - 1)]) * (i + 1) * x;
    }
    code.insert(j * static_cast<VertexIndex>(p) + static_cast<VertexIndex>(mod(last, p)));
  }
  return code;
}

CodeSet build_hyperplane(const HyperplaneSpec& spec, const TorusParams& params) {
  params.require_prime("build_hyperplane");
  validate(spec, params);
  const int p = params.p();
  const int n = params.n();
  // a_i is a unit for some i with |a_i| = 1; solve for that coordinate.
  int solve_axis = 0;
  while (abs_residue(spec.normal[static_cast<std::size_t>(solve_axis)], p) != 1) ++solve_axis;
  const int inv = inverse_mod(spec.normal[static_cast<std::size_t>(solve_axis)], p);

  CodeSet code(params);
  TorusPoint x;
  x.coords.assign(static_cast<std::size_t>(n), 0);
  for (VertexIndex j = 0; j < params.code_size(); ++j) {
    VertexIndex rest = j;
    long long partial = 0;
    for (int i = n - 1; i >= 0; --i) {
      if (i == solve_axis) continue;
      const int xi = static_cast<int>(rest % static_cast<VertexIndex>(p));
      rest /= static_cast<VertexIndex>(p);
      x.coords[static_cast<std::size_t>(i)] = xi;
      partial += static_cast<long long>(spec.normal[static_cast<std::size_t>(i)]) * xi;
    }
    x.coords[static_cast<std::size_t>(solve_axis)] = mod(static_cast<long long>(spec.k - partial) * inv, p);
    code.insert(x);
  }
  return code;
}

HyperplaneSpec eq1_hyperplane(const Eq1Spec& spec, const TorusParams& params) {
  validate(spec, params);
  HyperplaneSpec h;
  h.normal.resize(static_cast<std::size_t>(params.n()));
  for (int i = 1; i < params.n(); ++i) {
    h.normal[static_cast<std::size_t>(i - 1)] =
        mod(-static_cast<long long>(spec.eps[static_cast<std::size_t>(i - 1)]) * (i + 1), params.p());
  }
  h.normal.back() = 1;
  h.k = spec.k;
  return h;
}

TorusPoint dominator_of(const Eq1Spec& spec, const TorusPoint& y, const TorusParams& params) {
  params.require_prime("dominator_of");
  validate(spec, params);
  validate_point(y, params);
  const int p = params.p();
  const int n = params.n();
  long long t = spec.k;
  for (int i = 1; i < n; ++i) {
    t += static_cast<long long>(spec.eps[static_cast<std::size_t>(i - 1)]) * (i + 1) *
         y.coords[static_cast<std::size_t>(i - 1)];
  }
  const int delta = signed_residue(t - y.coords.back(), p);
  TorusPoint d = y;
  if (delta >= -1 && delta <= 1) {
    d.coords.back() = mod(t, p);
    return d;
  }
  // 1-based coordinate j = |delta| - 1, which lies in [1, n-1].
  const int j = (delta < 0 ? -delta : delta) - 1;
  const int sign = delta < 0 ? -1 : 1;
  auto& c = d.coords[static_cast<std::size_t>(j - 1)];
  c = mod(c - spec.eps[static_cast<std::size_t>(j - 1)] * sign, p);
  return d;
}

HyperplaneSpec canonical(const HyperplaneSpec& spec, const TorusParams& params) {
  validate_point(TorusPoint{spec.normal}, params);
  HyperplaneSpec best;
  bool have = false;
  for (int t = 1; t < params.p(); ++t) {
    HyperplaneSpec scaled;
    for (int a : spec.normal) scaled.normal.push_back(mod(static_cast<long long>(t) * a, params.p()));
    scaled.k = mod(static_cast<long long>(t) * spec.k, params.p());
    if (!have || scaled < best) {
      best = std::move(scaled);
      have = true;
    }
  }
  return best;
}

std::vector<Eq1Spec> all_eq1_specs(const TorusParams& params) {
  const int bits = params.n() - 1;
  std::vector<Eq1Spec> specs;
  for (unsigned mask = 0; mask < (1u << bits); ++mask) {
    std::vector<int> eps(static_cast<std::size_t>(bits));
    for (int i = 0; i < bits; ++i) eps[static_cast<std::size_t>(i)] = (mask >> (bits - 1 - i)) & 1u ? -1 : 1;
    for (int k = 0; k < params.p(); ++k) specs.push_back(Eq1Spec{eps, k});
  }
  return specs;
}

std::vector<std::vector<int>> all_perfect_normals(const TorusParams& params) {
  const int n = params.n();
  std::vector<int> magnitudes(static_cast<std::size_t>(n));
  std::iota(magnitudes.begin(), magnitudes.end(), 1);
  std::vector<std::vector<int>> normals;
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      std::vector<int> a(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const int m = magnitudes[static_cast<std::size_t>(i)];
        a[static_cast<std::size_t>(i)] = (signs >> i) & 1u ? params.p() - m : m;
      }
      normals.push_back(std::move(a));
    }
  } while (std::next_permutation(magnitudes.begin(), magnitudes.end()));
  std::sort(normals.begin(), normals.end());
  return normals;
}

std::optional<HyperplaneSpec> classify(const CodeSet& code) {
  const TorusParams& params = code.params();
  params.require_prime("classify");
  const auto report = is_perfect(code);
  if (!report.perfect) {
    throw InvalidInputError("classify: code is not perfect (vertex " +
                            std::to_string(index_of(report.witness->vertex, params)) +
                            " dominated " + std::to_string(report.witness->count) + " times)");
  }
  const auto members = code.indices();
  auto dot = [&](const std::vector<int>& a, VertexIndex v) {
    long long s = 0;
    for (int axis = 0; axis < params.n(); ++axis) {
      s += static_cast<long long>(a[static_cast<std::size_t>(axis)]) * coordinate_of(v, axis, params);
    }
    return mod(s, params.p());
  };
  // Both sets have p^(n-1) elements, so containment is equality.
  for (const auto& a : all_perfect_normals(params)) {
    const int k = dot(a, members.front());
    const bool match = std::all_of(members.begin(), members.end(),
                                   [&](VertexIndex v) { return dot(a, v) == k; });
    if (match) return canonical(HyperplaneSpec{a, k}, params);
  }
  return std::nullopt;
}

std::optional<Eq1Spec> match_eq1(const CodeSet& code) {
  const TorusParams& params = code.params();
  const auto h = classify(code);
  if (!h) return std::nullopt;
  const int p = params.p();
  const int inv = inverse_mod(h->normal.back(), p);
  Eq1Spec spec;
  spec.k = mod(static_cast<long long>(h->k) * inv, p);
  for (int i = 1; i < params.n(); ++i) {
    // a_i / a_n = -(i+1) eps_i
    const int scaled = mod(static_cast<long long>(h->normal[static_cast<std::size_t>(i - 1)]) * inv, p);
    if (scaled == mod(-(i + 1), p)) {
      spec.eps.push_back(1);
    } else if (scaled == mod(i + 1, p)) {
      spec.eps.push_back(-1);
    } else {
      return std::nullopt;
    }
  }
  return spec;
}

std::string to_string(const Eq1Spec& spec) {
  std::string s = "eps=";
  for (int e : spec.eps) s += e > 0 ? '+' : '-';
  return s + " k=" + std::to_string(spec.k);
}

std::string to_string(const HyperplaneSpec& spec) {
  std::string s = "a=";
  for (std::size_t i = 0; i < spec.normal.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(spec.normal[i]);
  }
  return s + " k=" + std::to_string(spec.k);
}

std::vector<int> parse_signs(std::string_view text) {
  std::vector<int> eps;
  for (char c : text) {
    if (c == '+') {
      eps.push_back(1);
    } else if (c == '-') {
      eps.push_back(-1);
    } else {
      throw InvalidInputError(std::string("sign pattern may contain only '+' and '-', got '") + c + "'");
    }
  }
  return eps;
}

}  // namespace pds
