#include "pds/kernels/domination.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>

namespace pds::kernels {

int domination_count(const CodeSet& code, VertexIndex v) {
  const TorusParams& params = code.params();
  int count = code.contains(v) ? 1 : 0;
  for (int axis = 0; axis < params.n(); ++axis) {
    count += code.contains(step(v, axis, +1, params)) ? 1 : 0;
    count += code.contains(step(v, axis, -1, params)) ? 1 : 0;
  }
  return count;
}

int line_count(const CodeSet& code, int axis, VertexIndex base) {
  const TorusParams& params = code.params();
  const VertexIndex s = params.stride(axis);
  int count = 0;
  for (int t = 0; t < params.p(); ++t) {
    count += code.contains(base + static_cast<VertexIndex>(t) * s) ? 1 : 0;
  }
  return count;
}

VertexIndex line_base(int axis, VertexIndex j, const TorusParams& params) {
  const VertexIndex s = params.stride(axis);
  return (j / s) * s * static_cast<VertexIndex>(params.p()) + j % s;
}

namespace serial {

std::optional<VertexViolation> first_domination_violation(const CodeSet& code) {
  const VertexIndex m = code.params().num_vertices();
  for (VertexIndex v = 0; v < m; ++v) {
    const int c = domination_count(code, v);
    if (c != 1) return VertexViolation{v, c};
  }
  return std::nullopt;
}

std::optional<LineViolation> first_line_violation(const CodeSet& code) {
  const TorusParams& params = code.params();
  const VertexIndex lines = params.code_size();
  for (int axis = 0; axis < params.n(); ++axis) {
    for (VertexIndex j = 0; j < lines; ++j) {
      const VertexIndex base = line_base(axis, j, params);
      const int c = line_count(code, axis, base);
      if (c != 1) return LineViolation{axis, base, c};
    }
  }
  return std::nullopt;
}

}  // namespace serial

namespace omp {

std::optional<VertexViolation> first_domination_violation(const CodeSet& code) {
  const auto m = static_cast<std::int64_t>(code.params().num_vertices());
  std::int64_t first = m;
#pragma omp parallel for reduction(min : first) schedule(static)
  for (std::int64_t v = 0; v < m; ++v) {
    if (v < first && domination_count(code, static_cast<VertexIndex>(v)) != 1) first = v;
  }
  if (first == m) return std::nullopt;
  const auto v = static_cast<VertexIndex>(first);
  return VertexViolation{v, domination_count(code, v)};
}

std::optional<LineViolation> first_line_violation(const CodeSet& code) {
  const TorusParams& params = code.params();
  const auto lines = static_cast<std::int64_t>(params.code_size());
  for (int axis = 0; axis < params.n(); ++axis) {
    std::int64_t first = lines;
#pragma omp parallel for reduction(min : first) schedule(static)
    for (std::int64_t j = 0; j < lines; ++j) {
      if (j < first &&
          line_count(code, axis, line_base(axis, static_cast<VertexIndex>(j), params)) != 1) {
        first = j;
      }
    }
    if (first != lines) {
      const VertexIndex base = line_base(axis, static_cast<VertexIndex>(first), params);
      return LineViolation{axis, base, line_count(code, axis, base)};
    }
  }
  return std::nullopt;
}

}  // namespace omp

}  // namespace pds::kernels
