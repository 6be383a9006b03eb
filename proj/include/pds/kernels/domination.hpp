#pragma once

// Full-vertex scans behind the verifier. The serial versions are the
// reference; the OpenMP versions must return the same (first) violation.

#include "pds/torus.hpp"

#include <optional>

namespace pds::kernels {

struct VertexViolation {
  VertexIndex vertex;
  int count;  // |closed_ball(vertex) ∩ code|, != 1
  friend bool operator==(const VertexViolation&, const VertexViolation&) = default;
};

struct LineViolation {
  int axis;          // 0-based
  VertexIndex base;  // line point with coordinate `axis` equal to 0
  int count;         // codewords on the line, != 1
  friend bool operator==(const LineViolation&, const LineViolation&) = default;
};

int domination_count(const CodeSet& code, VertexIndex v);
int line_count(const CodeSet& code, int axis, VertexIndex base);

// j-th line base along `axis`, j in [0, p^(n-1)), increasing in j.
VertexIndex line_base(int axis, VertexIndex j, const TorusParams& params);

namespace serial {
std::optional<VertexViolation> first_domination_violation(const CodeSet& code);
std::optional<LineViolation> first_line_violation(const CodeSet& code);
}  // namespace serial

namespace omp {
std::optional<VertexViolation> first_domination_violation(const CodeSet& code);
std::optional<LineViolation> first_line_violation(const CodeSet& code);
}  // namespace omp

}  // namespace pds::kernels
