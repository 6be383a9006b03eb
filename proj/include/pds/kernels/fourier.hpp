#pragma once

// Exact Fourier support of a code's indicator function. For each frequency y
// the transform sum_{x in code} w^(-x.y) is tallied into a CyclotomicElement
// and tested for zero; no floating point is involved.

#include "pds/cyclotomic.hpp"
#include "pds/torus.hpp"

#include <vector>

namespace pds::kernels {

// Transform of the code at frequency y (index form).
CyclotomicElement fourier_coefficient(const CodeSet& code, VertexIndex frequency);

namespace serial {
// Frequencies (as indices, increasing) with a nonzero coefficient. Prime p.
std::vector<VertexIndex> fourier_support(const CodeSet& code);
}  // namespace serial

namespace omp {
std::vector<VertexIndex> fourier_support(const CodeSet& code);
}  // namespace omp

}  // namespace pds::kernels
