#pragma once

// Exact cover of Z_p^n by closed balls: every solution is a set of centers
// whose balls partition the vertex set. Branching picks the uncovered vertex
// with the fewest placeable balls (Algorithm X column rule). Each solution
// is produced exactly once.
//
// With `prune_lines`, a center is also rejected when one of its n axis lines
// already holds a chosen center. This is sound only for prime p, where every
// axis line of a perfect code carries exactly one codeword; callers enforce
// that.

#include "pds/torus.hpp"

#include <vector>

namespace pds::kernels {

using CenterList = std::vector<VertexIndex>;  // sorted ascending

struct ExactCoverStats {
  unsigned long long nodes = 0;
};

namespace serial {
// Solutions sorted lexicographically.
std::vector<CenterList> ball_partitions(const TorusParams& params, bool prune_lines,
                                        ExactCoverStats* stats = nullptr);
}  // namespace serial

namespace omp {
// Splits the search tree at a fixed depth and explores subtrees concurrently;
// output is identical to the serial version.
std::vector<CenterList> ball_partitions(const TorusParams& params, bool prune_lines,
                                        ExactCoverStats* stats = nullptr);
}  // namespace omp

}  // namespace pds::kernels
