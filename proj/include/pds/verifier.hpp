#pragma once

// Ground-truth checks. A 0/1 function f is the indicator of a perfect
// dominating set iff (A+I)f = 1, i.e. every closed ball meets the code
// exactly once.

#include "pds/execution.hpp"
#include "pds/torus.hpp"

#include <optional>

namespace pds {

struct DominationWitness {
  TorusPoint vertex;
  int count;
};

struct DominationReport {
  bool perfect = false;
  std::optional<DominationWitness> witness;  // first vertex (by index) with count != 1
};

struct LineWitness {
  int axis;          // 1-based, the free coordinate
  TorusPoint base;   // point of the line with the free coordinate 0
  int count;
};

struct LineReport {
  bool holds = false;
  std::optional<LineWitness> witness;
};

// Entry of (A+I)f at v.
int domination_count(const CodeSet& code, const TorusPoint& v);

// Scans every vertex. When perfect, also checks |code| = p^(n-1) and throws
// std::logic_error if that ever fails.
DominationReport is_perfect(const CodeSet& code, Execution exec = Execution::Parallel);

// True iff every axis-parallel line holds exactly one codeword.
LineReport check_line_property(const CodeSet& code, Execution exec = Execution::Parallel);

}  // namespace pds
