#include "pds/verifier.hpp"

#include "pds/kernels/domination.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pds {

void set_thread_count(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int domination_count(const CodeSet& code, const TorusPoint& v) {
  return kernels::domination_count(code, index_of(v, code.params()));
}

DominationReport is_perfect(const CodeSet& code, Execution exec) {
  const auto violation = exec == Execution::Serial
                             ? kernels::serial::first_domination_violation(code)
                             : kernels::omp::first_domination_violation(code);
  DominationReport report;
  if (violation) {
    report.witness = DominationWitness{point_of(violation->vertex, code.params()), violation->count};
    return report;
  }
  if (code.size() != code.params().code_size()) {
    throw std::logic_error("perfect code with size " + std::to_string(code.size()) +
                           " != p^(n-1)");
  }
  report.perfect = true;
  return report;
}

LineReport check_line_property(const CodeSet& code, Execution exec) {
  const auto violation = exec == Execution::Serial ? kernels::serial::first_line_violation(code)
                                                   : kernels::omp::first_line_violation(code);
  LineReport report;
  if (violation) {
    report.witness =
        LineWitness{violation->axis + 1, point_of(violation->base, code.params()), violation->count};
    return report;
  }
  report.holds = true;
  return report;
}

}  // namespace pds
