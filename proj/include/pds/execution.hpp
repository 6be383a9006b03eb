#pragma once

namespace pds {

// Selects between the serial reference kernels and their OpenMP versions.
// Results are identical; only speed differs.
enum class Execution { Serial, Parallel };

// Sets the OpenMP thread count when > 0.
void set_thread_count(int threads);

}  // namespace pds
