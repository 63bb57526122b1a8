#pragma once

namespace superkac {

// Worker count for the OpenMP loops: SUPERKAC_THREADS when set to a positive
// integer, otherwise the OpenMP default.
int thread_count();

}  // namespace superkac
