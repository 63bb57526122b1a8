#include "superkac/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace superkac {

int thread_count() {
  if (const char* env = std::getenv("SUPERKAC_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return omp_get_max_threads();
}

}  // namespace superkac
