#include "linkpred/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace linkpred {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LINKPRED_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t > 0) return t;
    } catch (...) {
      // fall through to the hardware default
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace linkpred
