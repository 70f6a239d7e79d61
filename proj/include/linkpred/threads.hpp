#pragma once

namespace linkpred {

/// Worker count for the parallel kernels: a positive request wins, then the
/// LINKPRED_THREADS environment variable, then all hardware threads.
int resolve_threads(int requested);

}  // namespace linkpred
