#pragma once

namespace anisoloc {

// Parallel runs the OpenMP kernels; Serial runs the same arithmetic single-threaded
// and serves as the reference path in tests and benchmarks.
enum class Execution { Parallel, Serial };

}  // namespace anisoloc
