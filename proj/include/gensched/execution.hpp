#ifndef GENSCHED_EXECUTION_HPP
#define GENSCHED_EXECUTION_HPP

namespace gensched {

/// Selects between the OpenMP kernel and its serial reference. Both produce
/// identical results; the serial path exists for testing and benchmarking.
enum class Execution { serial, parallel };

}  // namespace gensched

#endif
