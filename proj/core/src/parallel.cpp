#include "rmlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace rmlab {

unsigned worker_count() {
  if (const char* env = std::getenv("RMLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // unparsable value: use the hardware default
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace rmlab
