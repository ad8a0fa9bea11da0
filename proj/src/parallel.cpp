#include "ddgf/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ddgf {

std::size_t worker_count() {
  std::size_t hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("DDG_FORGE_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1 && static_cast<std::size_t>(cap) < hw)
        hw = static_cast<std::size_t>(cap);
    } catch (...) {
      // unparsable value: keep the hardware default
    }
  }
  return hw;
}

}  // namespace ddgf
