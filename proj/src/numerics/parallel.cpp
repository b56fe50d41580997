#include "korlab/numerics/parallel.hpp"

#include <cstdlib>
#include <string>

namespace korlab {

std::size_t worker_count() {
    if (const char* env = std::getenv("KORLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace korlab
