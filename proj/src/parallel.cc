#include "syscodes/parallel.h"

#include <cstdlib>
#include <string>

namespace syscodes {

size_t worker_count() {
    size_t hw = std::max<size_t>(1, std::thread::hardware_concurrency());
    const char *env = std::getenv("SYSCODES_THREADS");
    if (env == nullptr || *env == '\0') {
        return hw;
    }
    try {
        long requested = std::stol(env);
        if (requested <= 0) {
            return hw;
        }
        return static_cast<size_t>(requested);
    } catch (const std::exception &) {
        return hw;
    }
}

}  // namespace syscodes
