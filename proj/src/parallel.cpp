#include "thermocone/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace thermocone {

int thread_count() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("THERMOCONE_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) n = std::min<long>(n, cap);
    }
    return std::max(n, 1);
}

}  // namespace thermocone
