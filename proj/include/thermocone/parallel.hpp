#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace thermocone {

// Kernels come in two flavours: an OpenMP loop and a plain serial loop kept as
// the reference. Both produce identical results.
enum class Execution { Serial, Parallel };

// Thread count for OpenMP regions: omp_get_max_threads(), capped by the
// THERMOCONE_THREADS environment variable when it holds a positive integer.
int thread_count();

// Exceptions must not leave an OpenMP region. Loop bodies run through run();
// the first exception is kept and rethrown after the loop.
class ExceptionCapture {
public:
    template <class F>
    void run(F&& f) noexcept {
        try {
            f();
        } catch (...) {
            std::lock_guard<std::mutex> lock(mutex_);
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::mutex mutex_;
    std::exception_ptr error_;
};

}  // namespace thermocone
