#ifndef CIRC_DEADLINE_HPP
#define CIRC_DEADLINE_HPP

#include <chrono>
#include <optional>
#include <stdexcept>

namespace circ {

/// Raised from long-running loops once the calling thread's deadline has passed.
class TimeoutError : public std::runtime_error {
public:
    TimeoutError() : std::runtime_error("per-instance time budget exhausted") {}
};

/**
 * Installs a per-thread deadline for the lifetime of the guard. Heavy
 * routines (homology ranks, Reisner scans, vertex-decomposability search)
 * poll check_deadline() and throw TimeoutError once it has passed.
 */
class ScopedDeadline {
public:
    explicit ScopedDeadline(std::chrono::milliseconds budget);
    ~ScopedDeadline();
    ScopedDeadline(const ScopedDeadline&) = delete;
    ScopedDeadline& operator=(const ScopedDeadline&) = delete;

private:
    std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_deadline();

}  // namespace circ

#endif  // CIRC_DEADLINE_HPP
