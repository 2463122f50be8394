#include "circ/deadline.hpp"

namespace circ {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> t_deadline;
thread_local unsigned t_poll = 0;
}  // namespace

ScopedDeadline::ScopedDeadline(std::chrono::milliseconds budget) : previous_(t_deadline) {
    t_deadline = std::chrono::steady_clock::now() + budget;
}

ScopedDeadline::~ScopedDeadline() { t_deadline = previous_; }

void check_deadline() {
    if (!t_deadline) return;
    // Reading the clock on every call is measurable in the inner loops.
    if ((++t_poll & 0xFF) != 0) return;
    if (std::chrono::steady_clock::now() > *t_deadline) throw TimeoutError();
}

}  // namespace circ
