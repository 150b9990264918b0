#pragma once

#include <atomic>
#include <stdexcept>
#include <string>

namespace asw {

// Thrown when a vanishing graded form is not a componentwise p-th power.
// That would contradict the graded exact sequences every reduction relies
// on, so it is surfaced loudly and counted, never ignored.
class exactness_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::atomic<long>& exactness_counter() {
    static std::atomic<long> n{0};
    return n;
}
}  // namespace detail

inline long exactness_violation_count() { return detail::exactness_counter().load(); }

[[noreturn]] inline void raise_exactness_violation(const std::string& what) {
    detail::exactness_counter().fetch_add(1);
    throw exactness_violation("exactness violation: " + what);
}

}  // namespace asw
