#pragma once

#include <stdexcept>
#include <string>

namespace ferrers {

// User-supplied data failed validation.
class RejectedInput : public std::invalid_argument {
public:
    explicit RejectedInput(const std::string& what) : std::invalid_argument(what) {}
};

// A theorem-backed internal invariant failed. This signals a bug in the
// library, never bad input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// A configured enumeration cap was exceeded.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw RejectedInput(msg);
}

inline void invariant(bool cond, const std::string& msg) {
    if (!cond) throw InvariantViolation(msg);
}

} // namespace ferrers
