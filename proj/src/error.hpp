#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

enum class ErrorKind {
    invalid_argument,   // malformed inputs (quantum numbers, mesh, ordering)
    no_bound_state,     // a >= e^2/mc^2: the attractive well is absent
    fall_to_center,     // discriminant (j+1/2)^2 + a^2 - alpha^2 < 0
    numerical           // bracket failure, mesh too coarse, non-convergence
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace pdm
