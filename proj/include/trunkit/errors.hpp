#ifndef TRUNKIT_ERRORS_HPP
#define TRUNKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trunkit {

// Thrown when an exact search would exceed its configured cap. The caller
// gets this instead of a possibly-wrong answer.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violation; the message names the violated rule.
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& rule) : std::invalid_argument(rule) {}
};

}  // namespace trunkit

#endif
