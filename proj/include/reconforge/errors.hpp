#ifndef RECONFORGE_ERRORS_HPP
#define RECONFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reconforge {

// Bad user-supplied data: unreadable JSON, out-of-range vertex ids,
// inconsistent rotation systems.
struct malformed_input_error : std::runtime_error {
    explicit malformed_input_error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition (e.g. passed a non-homomorphism
// where one is required).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee that must hold on accepted inputs failed while
// building or using a certificate (named after the guarantee that broke).
struct certificate_violation : std::runtime_error {
    explicit certificate_violation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace reconforge

#endif
