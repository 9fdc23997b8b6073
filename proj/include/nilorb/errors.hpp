#pragma once

#include <stdexcept>
#include <string>

namespace nilorb {

// Raised when a mathematically guaranteed fact fails to hold (integrality,
// polynomality, dual-route agreement). Always an implementation bug.
class InternalAssertion : public std::logic_error {
public:
    explicit InternalAssertion(const std::string& what) : std::logic_error(what) {}
};

// Bad arguments or exceeded size guards.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

class ArithmeticError : public std::domain_error {
public:
    explicit ArithmeticError(const std::string& what) : std::domain_error(what) {}
};

#define NILORB_ASSERT(cond, msg)                                               \
    do {                                                                       \
        if (!(cond)) throw ::nilorb::InternalAssertion(msg);                   \
    } while (0)

} // namespace nilorb
