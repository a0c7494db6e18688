#ifndef PFV_ERRORS_HPP
#define PFV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pfv {

struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero : math_error {
    division_by_zero() : math_error("division by zero") {}
};

// Evaluation of a rational function at a root of its denominator.
struct pole_error : math_error {
    explicit pole_error(const std::string& what) : math_error(what) {}
};

struct ring_mismatch : math_error {
    explicit ring_mismatch(const std::string& what) : math_error(what) {}
};

struct dimension_mismatch : math_error {
    explicit dimension_mismatch(const std::string& what) : math_error(what) {}
};

// A computation exceeded a configured cap (weight, term count, ...).
struct resource_error : math_error {
    explicit resource_error(const std::string& what) : math_error(what) {}
};

struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pfv

#endif
