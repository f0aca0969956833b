#ifndef INVLOCI_ERRORS_HPP
#define INVLOCI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invloci {

// Base class for every error this library raises on purpose.
class calc_error : public std::runtime_error {
public:
    explicit calc_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by zero / inversion of zero.
class zero_denominator_error : public calc_error {
public:
    zero_denominator_error() : calc_error("zero denominator") {}
};

// A fraction that should have been an integer was not; carries the
// offending value as a string so the caller can show it.
class not_integral_error : public calc_error {
public:
    explicit not_integral_error(const std::string& value)
        : calc_error("not an integer: " + value), value_(value) {}
    const std::string& value() const { return value_; }

private:
    std::string value_;
};

// A tangent weight vanished (or a genericity check failed); the caller
// is expected to re-randomize the torus weights.
class degenerate_weights_error : public calc_error {
public:
    explicit degenerate_weights_error(const std::string& msg)
        : calc_error("degenerate weights: " + msg) {}
};

// The Bott sum did not reduce to an integer. The message carries the
// per-fixed-point contribution dump.
class localization_error : public calc_error {
public:
    explicit localization_error(const std::string& msg)
        : calc_error("localization inconsistency: " + msg) {}
};

// Seeded rejection sampling ran out of its retry budget.
class search_exhausted_error : public calc_error {
public:
    explicit search_exhausted_error(const std::string& msg)
        : calc_error("search exhausted: " + msg) {}
};

// Bad interpolation input (duplicate abscissae, too few samples).
class sample_error : public calc_error {
public:
    explicit sample_error(const std::string& msg) : calc_error(msg) {}
};

}  // namespace invloci

#endif
