#pragma once

#include <stdexcept>
#include <string>

namespace torusq {

// Error codes cover every failure surfaced by the library.  Codes in the
// "input" class map to CLI exit code 2, "numerical" to exit code 3.
enum class errc {
    not_coprime,
    non_positive,
    domain_error,
    pole_error,
    overflow,
    division_near_zero,
    no_convergence,
    zero_leading_coefficient,
    order_exceeded,
    index_out_of_range,
    tolerance_not_met,
    non_finite_sample,
    contour_condition_violated,
    invalid_argument,
};

const char* errc_name(errc c);

// True for errors caused by the arguments handed in (preconditions),
// false for failures of the numerical machinery itself.
bool is_input_error(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw Error(code, std::string(errc_name(code)) + ": " + what);
}

} // namespace torusq
