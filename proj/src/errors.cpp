#include "torusq/errors.hpp"

namespace torusq {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_coprime:               return "NotCoprime";
        case errc::non_positive:              return "NonPositive";
        case errc::domain_error:              return "DomainError";
        case errc::pole_error:                return "PoleError";
        case errc::overflow:                  return "Overflow";
        case errc::division_near_zero:        return "DivisionNearZero";
        case errc::no_convergence:            return "NoConvergence";
        case errc::zero_leading_coefficient:  return "ZeroLeadingCoefficient";
        case errc::order_exceeded:            return "OrderExceeded";
        case errc::index_out_of_range:        return "IndexOutOfRange";
        case errc::tolerance_not_met:         return "ToleranceNotMet";
        case errc::non_finite_sample:         return "NonFiniteSample";
        case errc::contour_condition_violated: return "ContourConditionViolated";
        case errc::invalid_argument:          return "InvalidArgument";
    }
    return "UnknownError";
}

bool is_input_error(errc c) {
    switch (c) {
        case errc::not_coprime:
        case errc::non_positive:
        case errc::domain_error:
        case errc::pole_error:
        case errc::division_near_zero:
        case errc::zero_leading_coefficient:
        case errc::order_exceeded:
        case errc::index_out_of_range:
        case errc::contour_condition_violated:
        case errc::invalid_argument:
            return true;
        case errc::overflow:
        case errc::no_convergence:
        case errc::tolerance_not_met:
        case errc::non_finite_sample:
            return false;
    }
    return false;
}

} // namespace torusq
