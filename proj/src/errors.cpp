#include "vcfb/errors.hpp"

#include <fmt/format.h>

namespace vcfb {

namespace {

std::string non_finite_message(std::size_t node, double t, std::int64_t step) {
    if (step >= 0) {
        return fmt::format("non-finite population at node {} (t={}, step {})", node, t, step);
    }
    return fmt::format("non-finite population at node {} (t={})", node, t);
}

}  // namespace

NonFiniteError::NonFiniteError(std::size_t node, double t, std::int64_t step)
    : Error(non_finite_message(node, t, step)), node_(node), t_(t), step_(step) {}

TauOutOfRange::TauOutOfRange(double tau)
    : Error(fmt::format("relaxation time tau={} must exceed 1/2 (needs b/eta < 0)", tau)), tau_(tau) {}

UnknownExample::UnknownExample(int k) : Error(fmt::format("unknown example {} (expected 1..4)", k)) {}

CflViolation::CflViolation(double number, double limit)
    : Error(fmt::format("explicit stability number {} exceeds {}", number, limit)), number_(number) {}

LengthMismatch::LengthMismatch(std::size_t lhs, std::size_t rhs)
    : Error(fmt::format("field length mismatch: {} vs {}", lhs, rhs)) {}

}  // namespace vcfb
