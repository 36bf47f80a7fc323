#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace chaplygin {

/// An argument lies outside the domain of a formula (non-positive density,
/// coincident arguments of a removable singularity, a middle density below
/// the admissible range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The Riemann data belongs to a regime the requested operation does not
/// handle. `regime()` carries the lower-case regime name for reporting.
class RegimeError : public std::runtime_error {
public:
    RegimeError(std::string regime, const std::string& what)
        : std::runtime_error(what), regime_(std::move(regime)) {}

    const std::string& regime() const noexcept { return regime_; }

private:
    std::string regime_;
};

/// A construction parameter (middle density, slack) falls outside the
/// feasible window.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent inputs, e.g. two fields compared that do not share far states.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace chaplygin
