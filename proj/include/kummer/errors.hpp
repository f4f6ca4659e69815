#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

/// Base for all mathematical precondition failures. `kind()` is the stable,
/// machine-readable name reported by the CLI.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Some e_ij > 0: no decomposition with non-negative coefficients exists.
class NotInCone : public DomainError {
public:
    explicit NotInCone(const std::string& detail) : DomainError("NotInCone", detail) {}
};

/// Some distinguished curve has non-positive degree.
class NotAmpleLike : public DomainError {
public:
    explicit NotAmpleLike(const std::string& detail) : DomainError("NotAmpleLike", detail) {}
};

class NonPositiveDenominator : public DomainError {
public:
    explicit NonPositiveDenominator(const std::string& detail)
        : DomainError("NonPositiveDenominator", detail) {}
};

class NonPositiveFiberDegree : public DomainError {
public:
    explicit NonPositiveFiberDegree(const std::string& detail)
        : DomainError("NonPositiveFiberDegree", detail) {}
};

class UnboundedRegion : public DomainError {
public:
    explicit UnboundedRegion(const std::string& detail) : DomainError("UnboundedRegion", detail) {}
};

class InsufficientSamples : public DomainError {
public:
    explicit InsufficientSamples(const std::string& detail)
        : DomainError("InsufficientSamples", detail) {}
};

}  // namespace kummer
