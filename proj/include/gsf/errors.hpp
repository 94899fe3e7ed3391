#pragma once

#include <stdexcept>
#include <string>

namespace gsf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GaugeMismatch : Error {
    GaugeMismatch() : Error("operands live over different gauges") {}
};
struct DimMismatch : Error {
    DimMismatch() : Error("operand dimensions do not match") {}
};
struct NonFiniteSample : Error {
    explicit NonFiniteSample(const std::string& where)
        : Error("non-finite sample encountered in " + where) {}
};
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& what) : Error(what) {}
};
struct OrderTooHigh : Error {
    explicit OrderTooHigh(int requested, int max)
        : Error("derivative order " + std::to_string(requested) +
                " exceeds available order " + std::to_string(max)) {}
};
struct DomainViolation : Error {
    explicit DomainViolation(const std::string& what) : Error(what) {}
};
struct CodomainMismatch : Error {
    CodomainMismatch() : Error("codomain/domain dimensions incompatible for composition") {}
};
struct UnsupportedDistribution : Error {
    explicit UnsupportedDistribution(const std::string& what) : Error(what) {}
};
struct QuadratureFailure : Error {
    explicit QuadratureFailure(const std::string& what) : Error(what) {}
};
struct EndpointOrderViolation : Error {
    EndpointOrderViolation() : Error("integration endpoints violate a <= b") {}
};
struct BracketViolation : Error {
    explicit BracketViolation(const std::string& what) : Error(what) {}
};
struct EmptyCover : Error {
    EmptyCover() : Error("cover must contain at least one set") {}
};
struct NotMeasurableDomain : Error {
    NotMeasurableDomain() : Error("integration domain is not measurable") {}
};
struct NotAlmostDisjoint : Error {
    NotAlmostDisjoint() : Error("sets are not almost strongly disjoint") {}
};
struct SingularJacobian : Error {
    SingularJacobian() : Error("Jacobian determinant is not strictly positive at probe points") {}
};
struct NotHypernatural : Error {
    NotHypernatural() : Error("net is not negligibly close to an integer net") {}
};
struct NotExtendable : Error {
    explicit NotExtendable(const std::string& what) : Error(what) {}
};
struct BoundaryPoint : Error {
    explicit BoundaryPoint(const std::string& what) : Error(what) {}
};

} // namespace gsf
