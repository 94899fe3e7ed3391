#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gsf/errors.hpp"
#include "gsf/gauge.hpp"
#include "gsf/trilean.hpp"

namespace gsf {

enum class OrderClass { Negligible, Moderate, Infinite, NotModerate, Undetermined };

const char* to_string(OrderClass c);

// Estimated asymptotic order of a net: slope nu with |x_eps| ~ rho_eps^nu,
// from least-squares regression of log|x_eps| against log rho_eps over the
// tail half of the grid. slope is +inf for a net that vanishes on the tail.
struct OrderEstimate {
    double slope = 0.0;
    double residual = 0.0;
    OrderClass cls = OrderClass::Undetermined;

    bool is_moderate() const {
        return cls == OrderClass::Negligible || cls == OrderClass::Moderate ||
               cls == OrderClass::Infinite;
    }
    bool negligible() const { return cls == OrderClass::Negligible; }
};

// An element of the Robinson-Colombeau ring as a lazily evaluated net
// eps -> R^d with grid-cached samples. Immutable after construction; the
// sample cache is internally synchronized, so values may be shared and
// evaluated concurrently. No operation mutates its inputs.
class GenNum {
public:
    using Vec = std::vector<double>;
    using RepFn = std::function<Vec(const EpsPoint&)>;

    GenNum(GaugePtr gauge, int dim, RepFn rep);

    static GenNum constant(GaugePtr g, double value);
    static GenNum constant_vec(GaugePtr g, Vec value);
    static GenNum from_scalar_fn(GaugePtr g, std::function<double(const EpsPoint&)> fn);
    // drho^power as a net (rho_eps^power); power may be negative or fractional
    static GenNum drho(GaugePtr g, double power = 1.0);

    int dim() const { return dim_; }
    const GaugePtr& gauge() const { return gauge_; }

    // Cached sample at grid index k. Thread-safe, idempotent.
    const Vec& at(std::size_t k) const;
    double scalar_at(std::size_t k) const;
    // Uncached evaluation at an arbitrary point (CLI probes).
    Vec rep(const EpsPoint& p) const { return rep_(p); }

    // --- ring and lattice operations (pointwise in eps, lazy) ---
    friend GenNum operator+(const GenNum& x, const GenNum& y);
    friend GenNum operator-(const GenNum& x, const GenNum& y);
    friend GenNum operator*(const GenNum& x, const GenNum& y);
    friend GenNum operator-(const GenNum& x);
    friend GenNum operator+(const GenNum& x, double c);
    friend GenNum operator-(const GenNum& x, double c);
    friend GenNum operator*(double c, const GenNum& x);

private:
    GaugePtr gauge_;
    int dim_;
    RepFn rep_;

    struct Cache {
        std::mutex mu;
        std::vector<std::optional<Vec>> slots;
    };
    std::shared_ptr<Cache> cache_;
};

// |x|: Euclidean norm net for dim > 1, absolute value for dim 1.
GenNum abs(const GenNum& x);
GenNum min(const GenNum& x, const GenNum& y);
GenNum max(const GenNum& x, const GenNum& y);
// x^p for scalar nets; requires positive samples when p is non-integral.
GenNum pow(const GenNum& x, double p);
// 1/x pointwise; evaluation throws NonFiniteSample at zero samples.
GenNum reciprocal(const GenNum& x);

// z_eps = x_eps on grid indices satisfying keep, y_eps otherwise.
GenNum interleave(const GenNum& x, const GenNum& y, std::function<bool(int)> keep);

// Optional per-sample noise floor for order classification. Computations that
// know their own accuracy (quadrature error estimates) report it as one of
// these; samples at or below the floor count as numerical zeros.
using FloorFn = std::function<double(std::size_t)>;

// Least-squares order classification over the tail half of the grid.
// Undetermined is returned only when the tail mixes vanishing and
// slow-decaying samples with no usable trend (documented in gen_num.cpp).
OrderEstimate classify_order(const GenNum& x, const FloorFn& floor = {},
                             const OrderThresholds& th = default_thresholds());

// x <= y in the ring order: True iff max(x-y,0) classifies Negligible or
// x_eps <= y_eps on the whole grid tail; False iff x-y is strictly positive;
// Undetermined otherwise.
Trilean le(const GenNum& x, const GenNum& y,
           const OrderThresholds& th = default_thresholds());

// Strict positivity in the sense x > 0 (invertible and >= 0): True iff some
// exponent m <= m_max has x_eps > rho_eps^m at every tail point; False iff
// x_eps <= 0 co-finally or x classifies Negligible; else Undetermined.
Trilean is_strictly_positive(const GenNum& x,
                             const OrderThresholds& th = default_thresholds());

// The certifying exponent from is_strictly_positive (smallest usable m), or
// nullopt when the verdict is not True.
std::optional<int> strict_positivity_exponent(const GenNum& x,
                                              const OrderThresholds& th = default_thresholds());

// CSV dump of sampled nets: header "eps,<name0>,..." then one row per grid
// point, LF line endings, '.' decimal separator.
void write_csv(std::ostream& os, const std::vector<GenNum>& nets,
               const std::vector<std::string>& names);

} // namespace gsf
