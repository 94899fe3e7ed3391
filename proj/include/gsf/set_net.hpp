#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gsf/gauge.hpp"
#include "gsf/gen_num.hpp"
#include "gsf/quadrature.hpp"
#include "gsf/trilean.hpp"

namespace gsf {

// A net of subsets of R^n described by distance evaluators: dist(eps, x) is
// the distance from x to the slice A_eps, codist(eps, x) the distance to its
// complement. Structured kinds carry exact closed forms; Generic falls back
// to minimization over a declared bounding box.
class SetNet {
public:
    enum class Kind { Box, Ball, FinitePoints, FiniteUnion, Generic };
    using Vec = std::vector<double>;
    using DistFn = std::function<double(const EpsPoint&, const Vec&)>;
    using BoundsFn = std::function<std::pair<double, double>(const EpsPoint&)>;

    int dim() const { return dim_; }
    Kind kind() const { return kind_; }
    bool open() const { return open_; }
    const GaugePtr& gauge() const { return gauge_; }

    double dist(const EpsPoint& p, const Vec& x) const { return dist_(p, x); }
    double codist(const EpsPoint& p, const Vec& x) const { return codist_(p, x); }
    double dist1(const EpsPoint& p, double x) const { return dist_(p, Vec{x}); }
    double codist1(const EpsPoint& p, double x) const { return codist_(p, Vec{x}); }

    // 1-D interval slices where the kind supports them ({lo > hi} = empty)
    std::optional<std::pair<double, double>> bounds(const EpsPoint& p) const;

    // --- factories ---
    static SetNet interval(GaugePtr g, std::function<double(const EpsPoint&)> lo,
                           std::function<double(const EpsPoint&)> hi, bool open);
    static SetNet interval_const(GaugePtr g, double lo, double hi, bool open);
    static SetNet ball(GaugePtr g, std::function<Vec(const EpsPoint&)> center,
                       std::function<double(const EpsPoint&)> radius, bool open);
    static SetNet box2(GaugePtr g, BoundsFn x_bounds, BoundsFn y_bounds, bool open);
    static SetNet finite_points(GaugePtr g,
                                std::function<std::vector<double>(const EpsPoint&)> pts);
    static SetNet finite_union(GaugePtr g, std::vector<SetNet> intervals);
    // Eq-style lattice {s, 2s, ..., Ns} with spacing s(eps) (given by its log)
    // and N ~ 1/s; below double resolution the slice is reported dense in [0,1].
    static SetNet unit_lattice(GaugePtr g,
                               std::function<double(const EpsPoint&)> log_spacing);
    static SetNet generic(GaugePtr g, int dim,
                          std::function<bool(const EpsPoint&, const Vec&)> indicator,
                          Vec bbox_lo, Vec bbox_hi, bool open, int grid_per_dim = 0);

private:
    int dim_ = 1;
    Kind kind_ = Kind::Generic;
    bool open_ = false;
    GaugePtr gauge_;
    DistFn dist_, codist_;
    BoundsFn bounds_;
};

// [x_eps] in [A_eps]: True iff the distance net classifies Negligible, False
// iff it is strictly positive of finite order, else Undetermined.
Trilean member_internal(const GenNum& x, const SetNet& A);

// [x_eps] in <A_eps>: True iff codist(x_eps) > rho^q on the tail for some
// q <= q_max (the certifying q is reported by member_strongly_exponent);
// False iff x_eps lands outside co-finally or the codistance net classifies
// Negligible; else Undetermined.
Trilean member_strongly(const GenNum& x, const SetNet& A);
std::optional<int> member_strongly_exponent(const GenNum& x, const SetNet& A);

// A functionally compact set: per-eps compact slices, a sharp bound, and an
// exact evaluator for the Lebesgue measure of the closed r-enlargement.
// The enlargement radius is passed as log r so the measure stays meaningful
// long after r itself underflows.
class FunctCompact {
public:
    using ScalarField = std::function<double(const EpsPoint&, const std::vector<double>&)>;
    using MeasureFn = std::function<double(const EpsPoint&, double /*log_r*/)>;
    struct EnlIntegral {
        double value;
        double error;
    };
    using IntegrateFn = std::function<EnlIntegral(const EpsPoint&, double /*log_r*/,
                                                  const ScalarField&, const QuadOptions&)>;

    const SetNet& base() const { return base_; }
    const GenNum& bound() const { return bound_; }
    int dim() const { return base_.dim(); }
    const GaugePtr& gauge() const { return base_.gauge(); }

    double measure_enlargement(const EpsPoint& p, double log_r) const {
        return measure_(p, log_r);
    }
    bool can_integrate() const { return static_cast<bool>(integrate_); }
    EnlIntegral integrate_enlargement(const EpsPoint& p, double log_r, const ScalarField& f,
                                      const QuadOptions& opt = {}) const;
    // quadrature hints (union of f-agnostic breakpoints), may be empty
    std::vector<double> breakpoints(const EpsPoint& p) const;

    // --- factories ---
    static FunctCompact interval(GaugePtr g, std::function<double(const EpsPoint&)> lo,
                                 std::function<double(const EpsPoint&)> hi);
    static FunctCompact interval_const(GaugePtr g, double lo, double hi);
    static FunctCompact finite_points(GaugePtr g,
                                      std::function<std::vector<double>(const EpsPoint&)> pts);
    // K = {1/n : n >= 1} union {0}
    static FunctCompact reciprocal_points(GaugePtr g);
    // K = {1/log n : n >= 2} union {0}
    static FunctCompact reciprocal_log_points(GaugePtr g);
    static FunctCompact box2(GaugePtr g, SetNet::BoundsFn xb, SetNet::BoundsFn yb);
    static FunctCompact ball2(GaugePtr g, std::function<SetNet::Vec(const EpsPoint&)> center,
                              std::function<double(const EpsPoint&)> radius);
    // convex polygon with per-eps vertices in counterclockwise order
    static FunctCompact polygon2(GaugePtr g,
                                 std::function<std::vector<SetNet::Vec>(const EpsPoint&)> verts);

    SetNet base_;
    GenNum bound_;
    MeasureFn measure_;
    IntegrateFn integrate_;
    std::function<std::vector<double>(const EpsPoint&)> breaks_;

    FunctCompact(SetNet base, GenNum bound, MeasureFn m, IntegrateFn i = {},
                 std::function<std::vector<double>(const EpsPoint&)> br = {});
};

// Closed r-enlargement, composing the enlargement measure accordingly.
// Requires r strictly positive.
FunctCompact enlarge(const FunctCompact& K, const GenNum& r);

struct LebesgueNumber {
    GenNum value;
    Trilean positive;
};

// s_eps = 1/2 min over a dense grid of K_eps of max_j codist_j(eps, x); the
// empty slice falls back to s_eps = 1. Lower-accuracy estimate unless K is a
// structured 1-D set (documented); the scan grid contains the midpoint.
LebesgueNumber lebesgue_number(const std::vector<SetNet>& cover, const FunctCompact& K);

} // namespace gsf
