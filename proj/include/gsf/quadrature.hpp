#pragma once

#include <functional>
#include <vector>

namespace gsf {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;    // truncation estimate plus a roundoff bound
    double l1 = 0.0;       // accumulated integral of |f|, for noise floors
    bool converged = true;
    int panels = 0;
};

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_panels = 20000;
};

// Adaptive Gauss7/Kronrod15 over [a, b] (a > b allowed, sign handled).
// Breakpoints force initial panel splits, e.g. at mollifier support edges.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opt = {},
                     const std::vector<double>& breakpoints = {});

} // namespace gsf
