#pragma once

#include <functional>
#include <vector>

#include "gsf/gauge.hpp"
#include "gsf/gen_num.hpp"
#include "gsf/taylor_jet.hpp"

namespace gsf {

// Smooth cutoff: chi = 1 on [-1,1], chi = 0 outside (-2,2), transition built
// from exp(-1/t). Values are exactly 1.0 / 0.0 on the flat regions.
class BumpChi {
public:
    double operator()(double x) const;
    // Taylor jet of chi at x up to `order` (exact chain-rule derivatives)
    Jet jet(double x, int order) const;
    double derivative(double x, int order) const;
};

// A 1-D mollifier with unit mass, value 1 at 0, vanishing even moments up to
// order 2J, and zeros at the nonzero integers +-1..+-K. The integer zeros are
// structural: mu(x) = Z(x) * W(x) * exp(-x^2/2) with Z(x) = prod(1 - x^2/k^2),
// so mu(k) evaluates to exactly 0.0 whenever the argument hits an integer
// bitwise. W is an even polynomial solved for in least-norm form; all
// constraint integrals use closed Gaussian-moment formulas, never quadrature.
class Mollifier1D {
public:
    int J() const { return J_; }
    int K() const { return K_; }
    int M() const { return M_; }
    int p_max() const { return 12; }
    const std::vector<double>& coeffs() const { return c_; }

    double operator()(double x) const;
    double derivative(double x, int order) const;
    Jet jet(double x, int order) const;

    // closed-form integral of mu over R
    double analytic_mass() const;
    // closed-form integral of x^(2j) * mu over R
    double analytic_even_moment(int j) const;
    // n-dimensional radial variant c_n * mu(|x|^n), n = 1 or 2
    double radial_nd(const std::vector<double>& x, int n) const;

private:
    friend Mollifier1D build_mollifier(int J, int K, int M);
    int J_ = 0, K_ = 0, M_ = 0;
    std::vector<double> c_;   // W coefficients, c_[0] = 1 pinned
    std::vector<double> z_;   // Z expanded over even powers, z_[0] = 1
};

// Least-norm construction. M defaults to 2 + J + K + 4. Throws SingularSystem
// when the constraint matrix is rank-deficient at the requested sizes.
Mollifier1D build_mollifier(int J = 5, int K = 5, int M = -1);

// The default mollifier instance shared by embeddings and the expression
// evaluator (built once, immutable).
const Mollifier1D& default_mollifier();

// The scaled net mu_eps^b(x) = b_eps * mu(b_eps x) * chi(x |log b_eps|) with
// derivative evaluators by exact product/chain rule. Slices are even in x and
// supported in |x| <= 2 / |log b_eps|.
class ScaledMollifier {
public:
    ScaledMollifier(Mollifier1D mol, GaugePtr gauge,
                    std::function<double(const EpsPoint&)> b,
                    std::function<double(const EpsPoint&)> log_b);

    double b(const EpsPoint& p) const { return b_(p); }
    double log_b(const EpsPoint& p) const { return log_b_(p); }
    double support_radius(const EpsPoint& p) const { return 2.0 / log_b_(p); }
    double eval(const EpsPoint& p, double x, int order = 0) const;
    const Mollifier1D& mollifier() const { return mol_; }
    const GaugePtr& gauge() const { return gauge_; }
    GenNum b_net() const;

private:
    Mollifier1D mol_;
    BumpChi chi_;
    GaugePtr gauge_;
    std::function<double(const EpsPoint&)> b_;
    std::function<double(const EpsPoint&)> log_b_;
};

// b = drho^-a (the standing hypothesis b >= drho^-a holds with equality)
ScaledMollifier make_scaled_mollifier(const Mollifier1D& mol, GaugePtr gauge,
                                      double a = 1.0);

} // namespace gsf
