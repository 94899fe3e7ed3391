#include "gsf/mollifier.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "gsf/errors.hpp"

namespace gsf {

namespace {

// G_t = integral of x^(2t) exp(-x^2/2) over R = sqrt(2 pi) (2t-1)!!
double gauss_moment(int t) {
    double v = std::sqrt(2.0 * std::numbers::pi);
    for (int i = 1; i <= t; ++i) v *= static_cast<double>(2 * i - 1);
    return v;
}

double psi(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

Jet psi_jet(const Jet& t) {
    if (t.value() <= 0.0) return Jet::constant(t.order(), 0.0);
    Jet one = Jet::constant(t.order(), 1.0);
    return exp(-(one / t));
}

} // namespace

double BumpChi::operator()(double x) const {
    double u = 2.0 - std::abs(x);
    if (u >= 1.0) return 1.0;
    if (u <= 0.0) return 0.0;
    double a = psi(u), b = psi(1.0 - u);
    return a / (a + b);
}

Jet BumpChi::jet(double x, int order) const {
    double ax = std::abs(x);
    if (ax <= 1.0 || ax >= 2.0)
        return Jet::constant(order, ax <= 1.0 ? 1.0 : 0.0);
    // u = 2 - |x| is linear away from x = 0, so chain through a variable jet
    Jet u(order);
    u.coeff(0) = 2.0 - ax;
    if (order >= 1) u.coeff(1) = x > 0 ? -1.0 : 1.0;
    Jet a = psi_jet(u);
    Jet b = psi_jet(Jet::constant(order, 1.0) - u);
    return a / (a + b);
}

double BumpChi::derivative(double x, int order) const {
    if (order == 0) return (*this)(x);
    return jet(x, order).derivative(order);
}

double Mollifier1D::operator()(double x) const {
    double x2 = x * x;
    double z = 1.0;
    for (int k = 1; k <= K_; ++k) z *= 1.0 - x2 / static_cast<double>(k * k);
    double w = 0.0;
    for (int m = M_; m >= 0; --m) w = w * x2 + c_[m];
    double g = std::exp(-0.5 * x2);
    return z * w * g;
}

Jet Mollifier1D::jet(double x, int order) const {
    if (order > p_max()) throw OrderTooHigh(order, p_max());
    Jet xv = Jet::variable(order, x);
    Jet x2 = xv * xv;
    Jet z = Jet::constant(order, 1.0);
    for (int k = 1; k <= K_; ++k)
        z = z * (Jet::constant(order, 1.0) - (1.0 / static_cast<double>(k * k)) * x2);
    Jet w = Jet::constant(order, c_[M_]);
    for (int m = M_ - 1; m >= 0; --m) w = w * x2 + Jet::constant(order, c_[m]);
    Jet g = exp(-0.5 * x2);
    return z * w * g;
}

double Mollifier1D::derivative(double x, int order) const {
    if (order == 0) return (*this)(x);
    return jet(x, order).derivative(order);
}

double Mollifier1D::analytic_mass() const {
    // integral = sum_m c_m sum_i z_i G_(i+m)
    double s = 0.0;
    for (int m = 0; m <= M_; ++m) {
        double a = 0.0;
        for (int i = 0; i <= K_; ++i) a += z_[i] * gauss_moment(i + m);
        s += c_[m] * a;
    }
    return s;
}

double Mollifier1D::analytic_even_moment(int j) const {
    double s = 0.0;
    for (int m = 0; m <= M_; ++m) {
        double a = 0.0;
        for (int i = 0; i <= K_; ++i) a += z_[i] * gauss_moment(i + m + j);
        s += c_[m] * a;
    }
    return s;
}

double Mollifier1D::radial_nd(const std::vector<double>& x, int n) const {
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    double r = std::sqrt(r2);
    if (n == 1) return (*this)(r);
    if (n == 2) return (2.0 / std::numbers::pi) * (*this)(r2);
    throw Error("radial mollifier implemented for n = 1, 2 only");
}

Mollifier1D build_mollifier(int J, int K, int M) {
    if (M < 0) M = 2 + J + K + 4;
    if (M < J + 1)
        throw SingularSystem("mollifier basis too small for the requested moment conditions");

    Mollifier1D mol;
    mol.J_ = J;
    mol.K_ = K;
    mol.M_ = M;

    // expand Z(x) = prod_k (1 - x^2/k^2) over even powers
    std::vector<double> z{1.0};
    for (int k = 1; k <= K; ++k) {
        std::vector<double> nz(z.size() + 1, 0.0);
        double ik2 = 1.0 / static_cast<double>(k * k);
        for (std::size_t i = 0; i < z.size(); ++i) {
            nz[i] += z[i];
            nz[i + 1] -= z[i] * ik2;
        }
        z = std::move(nz);
    }
    mol.z_ = z;

    auto moment_row = [&](int m, int j) {
        double a = 0.0;
        for (int i = 0; i <= K; ++i) a += z[static_cast<std::size_t>(i)] * gauss_moment(i + m + j);
        return a;
    };

    // c_0 = 1 pinned by mu(0) = 1; solve least-norm for c_1..c_M from the
    // unit-mass row (j = 0) and the vanishing even moments j = 1..J.
    const int rows = 1 + J;
    Eigen::MatrixXd A(rows, M);
    Eigen::VectorXd rhs(rows);
    for (int j = 0; j <= J; ++j) {
        for (int m = 1; m <= M; ++m) A(j, m - 1) = moment_row(m, j);
        rhs(j) = (j == 0 ? 1.0 : 0.0) - moment_row(0, j);
    }

    // column equilibration keeps the Gaussian-moment growth out of the solve
    Eigen::VectorXd scale(M);
    for (int m = 0; m < M; ++m) {
        double s = A.col(m).cwiseAbs().maxCoeff();
        scale(m) = s > 0 ? s : 1.0;
    }
    Eigen::MatrixXd As = A * scale.cwiseInverse().asDiagonal();
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(As);
    if (cod.rank() < rows)
        throw SingularSystem("mollifier constraint matrix is rank-deficient at (J,K,M)=(" +
                             std::to_string(J) + "," + std::to_string(K) + "," +
                             std::to_string(M) + ")");
    Eigen::VectorXd y = cod.solve(rhs);
    // two rounds of iterative refinement push residuals to rounding level
    for (int it = 0; it < 2; ++it) {
        Eigen::VectorXd r = rhs - As * y;
        y += cod.solve(r);
    }
    Eigen::VectorXd c = scale.cwiseInverse().asDiagonal() * y;

    mol.c_.assign(static_cast<std::size_t>(M) + 1, 0.0);
    mol.c_[0] = 1.0;
    for (int m = 1; m <= M; ++m) mol.c_[static_cast<std::size_t>(m)] = c(m - 1);
    return mol;
}

const Mollifier1D& default_mollifier() {
    static Mollifier1D mol = build_mollifier();
    return mol;
}

ScaledMollifier::ScaledMollifier(Mollifier1D mol, GaugePtr gauge,
                                 std::function<double(const EpsPoint&)> b,
                                 std::function<double(const EpsPoint&)> log_b)
    : mol_(std::move(mol)), gauge_(std::move(gauge)), b_(std::move(b)),
      log_b_(std::move(log_b)) {}

double ScaledMollifier::eval(const EpsPoint& p, double x, int order) const {
    const double b = b_(p);
    const double L = log_b_(p);
    if (order == 0) {
        double ch = chi_(x * L);
        if (ch == 0.0) return 0.0;
        return b * mol_(b * x) * ch;
    }
    // product jet of mu(bx) and chi(xL); coefficient scaling by b^j and L^j
    Jet mj = mol_.jet(b * x, order);
    Jet cj = chi_.jet(x * L, order);
    double pb = 1.0, pl = 1.0;
    for (int j = 0; j <= order; ++j) {
        mj.coeff(static_cast<std::size_t>(j)) *= pb;
        cj.coeff(static_cast<std::size_t>(j)) *= pl;
        pb *= b;
        pl *= L;
    }
    Jet prod = mj * cj;
    return b * prod.derivative(static_cast<std::size_t>(order));
}

GenNum ScaledMollifier::b_net() const {
    auto b = b_;
    return GenNum::from_scalar_fn(gauge_, [b](const EpsPoint& p) { return b(p); });
}

ScaledMollifier make_scaled_mollifier(const Mollifier1D& mol, GaugePtr gauge, double a) {
    const Gauge* g = gauge.get();
    return ScaledMollifier(
        mol, gauge,
        [g, a](const EpsPoint& p) { return std::exp(-a * g->log_rho(p.eps)); },
        [g, a](const EpsPoint& p) { return -a * g->log_rho(p.eps); });
}

} // namespace gsf
