#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace gsf {

// Truncated Taylor-series arithmetic (forward-mode AD to arbitrary order).
// coeff[j] holds the j-th Taylor coefficient f^(j)(x0)/j!. Used for exact
// derivatives of the cutoff bump and for chain-rule derivatives of
// compositions.
class Jet {
public:
    explicit Jet(std::size_t order) : c_(order + 1, 0.0) {}
    static Jet constant(std::size_t order, double v) {
        Jet j(order);
        j.c_[0] = v;
        return j;
    }
    static Jet variable(std::size_t order, double v) {
        Jet j(order);
        j.c_[0] = v;
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    std::size_t order() const { return c_.size() - 1; }
    double value() const { return c_[0]; }
    double coeff(std::size_t j) const { return c_[j]; }
    double& coeff(std::size_t j) { return c_[j]; }
    // j-th derivative = j! * coeff[j]
    double derivative(std::size_t j) const {
        double f = 1.0;
        for (std::size_t i = 2; i <= j; ++i) f *= static_cast<double>(i);
        return c_[j] * f;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet r(a.order());
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        Jet r(a.order());
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r(a.order());
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            for (std::size_t j = 0; i + j < r.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }
    friend Jet operator*(double s, const Jet& a) {
        Jet r = a;
        for (double& x : r.c_) x *= s;
        return r;
    }
    friend Jet operator-(const Jet& a) { return -1.0 * a; }

    // division: c = a/b with b.value() != 0, standard recurrence
    friend Jet operator/(const Jet& a, const Jet& b) {
        Jet r(a.order());
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            double s = a.c_[i];
            for (std::size_t j = 1; j <= i; ++j) s -= b.c_[j] * r.c_[i - j];
            r.c_[i] = s / b.c_[0];
        }
        return r;
    }

private:
    std::vector<double> c_;
};

// exp of a jet via the ODE recurrence (e^u)' = u' e^u.
inline Jet exp(const Jet& u) {
    Jet r(u.order());
    r.coeff(0) = std::exp(u.value());
    for (std::size_t n = 1; n <= u.order(); ++n) {
        double s = 0.0;
        for (std::size_t k = 1; k <= n; ++k)
            s += static_cast<double>(k) * u.coeff(k) * r.coeff(n - k);
        r.coeff(n) = s / static_cast<double>(n);
    }
    return r;
}

// Composition of truncated series: outer coefficients are Taylor coefficients
// of g at f.value(); inner is the series of f. Returns the series of g(f(.)).
// inner.coeff(0) is ignored (the expansion point shift).
inline std::vector<double> compose_series(const std::vector<double>& outer,
                                          const std::vector<double>& inner) {
    std::size_t n = inner.size() - 1;
    std::vector<double> acc(n + 1, 0.0), pw(n + 1, 0.0), tmp(n + 1, 0.0);
    pw[0] = 1.0;
    acc[0] = outer[0];
    for (std::size_t m = 1; m < outer.size() && m <= n; ++m) {
        // pw *= (inner - inner0)
        std::fill(tmp.begin(), tmp.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (pw[i] == 0.0) continue;
            for (std::size_t j = 1; i + j <= n; ++j) tmp[i + j] += pw[i] * inner[j];
        }
        pw = tmp;
        for (std::size_t i = 0; i <= n; ++i) acc[i] += outer[m] * pw[i];
    }
    return acc;
}

} // namespace gsf
