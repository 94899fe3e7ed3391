#include "gsf/gauge.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "gsf/trilean.hpp"

namespace gsf {

std::ostream& operator<<(std::ostream& os, Trilean t) { return os << to_string(t); }

Gauge::Gauge(std::string name,
             std::function<double(double)> rho,
             std::function<double(double)> log_rho,
             std::function<double(double)> ln_neg_log,
             double eps0, double theta, std::size_t count)
    : name_(std::move(name)),
      rho_(std::move(rho)),
      log_rho_(std::move(log_rho)),
      ln_neg_log_(std::move(ln_neg_log)) {
    if (count < 16) throw std::invalid_argument("gauge grid needs at least 16 points");
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("grid ratio must be in (0,1)");
    grid_.reserve(count);
    double e = eps0;
    for (std::size_t i = 0; i < count; ++i) {
        grid_.push_back(e);
        e *= theta;
    }
    // rho must decrease strictly along the grid tail. Checked through
    // ln(-log rho), which stays finite even when log rho itself saturates
    // (e.g. the two-gauge sigma).
    for (std::size_t i = tail_begin(); i + 1 < grid_.size(); ++i) {
        if (!(ln_neg_log_(grid_[i + 1]) > ln_neg_log_(grid_[i])))
            throw std::invalid_argument("rho is not strictly decreasing along the grid tail");
    }
}

std::size_t Gauge::nearest_index(double eps) const {
    std::size_t best = 0;
    double bd = std::abs(std::log(eps) - std::log(grid_[0]));
    for (std::size_t i = 1; i < grid_.size(); ++i) {
        double d = std::abs(std::log(eps) - std::log(grid_[i]));
        if (d < bd) { bd = d; best = i; }
    }
    return best;
}

GaugePtr Gauge::standard() {
    static GaugePtr g = std::make_shared<Gauge>(
        "eps",
        [](double e) { return e; },
        [](double e) { return std::log(e); },
        [](double e) { return std::log(-std::log(e)); });
    return g;
}

GaugePtr Gauge::exp_inv() {
    static GaugePtr g = std::make_shared<Gauge>(
        "exp(-1/eps)",
        [](double e) { return std::exp(-1.0 / e); },
        [](double e) { return -1.0 / e; },
        [](double e) { return std::log(1.0 / e); });
    return g;
}

GaugePtr Gauge::hyper_sigma(const GaugePtr& rho) {
    auto r = rho->rho_;
    return std::make_shared<Gauge>(
        "exp(-rho^(-1/rho))",
        [r](double e) { double p = r(e); return std::exp(-std::pow(p, -1.0 / p)); },
        // log sigma = -rho^(-1/rho); overflows to -inf deep in the tail, which
        // is the honest saturation for this gauge
        [r](double e) { double p = r(e); return -std::pow(p, -1.0 / p); },
        // ln(-log sigma) = (1/rho) ln(1/rho), always representable
        [r](double e) { double p = r(e); return std::log(1.0 / p) / p; });
}

OrderThresholds& default_thresholds() {
    static OrderThresholds th;
    return th;
}

} // namespace gsf
