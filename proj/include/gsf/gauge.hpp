#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace gsf {

// A sample point of the epsilon grid. `k` is the grid index, or -1 when the
// evaluation happens off-grid (CLI probes); index-sensitive nets (interleave)
// then snap to the nearest grid index.
struct EpsPoint {
    double eps;
    int k;
};

// The infinitesimal net rho plus the geometric epsilon sampling grid.
// Everything in the toolkit is relative to one of these. log_rho must be the
// exact logarithm of rho (it stays finite long after rho itself underflows),
// and ln_neg_log is ln(-log rho), needed by the hyperlimit index search where
// even log rho overflows.
class Gauge {
public:
    Gauge(std::string name,
          std::function<double(double)> rho,
          std::function<double(double)> log_rho,
          std::function<double(double)> ln_neg_log,
          double eps0 = 0.0625, double theta = 0.5, std::size_t count = 45);

    // rho_eps = eps on the dyadic grid eps_k = 2^-k, k = 4..48
    static std::shared_ptr<const Gauge> standard();
    // rho_eps = exp(-1/eps)
    static std::shared_ptr<const Gauge> exp_inv();
    // sigma_eps = exp(-rho_eps^(-1/rho_eps)), the two-gauge hyperlimit companion
    static std::shared_ptr<const Gauge> hyper_sigma(const std::shared_ptr<const Gauge>& rho);

    double rho(double eps) const { return rho_(eps); }
    double log_rho(double eps) const { return log_rho_(eps); }
    double ln_neg_log(double eps) const { return ln_neg_log_(eps); }

    const std::vector<double>& grid() const { return grid_; }
    std::size_t size() const { return grid_.size(); }
    EpsPoint point(std::size_t k) const { return {grid_[k], static_cast<int>(k)}; }
    std::size_t tail_begin() const { return grid_.size() / 2; }
    std::size_t last_quarter_begin() const { return (3 * grid_.size()) / 4; }
    std::size_t nearest_index(double eps) const;

    const std::string& name() const { return name_; }
    bool monotonic() const { return monotonic_; }

private:
    std::string name_;
    std::function<double(double)> rho_;
    std::function<double(double)> log_rho_;
    std::function<double(double)> ln_neg_log_;
    std::vector<double> grid_;
    bool monotonic_ = true;
};

using GaugePtr = std::shared_ptr<const Gauge>;

// Classification thresholds. Asymptotic statements are semidecidable from a
// finite grid, so the cutoffs are explicit and configurable.
struct OrderThresholds {
    double q_max = 15.0;   // negligibility: pointwise order must exceed this
    double n_max = 15.0;   // moderateness bound for the NotModerate verdict
    double m_max = 30.0;   // invertibility exponent bound (Lemma: x_eps > rho^m)
};

OrderThresholds& default_thresholds();

} // namespace gsf
