#include "gsf/gen_num.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace gsf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double norm_of(const std::vector<double>& v) {
    if (v.size() == 1) return std::abs(v[0]);
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

void check_same(const GenNum& x, const GenNum& y) {
    if (x.gauge().get() != y.gauge().get()) throw GaugeMismatch();
    if (x.dim() != y.dim()) throw DimMismatch();
}

} // namespace

const char* to_string(OrderClass c) {
    switch (c) {
        case OrderClass::Negligible: return "Negligible";
        case OrderClass::Moderate: return "Moderate";
        case OrderClass::Infinite: return "Infinite";
        case OrderClass::NotModerate: return "NotModerate";
        default: return "Undetermined";
    }
}

GenNum::GenNum(GaugePtr gauge, int dim, RepFn rep)
    : gauge_(std::move(gauge)), dim_(dim), rep_(std::move(rep)),
      cache_(std::make_shared<Cache>()) {
    cache_->slots.resize(gauge_->size());
}

GenNum GenNum::constant(GaugePtr g, double value) {
    return GenNum(std::move(g), 1, [value](const EpsPoint&) { return Vec{value}; });
}

GenNum GenNum::constant_vec(GaugePtr g, Vec value) {
    int d = static_cast<int>(value.size());
    return GenNum(std::move(g), d, [value](const EpsPoint&) { return value; });
}

GenNum GenNum::from_scalar_fn(GaugePtr g, std::function<double(const EpsPoint&)> fn) {
    return GenNum(std::move(g), 1, [fn](const EpsPoint& p) { return Vec{fn(p)}; });
}

GenNum GenNum::drho(GaugePtr g, double power) {
    const Gauge* gp = g.get();
    return GenNum(std::move(g), 1, [gp, power](const EpsPoint& p) {
        // exp(power * log rho) survives where rho^power would under/overflow
        return Vec{std::exp(power * gp->log_rho(p.eps))};
    });
}

const GenNum::Vec& GenNum::at(std::size_t k) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& slot = cache_->slots[k];
    if (!slot) slot = rep_(gauge_->point(k));
    return *slot;
}

double GenNum::scalar_at(std::size_t k) const {
    const Vec& v = at(k);
    return v[0];
}

// --- pointwise operations ------------------------------------------------

namespace {

GenNum zip(const GenNum& x, const GenNum& y, std::function<double(double, double)> f) {
    check_same(x, y);
    int d = x.dim();
    return GenNum(x.gauge(), d, [x, y, f, d](const EpsPoint& p) {
        GenNum::Vec a = x.rep(p), b = y.rep(p), out(d);
        for (int i = 0; i < d; ++i) out[i] = f(a[i], b[i]);
        return out;
    });
}

} // namespace

GenNum operator+(const GenNum& x, const GenNum& y) {
    return zip(x, y, [](double a, double b) { return a + b; });
}
GenNum operator-(const GenNum& x, const GenNum& y) {
    return zip(x, y, [](double a, double b) { return a - b; });
}
GenNum operator*(const GenNum& x, const GenNum& y) {
    return zip(x, y, [](double a, double b) { return a * b; });
}
GenNum operator-(const GenNum& x) {
    int d = x.dim();
    return GenNum(x.gauge(), d, [x, d](const EpsPoint& p) {
        GenNum::Vec a = x.rep(p);
        for (int i = 0; i < d; ++i) a[i] = -a[i];
        return a;
    });
}
GenNum operator+(const GenNum& x, double c) { return x + GenNum::constant(x.gauge(), c); }
GenNum operator-(const GenNum& x, double c) { return x + (-c); }
GenNum operator*(double c, const GenNum& x) {
    int d = x.dim();
    return GenNum(x.gauge(), d, [x, c, d](const EpsPoint& p) {
        GenNum::Vec a = x.rep(p);
        for (int i = 0; i < d; ++i) a[i] *= c;
        return a;
    });
}

GenNum abs(const GenNum& x) {
    return GenNum(x.gauge(), 1, [x](const EpsPoint& p) {
        return GenNum::Vec{norm_of(x.rep(p))};
    });
}

GenNum min(const GenNum& x, const GenNum& y) {
    return zip(x, y, [](double a, double b) { return std::min(a, b); });
}
GenNum max(const GenNum& x, const GenNum& y) {
    return zip(x, y, [](double a, double b) { return std::max(a, b); });
}

GenNum pow(const GenNum& x, double p) {
    if (x.dim() != 1) throw DimMismatch();
    return GenNum(x.gauge(), 1, [x, p](const EpsPoint& pt) {
        return GenNum::Vec{std::pow(x.rep(pt)[0], p)};
    });
}

GenNum reciprocal(const GenNum& x) {
    if (x.dim() != 1) throw DimMismatch();
    return GenNum(x.gauge(), 1, [x](const EpsPoint& p) {
        return GenNum::Vec{1.0 / x.rep(p)[0]};
    });
}

GenNum interleave(const GenNum& x, const GenNum& y, std::function<bool(int)> keep) {
    check_same(x, y);
    GaugePtr g = x.gauge();
    return GenNum(g, x.dim(), [x, y, keep, g](const EpsPoint& p) {
        int k = p.k >= 0 ? p.k : static_cast<int>(g->nearest_index(p.eps));
        return keep(k) ? x.rep(p) : y.rep(p);
    });
}

// --- order classification -------------------------------------------------
//
// Pointwise order t_k := log|x_k| / log rho_k over the tail half; exact and
// floored samples get t_k = +inf.
//
//  * Negligible: every last-quarter t_k exceeds q_max, and the finite ones
//    still increase across the quarter (a constant t ~ q > q_max is a plain
//    power rho^q, which is *not* negligible).
//  * NotModerate: t_k < -n_max on at least a quarter of the tail, including
//    a last-quarter point (co-final evidence).
//  * Undetermined: the tail mixes vanishing samples with slowly decaying
//    ones (neither trend usable), or has fewer than 4 usable points.
//  * Otherwise Moderate with the regression slope; slope <= -0.25 with value
//    magnitudes diverging is reported as Infinite (still moderate).

OrderEstimate classify_order(const GenNum& x, const FloorFn& floor,
                             const OrderThresholds& th) {
    const Gauge& g = *x.gauge();
    const std::size_t n = g.size();
    std::vector<double> mag(n), ord(n);
    for (std::size_t k = 0; k < n; ++k) {
        double m = norm_of(x.at(k));
        if (std::isnan(m)) throw NonFiniteSample("classify_order");
        if (std::isinf(m)) throw NonFiniteSample("classify_order");
        double fl = floor ? floor(k) : 0.0;
        if (m <= fl) m = 0.0;
        mag[k] = m;
        ord[k] = (m == 0.0) ? kInf : std::log(m) / g.log_rho(g.grid()[k]);
    }

    const std::size_t t0 = g.tail_begin(), q0 = g.last_quarter_begin();
    OrderEstimate est;

    // Negligible test over the last quarter
    bool neg = true, any_finite = false;
    double first_fin = 0.0, last_fin = 0.0;
    for (std::size_t k = q0; k < n; ++k) {
        if (ord[k] <= th.q_max) { neg = false; break; }
        if (!std::isinf(ord[k])) {
            if (!any_finite) first_fin = ord[k];
            last_fin = ord[k];
            any_finite = true;
        }
    }
    if (neg && any_finite && !(last_fin > first_fin)) neg = false;
    if (neg) {
        est.slope = kInf;
        est.cls = OrderClass::Negligible;
        return est;
    }

    // NotModerate: co-final evidence of order below -n_max
    std::size_t deep = 0;
    bool deep_late = false;
    for (std::size_t k = t0; k < n; ++k) {
        if (!std::isinf(ord[k]) && ord[k] < -th.n_max) {
            ++deep;
            if (k >= q0) deep_late = true;
        }
    }
    if (deep_late && deep >= (n - t0) / 4) {
        est.cls = OrderClass::NotModerate;
        est.slope = -kInf;
        return est;
    }

    // Regression over non-vanishing tail samples
    std::vector<double> L, Y;
    std::size_t zeros = 0;
    for (std::size_t k = t0; k < n; ++k) {
        if (mag[k] == 0.0) { ++zeros; continue; }
        L.push_back(g.log_rho(g.grid()[k]));
        Y.push_back(std::log(mag[k]));
    }
    const std::size_t tail_n = n - t0;
    if (L.size() < 4) {
        if (zeros == tail_n) {
            // identically zero tail
            est.slope = kInf;
            est.cls = OrderClass::Negligible;
            return est;
        }
        est.cls = OrderClass::Undetermined;
        return est;
    }
    if (zeros > tail_n / 5) {
        // mixed vanishing / non-vanishing tail: classify Negligible only when
        // the surviving samples are themselves past the bar
        bool rest_neg = true;
        for (std::size_t k = t0; k < n; ++k)
            if (mag[k] != 0.0 && ord[k] <= th.q_max) rest_neg = false;
        if (rest_neg) {
            est.slope = kInf;
            est.cls = OrderClass::Negligible;
        } else {
            est.cls = OrderClass::Undetermined;
        }
        return est;
    }

    double lm = 0, ym = 0;
    for (std::size_t i = 0; i < L.size(); ++i) { lm += L[i]; ym += Y[i]; }
    lm /= static_cast<double>(L.size());
    ym /= static_cast<double>(L.size());
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < L.size(); ++i) {
        sxx += (L[i] - lm) * (L[i] - lm);
        sxy += (L[i] - lm) * (Y[i] - ym);
    }
    est.slope = sxy / sxx;
    double ss = 0;
    for (std::size_t i = 0; i < L.size(); ++i) {
        double r = Y[i] - ym - est.slope * (L[i] - lm);
        ss += r * r;
    }
    est.residual = std::sqrt(ss / static_cast<double>(L.size()));
    est.cls = est.slope <= -0.25 ? OrderClass::Infinite : OrderClass::Moderate;
    return est;
}

Trilean le(const GenNum& x, const GenNum& y, const OrderThresholds& th) {
    if (x.dim() != 1 || y.dim() != 1) throw DimMismatch();
    GenNum d = x - y;
    const Gauge& g = *x.gauge();
    bool all_le = true;
    for (std::size_t k = g.tail_begin(); k < g.size(); ++k) {
        double v = d.scalar_at(k);
        if (std::isnan(v)) throw NonFiniteSample("le");
        if (v > 0.0) { all_le = false; break; }
    }
    if (all_le) return Trilean::True;
    GenNum dpos = max(d, GenNum::constant(x.gauge(), 0.0));
    if (classify_order(dpos, {}, th).negligible()) return Trilean::True;
    if (is_true(is_strictly_positive(d, th))) return Trilean::False;
    return Trilean::Undetermined;
}

namespace {

std::optional<int> positivity_exponent_impl(const GenNum& x, const OrderThresholds& th,
                                            Trilean* verdict) {
    if (x.dim() != 1) throw DimMismatch();
    const Gauge& g = *x.gauge();
    const std::size_t t0 = g.tail_begin(), q0 = g.last_quarter_begin(), n = g.size();

    std::size_t nonpos = 0;
    bool nonpos_late = false;
    double worst = -kInf; // max over tail of log x / log rho (needs x > 0)
    bool all_pos = true;
    for (std::size_t k = t0; k < n; ++k) {
        double v = x.scalar_at(k);
        if (std::isnan(v)) throw NonFiniteSample("is_strictly_positive");
        if (v <= 0.0) {
            ++nonpos;
            if (k >= q0) nonpos_late = true;
            all_pos = false;
            continue;
        }
        worst = std::max(worst, std::log(v) / g.log_rho(g.grid()[k]));
    }
    // co-final nonpositivity: a nonpositive sample in the last quarter plus
    // at least an eighth of the tail, or a fully nonpositive tail
    if (nonpos == n - t0 || (nonpos_late && nonpos >= std::max<std::size_t>(2, (n - t0) / 8))) {
        *verdict = Trilean::False;
        return std::nullopt;
    }
    if (classify_order(x, {}, th).negligible()) {
        *verdict = Trilean::False;
        return std::nullopt;
    }
    if (all_pos && worst < th.m_max) {
        *verdict = Trilean::True;
        int m = static_cast<int>(std::floor(std::max(worst, 0.0))) + 1;
        return m;
    }
    *verdict = Trilean::Undetermined;
    return std::nullopt;
}

} // namespace

Trilean is_strictly_positive(const GenNum& x, const OrderThresholds& th) {
    Trilean v = Trilean::Undetermined;
    positivity_exponent_impl(x, th, &v);
    return v;
}

std::optional<int> strict_positivity_exponent(const GenNum& x, const OrderThresholds& th) {
    Trilean v = Trilean::Undetermined;
    auto m = positivity_exponent_impl(x, th, &v);
    return is_true(v) ? m : std::nullopt;
}

void write_csv(std::ostream& os, const std::vector<GenNum>& nets,
               const std::vector<std::string>& names) {
    os << "eps";
    for (const auto& nm : names) os << ',' << nm;
    os << '\n';
    if (nets.empty()) return;
    const Gauge& g = *nets[0].gauge();
    os.precision(17);
    for (std::size_t k = 0; k < g.size(); ++k) {
        os << g.grid()[k];
        for (const auto& net : nets) {
            const auto& v = net.at(k);
            for (double c : v) os << ',' << c;
        }
        os << '\n';
    }
}

} // namespace gsf
