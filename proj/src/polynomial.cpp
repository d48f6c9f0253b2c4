#include "angleopt/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace angleopt {
namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

double max_abs_coefficient(const std::vector<double>& c) {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> solve_linear(double c0, double c1) {
    return {-c0 / c1};
}

// Numerically stable quadratic (avoids cancellation in the small root).
std::vector<double> solve_quadratic(double c0, double c1, double c2) {
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    const double scale = std::max(c1 * c1, std::abs(4.0 * c2 * c0));
    if (disc < 0.0) {
        if (disc >= -4.0 * 1e-14 * scale) {
            return {-c1 / (2.0 * c2)};
        }
        return {};
    }
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (c1 + std::copysign(sq, c1));
    if (q == 0.0) {
        return {-c1 / (2.0 * c2)};
    }
    double r1 = q / c2;
    double r2 = c0 / q;
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

std::vector<double> solve_cubic(double c0, double c1, double c2, double c3) {
    // Monic then depressed: x = t - a/3 turns x^3+ax^2+bx+c into t^3+pt+q.
    const double a = c2 / c3;
    const double b = c1 / c3;
    const double c = c0 / c3;
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double shift = -a / 3.0;

    const double half_q = 0.5 * q;
    const double third_p = p / 3.0;
    const double disc = half_q * half_q + third_p * third_p * third_p;
    const double scale = std::max(half_q * half_q, std::abs(third_p * third_p * third_p));

    std::vector<double> roots;
    if (disc > 1e-14 * scale) {
        const double sq = std::sqrt(disc);
        const double u = std::cbrt(-half_q + sq);
        const double v = std::cbrt(-half_q - sq);
        roots = {u + v + shift};
    } else if (disc >= -1e-14 * scale) {
        // Repeated root boundary.
        const double u = std::cbrt(-half_q);
        roots = {2.0 * u + shift, -u + shift};
    } else {
        // Three distinct real roots: trigonometric form.
        const double rho = std::sqrt(-third_p);
        const double arg = std::clamp(-half_q / (rho * rho * rho), -1.0, 1.0);
        const double phi = std::acos(arg);
        for (int k = 0; k < 3; ++k) {
            roots.push_back(2.0 * rho * std::cos((phi - kTau * k) / 3.0) + shift);
        }
    }
    return roots;
}

std::vector<double> solve_quartic(double c0, double c1, double c2, double c3, double c4) {
    // Monic then depressed: x = y - a3/4 turns it into y^4 + p y^2 + q y + s.
    const double a3 = c3 / c4;
    const double a2 = c2 / c4;
    const double a1 = c1 / c4;
    const double a0 = c0 / c4;
    const double p = a2 - 3.0 * a3 * a3 / 8.0;
    const double q = a1 - a2 * a3 / 2.0 + a3 * a3 * a3 / 8.0;
    const double s = a0 - a1 * a3 / 4.0 + a2 * a3 * a3 / 16.0 - 3.0 * a3 * a3 * a3 * a3 / 256.0;
    const double shift = -a3 / 4.0;

    std::vector<double> ys;
    const double q_scale = std::max({1.0, std::abs(p), std::abs(s)});
    if (std::abs(q) <= 1e-13 * q_scale) {
        // Biquadratic: z^2 + p z + s with z = y^2.
        for (double z : solve_quadratic(s, p, 1.0)) {
            if (z < 0.0) {
                if (z >= -1e-12 * q_scale) z = 0.0;
                else continue;
            }
            const double y = std::sqrt(z);
            ys.push_back(y);
            if (y > 0.0) ys.push_back(-y);
        }
    } else {
        // Factor y^4+py^2+qy+s = (y^2+ay+b)(y^2-ay+g); u = a^2 satisfies the
        // resolvent cubic u^3 + 2p u^2 + (p^2-4s) u - q^2 = 0, which always
        // has a positive root because its value at u=0 is -q^2 < 0.
        double u = 0.0;
        for (double r : solve_cubic(-q * q, p * p - 4.0 * s, 2.0 * p, 1.0)) {
            u = std::max(u, r);
        }
        u = std::max(u, 1e-300);
        const double alpha = std::sqrt(u);
        const double beta = 0.5 * (p + u - q / alpha);
        const double gamma = 0.5 * (p + u + q / alpha);
        for (double y : solve_quadratic(beta, alpha, 1.0)) ys.push_back(y);
        for (double y : solve_quadratic(gamma, -alpha, 1.0)) ys.push_back(y);
    }

    std::vector<double> roots;
    roots.reserve(ys.size());
    for (double y : ys) roots.push_back(y + shift);
    return roots;
}

void newton_polish(const Polynomial& p, const Polynomial& dp, double& x) {
    double fx = std::abs(p(x));
    for (int i = 0; i < 3; ++i) {
        const double d = dp(x);
        if (d == 0.0) return;
        const double nx = x - p(x) / d;
        if (!std::isfinite(nx)) return;
        const double fnx = std::abs(p(nx));
        if (fnx >= fx) return;
        x = nx;
        fx = fnx;
    }
}

double bisect(const Polynomial& p, double lo, double hi, double flo) {
    for (int i = 0; i < 120 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = p(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Degrees >= 5: the polynomial is monotone between consecutive roots of its
// derivative, so bisection over those intervals finds every real root.
std::vector<double> roots_by_monotone_intervals(const Polynomial& p, double lo, double hi) {
    const Polynomial dp = p.derivative();
    std::vector<double> breaks = real_roots(dp, lo, hi);
    breaks.insert(breaks.begin(), lo);
    breaks.push_back(hi);
    std::sort(breaks.begin(), breaks.end());

    // A critical point sitting on the axis is a (multiple) root in itself.
    // The acceptance threshold only absorbs evaluation noise (Horner bound at
    // the point); a dip between two distinct nearby roots sits orders of
    // magnitude above it and must not be reported as a root.
    const auto touches_axis = [&p](double x) {
        const double ax = std::abs(x);
        double bound = 0.0;
        const auto& c = p.coefficients();
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            bound = bound * ax + std::abs(*it);
        }
        return std::abs(p(x)) <= 1e-12 * std::max(1.0, bound);
    };
    std::vector<double> roots;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        if (touches_axis(breaks[i])) {
            roots.push_back(breaks[i]);
        }
        if (i + 1 < breaks.size()) {
            const double f0 = p(breaks[i]);
            const double f1 = p(breaks[i + 1]);
            if ((f0 > 0.0 && f1 < 0.0) || (f0 < 0.0 && f1 > 0.0)) {
                roots.push_back(bisect(p, breaks[i], breaks[i + 1], f0));
            }
        }
    }
    return roots;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) {
        coeffs_.pop_back();
    }
}

double Polynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[static_cast<std::size_t>(power)];
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = static_cast<double>(i) * coeffs_[i];
    }
    return Polynomial(std::move(d));
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& numerator,
                                         const Polynomial& denominator) {
    if (denominator.degree() < 0) {
        throw std::invalid_argument("polynomial division by zero");
    }
    std::vector<double> rem = numerator.coefficients();
    const auto& den = denominator.coefficients();
    const int dn = numerator.degree();
    const int dd = denominator.degree();
    if (dn < dd) {
        return {Polynomial{}, numerator};
    }
    std::vector<double> quot(static_cast<std::size_t>(dn - dd) + 1, 0.0);
    for (int k = dn - dd; k >= 0; --k) {
        const double factor = rem[static_cast<std::size_t>(k + dd)] / den.back();
        quot[static_cast<std::size_t>(k)] = factor;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= factor * den[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::vector<double> real_roots(const Polynomial& p, double lo, double hi) {
    if (p.degree() < 1) {
        throw std::invalid_argument("real_roots: polynomial must have degree >= 1");
    }
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("real_roots: invalid interval");
    }

    // Normalize once so every epsilon below is relative.
    std::vector<double> c = p.coefficients();
    const double m = max_abs_coefficient(c);
    for (double& v : c) v /= m;
    // A leading coefficient at rounding-noise level makes the closed forms
    // explode; treat the polynomial as one degree lower instead.
    while (c.size() > 2 && std::abs(c.back()) <= 1e-14) {
        c.pop_back();
    }
    const Polynomial np(std::move(c));
    const Polynomial dnp = np.derivative();

    std::vector<double> roots;
    const auto& cc = np.coefficients();
    switch (np.degree()) {
        case 1:
            roots = solve_linear(cc[0], cc[1]);
            break;
        case 2:
            roots = solve_quadratic(cc[0], cc[1], cc[2]);
            break;
        case 3:
            roots = solve_cubic(cc[0], cc[1], cc[2], cc[3]);
            break;
        case 4:
            roots = solve_quartic(cc[0], cc[1], cc[2], cc[3], cc[4]);
            break;
        default:
            roots = roots_by_monotone_intervals(np, lo, hi);
            break;
    }

    for (double& r : roots) {
        newton_polish(np, dnp, r);
    }

    const double btol = 1e-9 * std::max(1.0, hi - lo);
    std::vector<double> in_range;
    for (double r : roots) {
        if (!std::isfinite(r)) continue;
        if (r < lo - btol || r > hi + btol) continue;
        in_range.push_back(std::clamp(r, lo, hi));
    }
    std::sort(in_range.begin(), in_range.end());

    // Collapse multiplicities. The tolerance follows the root magnitude, not
    // the interval width, so wide search ranges keep distinct roots apart.
    std::vector<double> out;
    std::size_t i = 0;
    while (i < in_range.size()) {
        std::size_t j = i;
        while (j + 1 < in_range.size() &&
               in_range[j + 1] - in_range[j] <=
                   1e-7 * std::max({1.0, std::abs(in_range[j]), std::abs(in_range[j + 1])})) {
            ++j;
        }
        double rep = 0.0;
        for (std::size_t k = i; k <= j; ++k) rep += in_range[k];
        out.push_back(rep / static_cast<double>(j - i + 1));
        i = j + 1;
    }
    return out;
}

}  // namespace angleopt
