#pragma once

#include <utility>
#include <vector>

namespace angleopt {

/// Real-coefficient polynomial stored in ascending degree order.
/// Exact trailing zeros are trimmed on construction, so degree() reflects the
/// true leading coefficient; the zero polynomial has degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> ascending_coefficients);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coefficients() const { return coeffs_; }
    double coefficient(int power) const;

    double operator()(double x) const;
    Polynomial derivative() const;

  private:
    std::vector<double> coeffs_;
};

/// Euclidean division: numerator = quotient * denominator + remainder, with
/// deg(remainder) < deg(denominator). Throws on a zero denominator.
std::pair<Polynomial, Polynomial> divide(const Polynomial& numerator,
                                         const Polynomial& denominator);

/// All real roots of p inside [lo, hi], sorted ascending, with repeated roots
/// collapsed to a single entry (cluster radius 1e-7 relative to the root
/// magnitude, floored at 1e-7 absolute). Degrees 1-4
/// use closed forms with a Newton polish; degrees 5 and up fall back to
/// recursive monotone-interval bisection between the critical points.
/// Throws std::invalid_argument for the zero polynomial or degree 0.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi);

}  // namespace angleopt
