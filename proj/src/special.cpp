#include "spassoc/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spassoc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;
constexpr int kMaxIter = 100000;

// log( x^a e^-x / Gamma(a) ), the common prefactor of both gamma branches.
double log_gamma_prefactor(double a, double x) {
    return a * std::log(x) - x - std::lgamma(a);
}

// Lower series: P(a, x) = x^a e^-x / Gamma(a) * sum_k x^k / (a)_{k+1}.
double lower_gamma_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double denom = a;
    for (int i = 0; i < kMaxIter; ++i) {
        denom += 1.0;
        term *= x / denom;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) {
            return sum * std::exp(log_gamma_prefactor(a, x));
        }
    }
    throw std::domain_error("upper_reg_gamma: series failed to converge");
}

// Modified Lentz continued fraction for Q(a, x), valid for x > a + 1.
double upper_gamma_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) {
            return h * std::exp(log_gamma_prefactor(a, x));
        }
    }
    throw std::domain_error("upper_reg_gamma: continued fraction failed to converge");
}

// Lentz continued fraction for the incomplete beta; caller guarantees
// x < (a + 1) / (a + b + 2) so the fraction converges quickly.
double inc_beta_cf(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double dm = static_cast<double>(m);
        const double m2 = 2.0 * dm;
        double aa = dm * (b - dm) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + dm) * (qab + dm) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) return h;
    }
    throw std::domain_error("reg_inc_beta: continued fraction failed to converge");
}

}  // namespace

double upper_reg_gamma(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("upper_reg_gamma: a must be positive");
    if (!(x >= 0.0)) throw std::invalid_argument("upper_reg_gamma: x must be non-negative");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) {
        const double p = lower_gamma_series(a, x);
        return p >= 1.0 ? 0.0 : 1.0 - p;
    }
    return upper_gamma_cf(a, x);
}

double reg_inc_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("reg_inc_beta: shape parameters must be positive");
    }
    if (!(x >= 0.0) || !(x <= 1.0)) {
        throw std::invalid_argument("reg_inc_beta: x must lie in [0, 1]");
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * inc_beta_cf(a, b, x) / a;
    }
    const double tail = front * inc_beta_cf(b, a, 1.0 - x) / b;
    return tail >= 1.0 ? 0.0 : 1.0 - tail;
}

}  // namespace spassoc
