#pragma once

// Finite-sum special functions: Pochhammer symbols, terminating 2F1/1F1
// polynomials, log-gamma, and numerically careful hyperbolic logarithms.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "h1/errors.hpp"

namespace h1::special {

/// Rising factorial (a)_m = a (a+1) ... (a+m-1); (a)_0 = 1.
inline double pochhammer(double a, unsigned m) noexcept {
    double p = 1.0;
    for (unsigned j = 0; j < m; ++j)
        p *= a + j;
    return p;
}

namespace detail {

inline void require_nonvanishing_denominator(double c, unsigned n, const char* who) {
    for (unsigned j = 0; j < n; ++j)
        if (c + j == 0.0)
            throw DomainError(std::string(who) + ": lower parameter c = " + std::to_string(c) +
                              " makes (c)_j vanish inside the truncated sum");
}

} // namespace detail

/// Coefficients of a polynomial, `coefficients[j]` multiplying x^j.
struct PolyCoefficients {
    unsigned degree = 0;
    std::vector<double> coefficients{1.0};

    double operator()(double x) const noexcept {
        double acc = 0.0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }
};

/// Coefficients of 2F1(-n, b; c; x) as a degree-n polynomial in x.
inline PolyCoefficients hyp2f1_coefficients(unsigned n, double b, double c) {
    detail::require_nonvanishing_denominator(c, n, "hyp2f1_coefficients");
    PolyCoefficients p{n, std::vector<double>(n + 1)};
    p.coefficients[0] = 1.0;
    for (unsigned j = 0; j < n; ++j) {
        const double dj = j;
        p.coefficients[j + 1] =
            p.coefficients[j] * (-static_cast<double>(n) + dj) * (b + dj) / ((c + dj) * (dj + 1.0));
    }
    return p;
}

/**
 * @brief 2F1(-n, b; c; x), summed with term-ratio updates.
 *
 * For x > 1/2 the polynomial is re-expanded about x = 1,
 *   sum_j [(-n)_j (b)_j / ((c)_j j!)] (x-1)^j * (c-b)_{n-j} / (c+j)_{n-j},
 * which avoids the cancellation of the alternating power series there.
 */
inline double hyp2f1_terminating(unsigned n, double b, double c, double x) {
    detail::require_nonvanishing_denominator(c, n, "hyp2f1_terminating");
    if (x > 0.5 && n > 0) {
        // q[j] = (c-b)_{n-j} / (c+j)_{n-j}, built downward from q[n] = 1.
        std::vector<double> q(n + 1, 1.0);
        for (unsigned j = n; j-- > 0;)
            q[j] = q[j + 1] * (c - b + (n - j - 1)) / (c + j);
        double term = 1.0;
        double sum = q[0];
        for (unsigned j = 0; j < n; ++j) {
            const double dj = j;
            term *= (-static_cast<double>(n) + dj) * (b + dj) / ((c + dj) * (dj + 1.0)) * (x - 1.0);
            sum += term * q[j + 1];
        }
        return sum;
    }
    double term = 1.0;
    double sum = 1.0;
    for (unsigned j = 0; j < n; ++j) {
        const double dj = j;
        term *= (-static_cast<double>(n) + dj) * (b + dj) / ((c + dj) * (dj + 1.0)) * x;
        sum += term;
    }
    return sum;
}

/// 1F1(-n; c; x), summed with term-ratio updates.
inline double hyp1f1_terminating(unsigned n, double c, double x) {
    detail::require_nonvanishing_denominator(c, n, "hyp1f1_terminating");
    double term = 1.0;
    double sum = 1.0;
    for (unsigned j = 0; j < n; ++j) {
        const double dj = j;
        term *= (-static_cast<double>(n) + dj) / ((c + dj) * (dj + 1.0)) * x;
        sum += term;
    }
    return sum;
}

/**
 * @brief Natural logarithm of Gamma(x) for x > 0.
 *
 * Lanczos approximation (g = 7, nine coefficients); arguments below 1/2 are
 * shifted up with Gamma(x) = Gamma(x+1)/x.
 */
inline double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("log_gamma: argument must be positive and finite, got " + std::to_string(x));
    static constexpr std::array<double, 9> coef = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double g = 7.0;
    if (x < 0.5)
        return log_gamma(x + 1.0) - std::log(x);
    const double z = x - 1.0;
    double a = coef[0];
    for (std::size_t i = 1; i < coef.size(); ++i)
        a += coef[i] / (z + static_cast<double>(i));
    const double t = z + g + 0.5;
    constexpr double half_log_two_pi = 0.91893853320467274178;
    return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(a);
}

/// ln cosh(t), accurate for tiny and for large |t|.
inline double log_cosh(double t) noexcept {
    const double a = std::fabs(t);
    if (a < 1.0) {
        const double s = std::sinh(0.5 * a);
        return std::log1p(2.0 * s * s);
    }
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

/// ln sinh(t) for t > 0.
inline double log_sinh(double t) noexcept {
    if (t < 1.0)
        return std::log(std::sinh(t));
    return t + std::log1p(-std::exp(-2.0 * t)) - std::numbers::ln2;
}

// Integer-rational arithmetic for test oracles.
namespace exact {

/// Reduced fraction with 64-bit parts; any overflow throws std::overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) {
        if (den == 0)
            throw DomainError("Rational: zero denominator");
        assign(num, den);
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_zero() const noexcept { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw DomainError("Rational: division by zero");
        return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    static __int128 gcd128(__int128 a, __int128 b) noexcept {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
        if (num > lim || num < -lim || den > lim)
            throw std::overflow_error("Rational: 64-bit overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) { *this = make(num, den); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational pochhammer(const Rational& a, unsigned m) {
    Rational p(1);
    for (unsigned j = 0; j < m; ++j)
        p = p * (a + Rational(j));
    return p;
}

inline Rational factorial(unsigned m) {
    Rational p(1);
    for (unsigned j = 2; j <= m; ++j)
        p = p * Rational(j);
    return p;
}

inline Rational power(const Rational& x, unsigned m) {
    Rational p(1);
    for (unsigned j = 0; j < m; ++j)
        p = p * x;
    return p;
}

/// 2F1(-n, b; c; x) as the literal Pochhammer-product sum.
inline Rational hyp2f1_terminating(unsigned n, const Rational& b, const Rational& c, const Rational& x) {
    const Rational minus_n(-static_cast<std::int64_t>(n));
    Rational sum(0);
    for (unsigned j = 0; j <= n; ++j) {
        const Rational den = pochhammer(c, j) * factorial(j);
        if (den.is_zero())
            throw DomainError("exact::hyp2f1_terminating: vanishing denominator");
        sum = sum + pochhammer(minus_n, j) * pochhammer(b, j) / den * power(x, j);
    }
    return sum;
}

/// 1F1(-n; c; x) as the literal Pochhammer-product sum.
inline Rational hyp1f1_terminating(unsigned n, const Rational& c, const Rational& x) {
    const Rational minus_n(-static_cast<std::int64_t>(n));
    Rational sum(0);
    for (unsigned j = 0; j <= n; ++j) {
        const Rational den = pochhammer(c, j) * factorial(j);
        if (den.is_zero())
            throw DomainError("exact::hyp1f1_terminating: vanishing denominator");
        sum = sum + pochhammer(minus_n, j) / den * power(x, j);
    }
    return sum;
}

} // namespace exact
} // namespace h1::special
