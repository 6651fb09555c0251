#include "trigroup/interval.hpp"

#include "trigroup/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

namespace trigroup {

namespace {

double step_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double step_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

} // namespace

Interval::Interval(double l, double h) : lo(l), hi(h) {
    if (!(lo <= hi)) throw DomainError("Interval: lo > hi");
}

Interval operator+(const Interval& x, const Interval& y) {
    return Interval(step_down(x.lo + y.lo), step_up(x.hi + y.hi));
}

Interval operator-(const Interval& x, const Interval& y) {
    return Interval(step_down(x.lo - y.hi), step_up(x.hi - y.lo));
}

Interval operator-(const Interval& x) { return Interval(-x.hi, -x.lo); }

Interval operator*(const Interval& x, const Interval& y) {
    const double p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
    return Interval(step_down(std::min({p1, p2, p3, p4})), step_up(std::max({p1, p2, p3, p4})));
}

Interval operator/(const Interval& x, const Interval& y) {
    if (y.lo <= 0.0 && 0.0 <= y.hi) throw DomainError("interval division by interval containing zero");
    const double q1 = x.lo / y.lo, q2 = x.lo / y.hi, q3 = x.hi / y.lo, q4 = x.hi / y.hi;
    return Interval(step_down(std::min({q1, q2, q3, q4})), step_up(std::max({q1, q2, q3, q4})));
}

namespace {

// Lower/upper bound of a^n for a >= 0, one outward step per multiplication.
double pow_pos_down(double a, unsigned n) {
    double r = a;
    for (unsigned i = 1; i < n; ++i) r = step_down(r * a);
    return std::max(r, 0.0);
}

double pow_pos_up(double a, unsigned n) {
    double r = a;
    for (unsigned i = 1; i < n; ++i) r = step_up(r * a);
    return r;
}

} // namespace

Interval interval_pow(const Interval& x, unsigned n) {
    if (n == 0) return Interval(1.0);
    if (n == 1) return x;
    if (n % 2 == 0) {
        // fold to magnitudes; even power is monotone on [0, inf)
        double mig = (x.lo > 0.0) ? x.lo : (x.hi < 0.0 ? -x.hi : 0.0);
        double mag = std::max(std::abs(x.lo), std::abs(x.hi));
        return Interval(pow_pos_down(mig, n), pow_pos_up(mag, n));
    }
    // odd power is monotone on all of R
    auto signed_down = [&](double a) {
        return a >= 0.0 ? pow_pos_down(a, n) : -pow_pos_up(-a, n);
    };
    auto signed_up = [&](double a) {
        return a >= 0.0 ? pow_pos_up(a, n) : -pow_pos_down(-a, n);
    };
    return Interval(signed_down(x.lo), signed_up(x.hi));
}

Interval interval_sqrt(const Interval& x) {
    if (x.lo < 0.0) throw NegativeSqrt("interval_sqrt: lower endpoint negative");
    return Interval(std::max(0.0, step_down(std::sqrt(x.lo))), step_up(std::sqrt(x.hi)));
}

Interval interval_min(const Interval& x, const Interval& y) {
    return Interval(std::min(x.lo, y.lo), std::min(x.hi, y.hi));
}

Interval interval_max(const Interval& x, const Interval& y) {
    return Interval(std::max(x.lo, y.lo), std::max(x.hi, y.hi));
}

Interval interval_abs(const Interval& x) {
    if (x.lo >= 0.0) return x;
    if (x.hi <= 0.0) return Interval(-x.hi, -x.lo);
    return Interval(0.0, std::max(-x.lo, x.hi));
}

Interval interval_hull(const Interval& x, const Interval& y) {
    return Interval(std::min(x.lo, y.lo), std::max(x.hi, y.hi));
}

Interval interval_pi() {
    // 3.14159265358979311600 < pi < 3.14159265358979355847, adjacent doubles
    const double lo = 3.141592653589793115997963468544185161590576171875;
    return Interval(lo, step_up(lo));
}

Interval interval_from_rational(const Rational& q) {
    double d = rational_to_double_approx(q);
    if (!std::isfinite(d)) throw DomainError("interval_from_rational: out of double range");
    double lo = d, hi = d;
    // walk endpoints until exact containment is verified
    while (rational_from_double(lo) > q) lo = step_down(lo);
    while (rational_from_double(hi) < q) hi = step_up(hi);
    return Interval(lo, hi);
}

Interval interval_from_rational_bounds(const Rational& lo_q, const Rational& hi_q) {
    Interval a = interval_from_rational(lo_q);
    Interval b = interval_from_rational(hi_q);
    return Interval(a.lo, b.hi);
}

bool interval_contains_rational(const Interval& iv, const Rational& q) {
    return rational_from_double(iv.lo) <= q && q <= rational_from_double(iv.hi);
}

namespace {

// cos evaluated at an exact rational a in [0, 1] via the Taylor series,
// returning exact rational bracketing bounds. The remainder of the
// alternating series is bounded by the first omitted term.
void cos_rational_bounds(const Rational& a, Rational& lo, Rational& hi) {
    const Rational a2 = a * a;
    Rational term(1);
    Rational sum(1);
    const int K = 13;
    for (int k = 1; k <= K; ++k) {
        term *= a2;
        term /= (2 * k - 1) * (2 * k);
        if (k % 2 == 1)
            sum -= term;
        else
            sum += term;
    }
    Rational rem = term * a2 / ((2 * K + 1) * (2 * K + 2));
    lo = sum - rem;
    hi = sum + rem;
}

} // namespace

Interval cos_pi_over(int n, double width) {
    if (n != angle_infinity && n < 3) throw UnsupportedAngle("cos_pi_over: need n >= 3 or infinity");
    if (width < 1e-15) throw DomainError("cos_pi_over: width below 1e-15 is not supported");
    if (n == angle_infinity) return Interval(1.0);
    if (n == 3) return Interval(0.5);

    static std::mutex mtx;
    static std::map<int, Interval> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end() && it->second.width() <= width) return it->second;
    }

    const Interval pi = interval_pi();
    const Rational theta_lo = rational_from_double(pi.lo) / n;
    const Rational theta_hi = rational_from_double(pi.hi) / n;
    // cos is decreasing on [0, pi]
    Rational lo_lo, lo_hi, hi_lo, hi_hi;
    cos_rational_bounds(theta_hi, lo_lo, lo_hi);
    cos_rational_bounds(theta_lo, hi_lo, hi_hi);
    Interval enc = interval_from_rational_bounds(lo_lo, hi_hi);
    if (enc.width() > width)
        throw DomainError("cos_pi_over: requested width not reached");

    std::lock_guard<std::mutex> lock(mtx);
    cache[n] = enc;
    return enc;
}

Interval interval_sqrt_int(long long k) {
    if (k < 0) throw NegativeSqrt("interval_sqrt_int: negative argument");
    return interval_sqrt(Interval(static_cast<double>(k)));
}

std::string interval_to_string(const Interval& iv) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "[%.17g, %.17g]", iv.lo, iv.hi);
    return buf;
}

} // namespace trigroup
