#ifndef TRIGROUP_INTERVAL_HPP
#define TRIGROUP_INTERVAL_HPP

#include "trigroup/rational.hpp"

#include <limits>
#include <string>

namespace trigroup {

// Closed interval with double endpoints. Every arithmetic operation rounds
// outward, so the exact real result of the member-wise operation is always
// contained in the returned interval. Outward rounding is done by computing
// in round-to-nearest and then stepping each endpoint one representable
// value outward; for correctly rounded IEEE operations (+, -, *, /, sqrt)
// the exact result lies strictly between the neighbours of the computed
// value, so this is sound without touching the FPU rounding mode.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double point) : lo(point), hi(point) {}
    Interval(double l, double h);

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

    bool is_positive() const { return lo > 0.0; }
    bool is_negative() const { return hi < 0.0; }
    bool is_nonneg() const { return lo >= 0.0; }
    bool is_nonpos() const { return hi <= 0.0; }
};

// Sentinel for n = infinity in cos(pi/n) style arguments.
inline constexpr int angle_infinity = std::numeric_limits<int>::max();

Interval operator+(const Interval& x, const Interval& y);
Interval operator-(const Interval& x, const Interval& y);
Interval operator-(const Interval& x);
Interval operator*(const Interval& x, const Interval& y);
Interval operator/(const Interval& x, const Interval& y);  // throws DomainError if 0 in y

Interval interval_pow(const Interval& x, unsigned n);
Interval interval_sqrt(const Interval& x);                 // throws NegativeSqrt
Interval interval_min(const Interval& x, const Interval& y);
Interval interval_max(const Interval& x, const Interval& y);
Interval interval_abs(const Interval& x);
Interval interval_hull(const Interval& x, const Interval& y);

// Enclosure of pi between two adjacent doubles.
Interval interval_pi();

// Tight enclosure of an exact rational.
Interval interval_from_rational(const Rational& q);
Interval interval_from_rational_bounds(const Rational& lo, const Rational& hi);

// Exact containment test against the dyadic endpoints.
bool interval_contains_rational(const Interval& iv, const Rational& q);

// Rigorous enclosure of cos(pi/n) of width <= width (default 1e-15).
// Exact for n = 3 ([1/2,1/2]) and n = angle_infinity ([1,1]); computed via
// the Taylor series of cos evaluated in exact rational arithmetic with an
// alternating-series remainder bound otherwise. Results are cached per n.
Interval cos_pi_over(int n, double width = 1e-15);

// Rigorous enclosure of sqrt(k) for a nonnegative integer k.
Interval interval_sqrt_int(long long k);

std::string interval_to_string(const Interval& iv);

} // namespace trigroup

#endif
