#ifndef TRIGROUP_POLY_HPP
#define TRIGROUP_POLY_HPP

#include "trigroup/interval.hpp"
#include "trigroup/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace trigroup {

// Multivariate polynomial in up to three variables (slots 0, 1, 2;
// conventionally printed as x, y, z) with exact rational coefficients.
// Terms are kept in canonical form: sorted by exponent triple, no zero
// coefficients. Each term carries a precomputed interval enclosure of its
// coefficient so that interval evaluation needs no rational conversions.
class Poly {
public:
    struct Term {
        std::array<int, 3> e{};
        Rational c;
        Interval c_iv;
    };

    Poly() = default;

    static Poly constant(const Rational& c);
    static Poly constant(long long c);
    static Poly variable(int slot);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool uses_var(int slot) const;
    int degree() const;
    int degree_in(int slot) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

    // Exact partial derivative with respect to a slot; throws
    // VariableMismatch if the polynomial does not use that slot and the
    // caller asked for strict checking.
    Poly partial(int slot, bool strict = false) const;

    Poly pow(unsigned n) const;

    // x_from := x_to  (merges two variables; exact)
    Poly substitute_var(int from, int to) const;
    // x_slot := value (exact pin)
    Poly substitute_point(int slot, const Rational& value) const;

    // Sound interval enclosure of the range over the box, evaluated in a
    // recursive Horner scheme (slot 0 outermost).
    Interval eval_interval(const std::array<Interval, 3>& box) const;

    // Exact value at a rational point.
    Rational eval_exact(const std::array<Rational, 3>& point) const;

    std::string to_string(const std::array<std::string, 3>& names = {"x", "y", "z"}) const;

private:
    std::vector<Term> terms_;

    void normalize();
    friend Poly poly_from_terms(std::vector<Term> raw);
};

Poly operator*(const Rational& s, const Poly& p);
Poly operator*(long long s, const Poly& p);
Poly operator+(const Poly& p, long long c);
Poly operator+(long long c, const Poly& p);
Poly operator-(const Poly& p, long long c);
Poly operator-(long long c, const Poly& p);

} // namespace trigroup

#endif
