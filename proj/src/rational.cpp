#include "trigroup/rational.hpp"

#include "trigroup/errors.hpp"

#include <cmath>
#include <sstream>

namespace trigroup {

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("rational_from_double: non-finite input");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    // mant in [0.5, 1), x = mant * 2^exp, mant * 2^53 integral
    double mant = std::frexp(x, &exp);
    double scaled = std::ldexp(mant, 53);
    BigInt num(static_cast<long long>(scaled));
    int e2 = exp - 53;
    if (e2 >= 0) {
        num <<= e2;
        return Rational(num);
    }
    BigInt den(1);
    den <<= -e2;
    return Rational(num, den);
}

double rational_to_double_approx(const Rational& q) {
    return q.convert_to<double>();
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

} // namespace trigroup
