#ifndef TRIGROUP_TRIANGLE_HPP
#define TRIGROUP_TRIANGLE_HPP

#include "trigroup/complex3.hpp"
#include "trigroup/hermitian.hpp"

#include <array>
#include <limits>
#include <string>

namespace trigroup {

// n = n_infinity encodes an ideal vertex (asymptotic sides, angle 0).
inline constexpr int n_infinity = std::numeric_limits<int>::max();

// Sorted angle triple n1 <= n2 <= n3 with every entry >= 3 or infinity.
// Right angles (n = 2) are rejected at construction.
class TriangleAngles {
public:
    TriangleAngles(int a, int b, int c);

    int n1() const { return n_[0]; }
    int n2() const { return n_[1]; }
    int n3() const { return n_[2]; }

    bool operator==(const TriangleAngles& o) const { return n_ == o.n_; }
    std::string to_string() const;

private:
    std::array<int, 3> n_;
};

// The invariants (r1, r2, r3, t) of a nondegenerate triangle: r_i in (0,1],
// |t| <= 1, and 1 + 2 r1 r2 r3 t - (r1^2+r2^2+r3^2) <= 0.
struct TriangleParams {
    double r1, r2, r3, t;
};

struct Thresholds {
    double t_M;    // (r1^2+r2^2+r3^2-1)/(2 r1 r2 r3)
    double t_max;  // min(t_M, 1)
    double t_WA;   // (r3^2 + 4 r1^2 r2^2 - 1)/(4 r1 r2 r3)
};

// cos(pi/n); 1 for infinity. Throws UnsupportedAngle for n < 3.
double r_of_n(int n);

// The defining inequality of the parameter space (non-strict).
// Throws DomainError when (r, t) leaves the basic ranges.
bool admissible(double r1, double r2, double r3, double t);

// kappa = G01 G12 G20 / (G00 G11 G22); throws DegenerateGram when a
// diagonal entry is below 1e-12 in modulus.
cplx varkappa(const HermitianMatrix& G);

// The unit complex number with real part t on the upper half-circle.
cplx epsilon_of_t(double t);

Thresholds thresholds(double r1, double r2, double r3);

// The unit-diagonal Gram matrix with entries r1, r2 and r3*eps placed at
// (1,0), (2,1), (2,0). Throws Inadmissible outside the parameter region.
HermitianMatrix build_gram(double r1, double r2, double r3, double t);

// Whether the canonical deformation [-1, t_max] is a nondegenerate
// 1-parameter family. Only (3,3,3) is rigid.
bool family_nonempty(const TriangleAngles& n);

} // namespace trigroup

#endif
