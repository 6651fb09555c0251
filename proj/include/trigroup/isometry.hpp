#ifndef TRIGROUP_ISOMETRY_HPP
#define TRIGROUP_ISOMETRY_HPP

#include "trigroup/complex3.hpp"

#include <span>
#include <vector>

namespace trigroup {

class HermitianMatrix;

// Unit-determinant matrix preserving the ambient Hermitian form (within
// numerical tolerance). Reflections and their words live here.
struct IsometryMatrix {
    Mat3c m;

    // max |M* G M - G| entrywise
    double gram_defect(const HermitianMatrix& G) const;
    double det_defect() const;  // |det - 1|
};

enum class TraceKind { RegularElliptic, Loxodromic, Boundary };

struct TraceClassification {
    TraceKind kind;
    double f_value;
    cplx trace;
};

struct CircleF {
    double center_x;  // 3 - 4(r1^2+r2^2+r3^2)
    double radius;    // 8 r1 r2 r3
};

// Product of reflections in the written order: word({1,2,3},...) = I1*I2*I3
// applied as a matrix product I1 I2 I3. Indices must be in {1,2,3}.
IsometryMatrix word(std::span<const int> letters, const IsometryMatrix& I1,
                    const IsometryMatrix& I2, const IsometryMatrix& I3);

// Discriminant separating regular elliptic from loxodromic conjugacy
// classes: f(z) = |z|^4 - 8 Re(z^3) + 18 |z|^2 - 27.
double goldman_f(cplx z);

TraceClassification classify_trace(cplx z, double tol = 1e-9);

// Closed form for the trace of the lifted product of the three reflections:
// tau = 8 r1 r2 r3 eps - 4(r1^2+r2^2+r3^2) + 3 with eps on the upper unit
// half-circle. Throws Inadmissible outside the parameter region.
cplx trace_WB(double r1, double r2, double r3, double t);

// The circle traced by tau as eps runs over the unit circle.
CircleF circle_of(double r1, double r2, double r3);

// Affine change of coordinates between the deformation parameter t and the
// real part x of tau: t = (x + 4(r1^2+r2^2+r3^2) - 3) / (8 r1 r2 r3).
// Throws OutOfRange when the resulting t leaves [-1,1] by more than 1e-9;
// values within that slack are clamped.
double t_of_x(double x, double r1, double r2, double r3);
double x_of_t(double t, double r1, double r2, double r3);

// Boundary parametrization 2 e^{i theta} + e^{-2 i theta} of f^{-1}(0),
// sampled at `samples` uniform angles in [0, 2 pi).
std::vector<cplx> deltoid_boundary(int samples);

// Rescales an arbitrary invertible matrix by the principal cube root of
// 1/det to unit determinant. The choice among the three cube roots shifts
// the trace by a cube root of unity, which goldman_f cannot see.
Mat3c normalize_to_su(const Mat3c& m);

} // namespace trigroup

#endif
