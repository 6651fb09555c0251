#ifndef TRIGROUP_HERMITIAN_HPP
#define TRIGROUP_HERMITIAN_HPP

#include "trigroup/complex3.hpp"

#include <array>

namespace trigroup {

// Hermitian 3x3 matrix, stored with exact conjugate symmetry: only the
// upper triangle and the real diagonal are free, the lower triangle is
// mirrored on construction. This keeps products of reflections from
// drifting away from hermiticity.
class HermitianMatrix {
public:
    HermitianMatrix();

    // diag real; upper entries are (0,1), (0,2), (1,2)
    static HermitianMatrix from_upper(std::array<double, 3> diag, cplx g01, cplx g02, cplx g12);

    // validates near-hermiticity of an arbitrary matrix and symmetrizes it
    static HermitianMatrix from_matrix(const Mat3c& m, double tol = 1e-12);

    const Mat3c& matrix() const { return m_; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

private:
    Mat3c m_;
};

enum class PointKind { Negative, Isotropic, Positive };

struct PointClass {
    PointKind kind;
    double norm;  // <p,p>, real up to rounding
};

enum class GeodesicKind { Concurrent, Asymptotic, Ultraparallel };

struct GeodesicPosition {
    GeodesicKind kind;
    double tance;
    double angle;  // radians in [0, pi/2]; meaningful only when Concurrent
};

struct Signature {
    int n_plus;
    int n_minus;
    int n_zero;
};

struct IsometryMatrix;  // defined in isometry.hpp

// Hermitian form in Gram coordinates, antilinear in the first slot:
// inner(u, v) = u^* G v.
cplx inner(const Vec3c& u, const Vec3c& v, const HermitianMatrix& G);

// <p,q><q,p> / (<p,p><q,q>); throws IsotropicArgument when a denominator
// vanishes (|.| <= 1e-12).
double tance(const Vec3c& p, const Vec3c& q, const HermitianMatrix& G);

PointClass classify_point(const Vec3c& p, const HermitianMatrix& G, double tol = 1e-10);

// Relative position of two complex geodesics given by their polar points;
// throws NotPolar unless both points are Positive.
GeodesicPosition geodesic_position(const Vec3c& p, const Vec3c& q, const HermitianMatrix& G,
                                   double tol = 1e-10);

// Complex reflection in the geodesic polar to p:  x -> 2 inner(p,x)/inner(p,p) p - x.
// The result has determinant 1 and preserves G. Throws NotPolar.
IsometryMatrix reflection(const Vec3c& p, const HermitianMatrix& G);

// Inertia (n_plus, n_minus, n_zero) via the real eigenvalues of the
// Hermitian matrix, thresholded at tol.
Signature gram_signature(const HermitianMatrix& G, double tol = 1e-10);

// The three real eigenvalues, ascending.
std::array<double, 3> hermitian_eigenvalues(const HermitianMatrix& G);

} // namespace trigroup

#endif
