#include "trigroup/hermitian.hpp"

#include "trigroup/errors.hpp"
#include "trigroup/isometry.hpp"

#include <algorithm>
#include <cmath>

namespace trigroup {

HermitianMatrix::HermitianMatrix() { m_ = Mat3c::identity(); }

HermitianMatrix HermitianMatrix::from_upper(std::array<double, 3> diag, cplx g01, cplx g02,
                                            cplx g12) {
    HermitianMatrix h;
    Mat3c m;
    m(0, 0) = diag[0];
    m(1, 1) = diag[1];
    m(2, 2) = diag[2];
    m(0, 1) = g01;
    m(1, 0) = std::conj(g01);
    m(0, 2) = g02;
    m(2, 0) = std::conj(g02);
    m(1, 2) = g12;
    m(2, 1) = std::conj(g12);
    h.m_ = m;
    return h;
}

HermitianMatrix HermitianMatrix::from_matrix(const Mat3c& m, double tol) {
    double defect = max_abs_diff(m, adjoint(m));
    if (defect > tol) throw DomainError("HermitianMatrix::from_matrix: not hermitian within tolerance");
    return from_upper({m(0, 0).real(), m(1, 1).real(), m(2, 2).real()}, m(0, 1), m(0, 2), m(1, 2));
}

cplx inner(const Vec3c& u, const Vec3c& v, const HermitianMatrix& G) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s += std::conj(u[i]) * G(i, j) * v[j];
    return s;
}

double tance(const Vec3c& p, const Vec3c& q, const HermitianMatrix& G) {
    const cplx pp = inner(p, p, G);
    const cplx qq = inner(q, q, G);
    if (std::abs(pp) <= 1e-12 || std::abs(qq) <= 1e-12)
        throw IsotropicArgument("tance: isotropic argument");
    const cplx pq = inner(p, q, G);
    const cplx qp = inner(q, p, G);
    return (pq * qp / (pp * qq)).real();
}

PointClass classify_point(const Vec3c& p, const HermitianMatrix& G, double tol) {
    if (!(tol > 0.0)) throw DomainError("classify_point: tol must be positive");
    const double n = inner(p, p, G).real();
    PointKind k;
    if (n < -tol)
        k = PointKind::Negative;
    else if (n <= tol)
        k = PointKind::Isotropic;
    else
        k = PointKind::Positive;
    return {k, n};
}

GeodesicPosition geodesic_position(const Vec3c& p, const Vec3c& q, const HermitianMatrix& G,
                                   double tol) {
    if (classify_point(p, G, tol).kind != PointKind::Positive ||
        classify_point(q, G, tol).kind != PointKind::Positive)
        throw NotPolar("geodesic_position: arguments must be polar (positive) points");
    const double ta = tance(p, q, G);
    if (ta > 1.0 + tol) return {GeodesicKind::Ultraparallel, ta, 0.0};
    if (ta >= 1.0 - tol) return {GeodesicKind::Asymptotic, ta, 0.0};
    return {GeodesicKind::Concurrent, ta, std::acos(std::sqrt(std::max(0.0, ta)))};
}

IsometryMatrix reflection(const Vec3c& p, const HermitianMatrix& G) {
    if (classify_point(p, G).kind != PointKind::Positive)
        throw NotPolar("reflection: mirror point must be positive");
    const cplx pp = inner(p, p, G);
    // row j of the functional x -> inner(p, x): conj(p)^T G
    Vec3c row;
    for (std::size_t j = 0; j < 3; ++j) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < 3; ++i) s += std::conj(p[i]) * G(i, j);
        row[j] = s;
    }
    Mat3c m = outer(p, row);
    m = (2.0 / pp) * m - Mat3c::identity();
    return IsometryMatrix{m};
}

namespace {

// Real eigenvalues of a Hermitian 3x3 matrix via the trigonometric solution
// of the characteristic cubic. Coefficients of det(lambda I - G) are real.
std::array<double, 3> eig3_hermitian(const Mat3c& g) {
    const double tr = trace(g).real();
    // sum of principal 2x2 minors
    auto minor2 = [&](std::size_t i, std::size_t j) {
        return (g(i, i) * g(j, j) - g(i, j) * g(j, i)).real();
    };
    const double m2 = minor2(0, 1) + minor2(0, 2) + minor2(1, 2);
    const double d = det(g).real();

    // lambda^3 - tr lambda^2 + m2 lambda - d = 0; shift lambda = mu + tr/3
    const double p = m2 - tr * tr / 3.0;
    const double q = -2.0 * tr * tr * tr / 27.0 + tr * m2 / 3.0 - d;
    const double shift = tr / 3.0;

    std::array<double, 3> ev{};
    const double a = -p / 3.0;
    if (a <= 0.0) {
        // triple root up to rounding
        ev = {shift, shift, shift};
    } else {
        const double s = std::sqrt(a);
        double c = -q / (2.0 * s * s * s);
        c = std::clamp(c, -1.0, 1.0);
        const double phi = std::acos(c) / 3.0;
        for (int k = 0; k < 3; ++k)
            ev[static_cast<std::size_t>(k)] =
                shift + 2.0 * s * std::cos(phi - 2.0 * M_PI * k / 3.0);
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace

std::array<double, 3> hermitian_eigenvalues(const HermitianMatrix& G) {
    return eig3_hermitian(G.matrix());
}

Signature gram_signature(const HermitianMatrix& G, double tol) {
    if (!(tol > 0.0)) throw DomainError("gram_signature: tol must be positive");
    Signature s{0, 0, 0};
    for (double ev : hermitian_eigenvalues(G)) {
        if (ev > tol)
            ++s.n_plus;
        else if (ev < -tol)
            ++s.n_minus;
        else
            ++s.n_zero;
    }
    return s;
}

} // namespace trigroup
