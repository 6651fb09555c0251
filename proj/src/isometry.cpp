#include "trigroup/isometry.hpp"

#include "trigroup/errors.hpp"
#include "trigroup/hermitian.hpp"
#include "trigroup/triangle.hpp"

#include <cmath>

namespace trigroup {

double IsometryMatrix::gram_defect(const HermitianMatrix& G) const {
    return max_abs_diff(adjoint(m) * G.matrix() * m, G.matrix());
}

double IsometryMatrix::det_defect() const { return std::abs(det(m) - cplx(1.0)); }

IsometryMatrix word(std::span<const int> letters, const IsometryMatrix& I1,
                    const IsometryMatrix& I2, const IsometryMatrix& I3) {
    if (letters.empty()) throw BadIndex("word: empty letter sequence");
    const Mat3c* gens[3] = {&I1.m, &I2.m, &I3.m};
    Mat3c acc = Mat3c::identity();
    for (int l : letters) {
        if (l < 1 || l > 3) throw BadIndex("word: letter index must be 1, 2 or 3");
        acc = acc * (*gens[l - 1]);
    }
    return IsometryMatrix{acc};
}

double goldman_f(cplx z) {
    const double n2 = std::norm(z);  // |z|^2
    const cplx z3 = z * z * z;
    return n2 * n2 - 8.0 * z3.real() + 18.0 * n2 - 27.0;
}

TraceClassification classify_trace(cplx z, double tol) {
    if (!(tol > 0.0)) throw DomainError("classify_trace: tol must be positive");
    const double f = goldman_f(z);
    TraceKind k;
    if (f < -tol)
        k = TraceKind::RegularElliptic;
    else if (f > tol)
        k = TraceKind::Loxodromic;
    else
        k = TraceKind::Boundary;
    return {k, f, z};
}

cplx trace_WB(double r1, double r2, double r3, double t) {
    if (!admissible(r1, r2, r3, t)) throw Inadmissible("trace_WB: parameters violate the triangle inequality");
    const cplx eps = epsilon_of_t(t);
    return 8.0 * r1 * r2 * r3 * eps - 4.0 * (r1 * r1 + r2 * r2 + r3 * r3) + 3.0;
}

CircleF circle_of(double r1, double r2, double r3) {
    for (double r : {r1, r2, r3})
        if (!(r > 0.0) || r > 1.0) throw DomainError("circle_of: r_i must lie in (0,1]");
    return {3.0 - 4.0 * (r1 * r1 + r2 * r2 + r3 * r3), 8.0 * r1 * r2 * r3};
}

double t_of_x(double x, double r1, double r2, double r3) {
    const double t = (x + 4.0 * (r1 * r1 + r2 * r2 + r3 * r3) - 3.0) / (8.0 * r1 * r2 * r3);
    if (std::abs(t) > 1.0 + 1e-9) throw OutOfRange("t_of_x: resulting t outside [-1,1]");
    return std::clamp(t, -1.0, 1.0);
}

double x_of_t(double t, double r1, double r2, double r3) {
    if (std::abs(t) > 1.0 + 1e-9) throw OutOfRange("x_of_t: t outside [-1,1]");
    return 8.0 * r1 * r2 * r3 * t - 4.0 * (r1 * r1 + r2 * r2 + r3 * r3) + 3.0;
}

std::vector<cplx> deltoid_boundary(int samples) {
    if (samples < 3) throw DomainError("deltoid_boundary: need at least 3 samples");
    std::vector<cplx> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double th = 2.0 * M_PI * k / samples;
        pts.push_back(2.0 * std::polar(1.0, th) + std::polar(1.0, -2.0 * th));
    }
    return pts;
}

Mat3c normalize_to_su(const Mat3c& m) {
    const cplx d = det(m);
    if (std::abs(d) < 1e-14) throw DomainError("normalize_to_su: singular matrix");
    // principal cube root; the omega ambiguity multiplies the trace by a
    // cube root of unity, which leaves goldman_f unchanged
    const cplx scale = std::pow(d, -1.0 / 3.0);
    return scale * m;
}

} // namespace trigroup
