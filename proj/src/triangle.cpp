#include "trigroup/triangle.hpp"

#include "trigroup/errors.hpp"

#include <algorithm>
#include <cmath>

namespace trigroup {

TriangleAngles::TriangleAngles(int a, int b, int c) : n_{a, b, c} {
    std::sort(n_.begin(), n_.end());
    for (int n : n_)
        if (n != n_infinity && n < 3)
            throw UnsupportedAngle("TriangleAngles: every n_i must be >= 3 or infinity");
}

std::string TriangleAngles::to_string() const {
    auto one = [](int n) { return n == n_infinity ? std::string("inf") : std::to_string(n); };
    return "(" + one(n_[0]) + "," + one(n_[1]) + "," + one(n_[2]) + ")";
}

double r_of_n(int n) {
    if (n == n_infinity) return 1.0;
    if (n < 3) throw UnsupportedAngle("r_of_n: need n >= 3 or infinity");
    return std::cos(M_PI / n);
}

bool admissible(double r1, double r2, double r3, double t) {
    for (double r : {r1, r2, r3})
        if (!(r > 0.0) || r > 1.0) throw DomainError("admissible: r_i must lie in (0,1]");
    if (std::abs(t) > 1.0) throw DomainError("admissible: |t| must be <= 1");
    return 1.0 + 2.0 * r1 * r2 * r3 * t - (r1 * r1 + r2 * r2 + r3 * r3) <= 0.0;
}

cplx varkappa(const HermitianMatrix& G) {
    const cplx d0 = G(0, 0), d1 = G(1, 1), d2 = G(2, 2);
    if (std::abs(d0) < 1e-12 || std::abs(d1) < 1e-12 || std::abs(d2) < 1e-12)
        throw DegenerateGram("varkappa: vanishing diagonal entry");
    return G(0, 1) * G(1, 2) * G(2, 0) / (d0 * d1 * d2);
}

cplx epsilon_of_t(double t) {
    if (std::abs(t) > 1.0) throw DomainError("epsilon_of_t: |t| must be <= 1");
    return {t, std::sqrt(std::max(0.0, 1.0 - t * t))};
}

Thresholds thresholds(double r1, double r2, double r3) {
    for (double r : {r1, r2, r3})
        if (!(r > 0.0) || r > 1.0) throw DomainError("thresholds: r_i must lie in (0,1]");
    const double p = r1 * r2 * r3;
    Thresholds th;
    th.t_M = (r1 * r1 + r2 * r2 + r3 * r3 - 1.0) / (2.0 * p);
    th.t_max = std::min(th.t_M, 1.0);
    th.t_WA = (r3 * r3 + 4.0 * r1 * r1 * r2 * r2 - 1.0) / (4.0 * p);
    return th;
}

HermitianMatrix build_gram(double r1, double r2, double r3, double t) {
    if (!admissible(r1, r2, r3, t)) throw Inadmissible("build_gram: parameters violate the triangle inequality");
    const cplx eps = epsilon_of_t(t);
    // unit diagonal; entries r1 at (1,0), r2 at (2,1), r3*eps at (2,0)
    return HermitianMatrix::from_upper({1.0, 1.0, 1.0}, r1, r3 * std::conj(eps), r2);
}

bool family_nonempty(const TriangleAngles& n) {
    const double r1 = r_of_n(n.n1()), r2 = r_of_n(n.n2()), r3 = r_of_n(n.n3());
    const Thresholds th = thresholds(r1, r2, r3);
    // the path [-1, t_max] is a family iff it has positive length
    return th.t_max > -1.0 + 1e-12;
}

} // namespace trigroup
