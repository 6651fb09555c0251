#include "trigroup/complex3.hpp"

#include <algorithm>
#include <cmath>

namespace trigroup {

Mat3c Mat3c::identity() {
    Mat3c m;
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = 1.0;
    return m;
}

Mat3c Mat3c::diag(cplx d0, cplx d1, cplx d2) {
    Mat3c m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    return m;
}

Vec3c operator+(const Vec3c& x, const Vec3c& y) {
    Vec3c r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = x[i] + y[i];
    return r;
}

Vec3c operator-(const Vec3c& x, const Vec3c& y) {
    Vec3c r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = x[i] - y[i];
    return r;
}

Vec3c operator*(cplx s, const Vec3c& x) {
    Vec3c r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = s * x[i];
    return r;
}

Mat3c operator+(const Mat3c& x, const Mat3c& y) {
    Mat3c r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = x(i, j) + y(i, j);
    return r;
}

Mat3c operator-(const Mat3c& x, const Mat3c& y) {
    Mat3c r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = x(i, j) - y(i, j);
    return r;
}

Mat3c operator*(const Mat3c& x, const Mat3c& y) {
    Mat3c r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

Vec3c operator*(const Mat3c& m, const Vec3c& x) {
    Vec3c r;
    for (std::size_t i = 0; i < 3; ++i) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < 3; ++k) s += m(i, k) * x[k];
        r[i] = s;
    }
    return r;
}

Mat3c operator*(cplx s, const Mat3c& m) {
    Mat3c r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = s * m(i, j);
    return r;
}

Mat3c adjoint(const Mat3c& m) {
    Mat3c r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

cplx trace(const Mat3c& m) { return m(0, 0) + m(1, 1) + m(2, 2); }

cplx det(const Mat3c& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3c outer(const Vec3c& x, const Vec3c& y) {
    Mat3c r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = x[i] * y[j];
    return r;
}

double max_abs_diff(const Mat3c& x, const Mat3c& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m = std::max(m, std::abs(x(i, j) - y(i, j)));
    return m;
}

double norm_inf(const Vec3c& x) {
    return std::max({std::abs(x[0]), std::abs(x[1]), std::abs(x[2])});
}

} // namespace trigroup
