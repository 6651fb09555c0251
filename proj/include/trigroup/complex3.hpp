#ifndef TRIGROUP_COMPLEX3_HPP
#define TRIGROUP_COMPLEX3_HPP

#include <array>
#include <complex>
#include <cstddef>

namespace trigroup {

using cplx = std::complex<double>;

// Dense 3-vector and 3x3 matrix over complex doubles. Fixed size keeps
// everything on the stack; all operations are straight loops.

struct Vec3c {
    std::array<cplx, 3> v{};

    cplx& operator[](std::size_t i) { return v[i]; }
    const cplx& operator[](std::size_t i) const { return v[i]; }
};

struct Mat3c {
    // a[row][col]
    std::array<std::array<cplx, 3>, 3> a{};

    cplx& operator()(std::size_t r, std::size_t c) { return a[r][c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a[r][c]; }

    static Mat3c identity();
    static Mat3c diag(cplx d0, cplx d1, cplx d2);
};

Vec3c operator+(const Vec3c& x, const Vec3c& y);
Vec3c operator-(const Vec3c& x, const Vec3c& y);
Vec3c operator*(cplx s, const Vec3c& x);

Mat3c operator+(const Mat3c& x, const Mat3c& y);
Mat3c operator-(const Mat3c& x, const Mat3c& y);
Mat3c operator*(const Mat3c& x, const Mat3c& y);
Vec3c operator*(const Mat3c& m, const Vec3c& x);
Mat3c operator*(cplx s, const Mat3c& m);

Mat3c adjoint(const Mat3c& m);        // conjugate transpose
cplx trace(const Mat3c& m);
cplx det(const Mat3c& m);
Mat3c outer(const Vec3c& x, const Vec3c& y);  // x * y^T (no conjugation)

double max_abs_diff(const Mat3c& x, const Mat3c& y);
double norm_inf(const Vec3c& x);

} // namespace trigroup

#endif
