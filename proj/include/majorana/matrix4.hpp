#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace majorana {

// Dense 4x4 matrix, row-major. Instantiated with int for exact gamma-matrix
// identities and with double everywhere else.
template <typename T>
struct Matrix4 {
    std::array<T, 16> a{};

    static constexpr Matrix4 zero() { return Matrix4{}; }
    static constexpr Matrix4 identity() {
        Matrix4 m{};
        for (int i = 0; i < 4; ++i) m.a[i * 5] = T(1);
        return m;
    }
    static constexpr Matrix4 diagonal(T d0, T d1, T d2, T d3) {
        Matrix4 m{};
        m.a[0] = d0;
        m.a[5] = d1;
        m.a[10] = d2;
        m.a[15] = d3;
        return m;
    }

    constexpr T& operator()(int r, int c) { return a[r * 4 + c]; }
    constexpr const T& operator()(int r, int c) const { return a[r * 4 + c]; }

    constexpr Matrix4 transpose() const {
        Matrix4 t{};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    constexpr T trace() const { return a[0] + a[5] + a[10] + a[15]; }

    constexpr Matrix4& operator+=(const Matrix4& o) {
        for (std::size_t i = 0; i < 16; ++i) a[i] += o.a[i];
        return *this;
    }
    constexpr Matrix4& operator-=(const Matrix4& o) {
        for (std::size_t i = 0; i < 16; ++i) a[i] -= o.a[i];
        return *this;
    }
    constexpr Matrix4& operator*=(T s) {
        for (auto& x : a) x *= s;
        return *this;
    }

    friend constexpr Matrix4 operator+(Matrix4 x, const Matrix4& y) { return x += y; }
    friend constexpr Matrix4 operator-(Matrix4 x, const Matrix4& y) { return x -= y; }
    friend constexpr Matrix4 operator-(Matrix4 x) {
        for (auto& v : x.a) v = -v;
        return x;
    }
    friend constexpr Matrix4 operator*(T s, Matrix4 x) { return x *= s; }
    friend constexpr Matrix4 operator*(Matrix4 x, T s) { return x *= s; }
    friend constexpr Matrix4 operator*(const Matrix4& x, const Matrix4& y) {
        Matrix4 p{};
        for (int r = 0; r < 4; ++r)
            for (int k = 0; k < 4; ++k) {
                const T xv = x(r, k);
                if (xv == T(0)) continue;
                for (int c = 0; c < 4; ++c) p(r, c) += xv * y(k, c);
            }
        return p;
    }
    friend constexpr bool operator==(const Matrix4& x, const Matrix4& y) { return x.a == y.a; }
};

using RealMatrix4 = Matrix4<double>;
using IntMatrix4 = Matrix4<int>;
using LorentzMatrix = Matrix4<double>;

inline RealMatrix4 to_real(const IntMatrix4& m) {
    RealMatrix4 r;
    for (std::size_t i = 0; i < 16; ++i) r.a[i] = static_cast<double>(m.a[i]);
    return r;
}

inline double max_abs(const RealMatrix4& m) {
    double v = 0.0;
    for (double x : m.a) v = std::max(v, std::abs(x));
    return v;
}

inline double frobenius_norm(const RealMatrix4& m) {
    double s = 0.0;
    for (double x : m.a) s += x * x;
    return std::sqrt(s);
}

// Determinant and inverse by Gaussian elimination with partial pivoting.
// The inverse is odd in the sign of the input bit-for-bit, which the covering
// map relies on (lambda_of(-S) == lambda_of(S) exactly).
template <typename T>
T determinant(const Matrix4<T>& m);
template <typename T>
Matrix4<T> inverse(const Matrix4<T>& m);

template <typename To, typename From>
Matrix4<To> matrix_cast(const Matrix4<From>& m) {
    Matrix4<To> r;
    for (std::size_t i = 0; i < 16; ++i) r.a[i] = static_cast<To>(m.a[i]);
    return r;
}

struct MajoranaSpinor {
    std::array<double, 4> c{};

    constexpr double& operator[](std::size_t i) { return c[i]; }
    constexpr const double& operator[](std::size_t i) const { return c[i]; }

    constexpr MajoranaSpinor& operator+=(const MajoranaSpinor& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
        return *this;
    }
    constexpr MajoranaSpinor& operator-=(const MajoranaSpinor& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
        return *this;
    }
    constexpr MajoranaSpinor& operator*=(double s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    friend constexpr MajoranaSpinor operator+(MajoranaSpinor x, const MajoranaSpinor& y) { return x += y; }
    friend constexpr MajoranaSpinor operator-(MajoranaSpinor x, const MajoranaSpinor& y) { return x -= y; }
    friend constexpr MajoranaSpinor operator*(double s, MajoranaSpinor x) { return x *= s; }
    friend constexpr bool operator==(const MajoranaSpinor& x, const MajoranaSpinor& y) { return x.c == y.c; }

    double norm_squared() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }
};

inline MajoranaSpinor operator*(const RealMatrix4& m, const MajoranaSpinor& v) {
    MajoranaSpinor r;
    for (int i = 0; i < 4; ++i)
        r.c[i] = m(i, 0) * v.c[0] + m(i, 1) * v.c[1] + m(i, 2) * v.c[2] + m(i, 3) * v.c[3];
    return r;
}

inline double dot(const MajoranaSpinor& x, const MajoranaSpinor& y) {
    return x.c[0] * y.c[0] + x.c[1] * y.c[1] + x.c[2] * y.c[2] + x.c[3] * y.c[3];
}

using complex = std::complex<double>;

struct PauliSpinor {
    std::array<complex, 2> c{};

    constexpr complex& operator[](std::size_t i) { return c[i]; }
    constexpr const complex& operator[](std::size_t i) const { return c[i]; }

    PauliSpinor& operator+=(const PauliSpinor& o) {
        c[0] += o.c[0];
        c[1] += o.c[1];
        return *this;
    }
    PauliSpinor& operator-=(const PauliSpinor& o) {
        c[0] -= o.c[0];
        c[1] -= o.c[1];
        return *this;
    }
    PauliSpinor& operator*=(complex s) {
        c[0] *= s;
        c[1] *= s;
        return *this;
    }
    friend PauliSpinor operator+(PauliSpinor x, const PauliSpinor& y) { return x += y; }
    friend PauliSpinor operator-(PauliSpinor x, const PauliSpinor& y) { return x -= y; }
    friend PauliSpinor operator*(complex s, PauliSpinor x) { return x *= s; }

    double norm_squared() const { return std::norm(c[0]) + std::norm(c[1]); }
};

// phi^dagger psi
inline complex inner(const PauliSpinor& phi, const PauliSpinor& psi) {
    return std::conj(phi.c[0]) * psi.c[0] + std::conj(phi.c[1]) * psi.c[1];
}

// 2x2 complex matrix, row-major.
struct Complex2 {
    std::array<complex, 4> a{};

    static Complex2 identity() { return Complex2{{complex(1), complex(0), complex(0), complex(1)}}; }
    complex& operator()(int r, int c) { return a[r * 2 + c]; }
    const complex& operator()(int r, int c) const { return a[r * 2 + c]; }

    Complex2 adjoint() const {
        return Complex2{{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}};
    }
    friend Complex2 operator+(Complex2 x, const Complex2& y) {
        for (int i = 0; i < 4; ++i) x.a[i] += y.a[i];
        return x;
    }
    friend Complex2 operator-(Complex2 x, const Complex2& y) {
        for (int i = 0; i < 4; ++i) x.a[i] -= y.a[i];
        return x;
    }
    friend Complex2 operator*(complex s, Complex2 x) {
        for (auto& v : x.a) v *= s;
        return x;
    }
    friend Complex2 operator*(const Complex2& x, const Complex2& y) {
        return Complex2{{x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
                         x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]}};
    }
};

inline PauliSpinor operator*(const Complex2& m, const PauliSpinor& v) {
    PauliSpinor r;
    r.c[0] = m.a[0] * v.c[0] + m.a[1] * v.c[1];
    r.c[1] = m.a[2] * v.c[0] + m.a[3] * v.c[1];
    return r;
}

inline double max_abs(const Complex2& m) {
    double v = 0.0;
    for (const auto& x : m.a) v = std::max(v, std::abs(x));
    return v;
}

}  // namespace majorana
