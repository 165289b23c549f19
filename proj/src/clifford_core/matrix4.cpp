#include "majorana/matrix4.hpp"

#include <stdexcept>
#include <utility>

namespace majorana {

template <typename T>
T determinant(const Matrix4<T>& m) {
    Matrix4<T> u = m;
    T det = 1;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(u(r, col)) > std::abs(u(piv, col))) piv = r;
        if (u(piv, col) == T(0)) return T(0);
        if (piv != col) {
            for (int c = 0; c < 4; ++c) std::swap(u(piv, c), u(col, c));
            det = -det;
        }
        det *= u(col, col);
        for (int r = col + 1; r < 4; ++r) {
            const T f = u(r, col) / u(col, col);
            for (int c = col; c < 4; ++c) u(r, c) -= f * u(col, c);
        }
    }
    return det;
}

template <typename T>
Matrix4<T> inverse(const Matrix4<T>& m) {
    Matrix4<T> u = m;
    Matrix4<T> inv = Matrix4<T>::identity();
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(u(r, col)) > std::abs(u(piv, col))) piv = r;
        if (u(piv, col) == T(0)) throw std::domain_error("singular 4x4 matrix");
        if (piv != col)
            for (int c = 0; c < 4; ++c) {
                std::swap(u(piv, c), u(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        const T d = u(col, col);
        for (int c = 0; c < 4; ++c) {
            u(col, c) /= d;
            inv(col, c) /= d;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const T f = u(r, col);
            if (f == T(0)) continue;
            for (int c = 0; c < 4; ++c) {
                u(r, c) -= f * u(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

template double determinant(const Matrix4<double>&);
template long double determinant(const Matrix4<long double>&);
template Matrix4<double> inverse(const Matrix4<double>&);
template Matrix4<long double> inverse(const Matrix4<long double>&);

}  // namespace majorana
