// spin.hpp: qubit matrices and small dense helpers shared across modules.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <unsupported/Eigen/KroneckerProduct>

namespace qmslat {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using Vector = Eigen::VectorXcd;

namespace spin {

inline Matrix identity(int d = 2) { return Matrix::Identity(d, d); }

// Basis convention: e0 = |up>, e1 = |down>, sigma_z |up> = +|up>.
inline Matrix sx() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
inline Matrix sy() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}
inline Matrix sz() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}
// Raising/lowering: sp |down> = |up>, sm |up> = |down>.
inline Matrix sp() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1;
    return m;
}
inline Matrix sm() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1;
    return m;
}
inline Vector ket_up() {
    Vector v = Vector::Zero(2);
    v(0) = 1;
    return v;
}
inline Vector ket_down() {
    Vector v = Vector::Zero(2);
    v(1) = 1;
    return v;
}

}  // namespace spin

inline Matrix kron(const Matrix& a, const Matrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

}  // namespace qmslat
