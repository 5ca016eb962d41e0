// algebra.hpp: local operators and superoperators on lattice volumes.
//
// Conventions, used everywhere downstream:
//  * tensor factors follow the volume's site order (first site = most
//    significant Kronecker factor);
//  * operators are vectorized by column stacking, vec(X)[c*D + r] = X(r,c),
//    so vec(A X B) = kron(B^T, A) vec(X);
//  * a superoperator on k sites of local dimension q is a (q^2)^k square
//    matrix acting on vectorized operators.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <vector>

#include "qmslat/errors.hpp"
#include "qmslat/lattice.hpp"
#include "qmslat/spin.hpp"

namespace qmslat {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

inline long ipow(long base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

struct LocalOperator {
    Volume support;
    Matrix matrix;
    int site_dim = 2;

    LocalOperator() = default;
    LocalOperator(Volume s, Matrix m, int q = 2) : support(std::move(s)), matrix(std::move(m)), site_dim(q) {
        if (q < 2) throw std::invalid_argument("LocalOperator: site_dim must be >= 2");
        const long d = ipow(q, support.size());
        if (matrix.rows() != d || matrix.cols() != d)
            throw std::invalid_argument("LocalOperator: matrix is " + std::to_string(matrix.rows()) + "x" +
                                        std::to_string(matrix.cols()) + " but support " + to_string(support) +
                                        " needs dimension " + std::to_string(d));
    }
    long dim() const { return matrix.rows(); }
};

struct LocalSuperoperator {
    Volume support;
    Matrix matrix;
    int site_dim = 2;

    LocalSuperoperator() = default;
    LocalSuperoperator(Volume s, Matrix m, int q = 2) : support(std::move(s)), matrix(std::move(m)), site_dim(q) {
        if (q < 2) throw std::invalid_argument("LocalSuperoperator: site_dim must be >= 2");
        const long d = ipow(static_cast<long>(q) * q, support.size());
        if (matrix.rows() != d || matrix.cols() != d)
            throw std::invalid_argument("LocalSuperoperator: matrix is " + std::to_string(matrix.rows()) + "x" +
                                        std::to_string(matrix.cols()) + " but support " + to_string(support) +
                                        " needs dimension " + std::to_string(d));
    }
    long op_dim() const { return ipow(site_dim, support.size()); }
    long dim() const { return matrix.rows(); }
};

// ---- vectorization -------------------------------------------------------

inline Vector vec(const Matrix& x) {
    return Eigen::Map<const Vector>(x.data(), x.size());
}

inline Matrix unvec(const Vector& v) {
    const long d = static_cast<long>(std::llround(std::sqrt(double(v.size()))));
    if (d * d != v.size()) throw std::invalid_argument("unvec: length is not a perfect square");
    return Eigen::Map<const Matrix>(v.data(), d, d);
}

// lift(A, B) vec(X) = vec(A X B).
inline Matrix lift(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("lift: factors must be square and of equal dimension");
    return kron(b.transpose(), a);
}

// Superoperator matrix of X -> [H, X] (commutator) and X -> K* X K.
inline Matrix commutator_lift(const Matrix& h) {
    const Matrix id = Matrix::Identity(h.rows(), h.cols());
    return lift(h, id) - lift(id, h);
}
inline Matrix sandwich_lift(const Matrix& k) { return lift(k.adjoint(), k); }

// ---- embeddings ----------------------------------------------------------

// Index bookkeeping for a subset of sites inside a volume: global operator
// index = sub_table[sub index] + rest_table[rest index] (base-q digits placed
// at subset resp. complement positions, site-major).
struct EmbedIndexer {
    std::vector<long> sub_table;
    std::vector<long> rest_table;

    EmbedIndexer(const Volume& target, const Volume& subset, int q);
    long merge(long sub, long rest) const { return sub_table[sub] + rest_table[rest]; }
    long sub_dim() const { return static_cast<long>(sub_table.size()); }
    long rest_dim() const { return static_cast<long>(rest_table.size()); }
};

// A (x) 1l on target \ support.
LocalOperator embed_operator(const LocalOperator& op, const Volume& target);

// T (x) id on target \ support. Dense; guarded to vec dimension <= 4096.
LocalSuperoperator embed_superoperator(const LocalSuperoperator& sop, const Volume& target);

// Same embedding, sparse (for finite-volume assembly at larger dimension).
SparseMatrix embed_superoperator_sparse(const LocalSuperoperator& sop, const Volume& target);

// Matrix-free action of T (x) id on a vectorized operator over `target`.
// `v` has length (q^2)^{|target|}; T acts on the subset sites.
Vector apply_on_subsystem(const Matrix& sop, const Volume& target, const Volume& subset, int q, const Vector& v);

// Product of single-site superoperators, one factor per site of the volume,
// as a dense matrix on the volume. factors[i] acts on volume.sites()[i].
Matrix product_superoperator(const std::vector<Matrix>& factors, int n_sites, int q);

// Apply a superoperator to an operator; supports are merged first if needed.
LocalOperator apply(const LocalSuperoperator& sop, const LocalOperator& op);

// ---- norms and adjoints --------------------------------------------------

double spectral_norm(const Matrix& m);

// Induced spectral->spectral norm of a superoperator presented by callbacks
// (forward and Hilbert-Schmidt-adjoint action on op_dim x op_dim matrices).
// Alternating ascent over the unit ball; deterministic multi-start.
double induced_operator_norm(const std::function<Matrix(const Matrix&)>& apply,
                             const std::function<Matrix(const Matrix&)>& apply_adjoint, long op_dim,
                             double tol = 1e-10, int max_iter = 500);

double operator_norm(const LocalSuperoperator& sop);

enum class CbMode { exact, footnote_bound };

// Completely bounded norm. `exact` evaluates ||T (x) id_n|| with ancilla
// dimension n = op_dim (sufficient: the cb norm is attained there);
// `footnote_bound` returns op_dim * operator_norm, a cheap upper bound.
double cb_norm(const LocalSuperoperator& sop, CbMode mode = CbMode::exact);

LocalSuperoperator hs_adjoint(const LocalSuperoperator& sop);

}  // namespace qmslat
