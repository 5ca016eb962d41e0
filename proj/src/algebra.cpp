#include "qmslat/algebra.hpp"

#include <Eigen/SVD>
#include <random>

namespace qmslat {

namespace {

std::vector<int> positions_in(const Volume& target, const Volume& subset) {
    if (!target.contains(subset))
        throw std::invalid_argument("embed: support " + to_string(subset) + " not contained in " + to_string(target));
    std::vector<int> pos;
    pos.reserve(subset.size());
    for (const auto& s : subset.sites()) pos.push_back(target.index_of(s));
    return pos;
}

// digit place value q^{n-1-pos} for each of `positions` (site-major).
std::vector<long> place_values(const std::vector<int>& positions, int n, int q) {
    std::vector<long> pv;
    pv.reserve(positions.size());
    for (int p : positions) pv.push_back(ipow(q, n - 1 - p));
    return pv;
}

std::vector<long> digit_table(const std::vector<long>& place_values, int q) {
    const int k = static_cast<int>(place_values.size());
    const long dim = ipow(q, k);
    std::vector<long> table(dim);
    for (long idx = 0; idx < dim; ++idx) {
        long v = 0, rem = idx;
        for (int i = k - 1; i >= 0; --i) {
            v += (rem % q) * place_values[i];
            rem /= q;
        }
        table[idx] = v;
    }
    return table;
}

}  // namespace

EmbedIndexer::EmbedIndexer(const Volume& target, const Volume& subset, int q) {
    const int n = target.size();
    const auto sub_pos = positions_in(target, subset);
    std::vector<int> rest_pos;
    for (int p = 0; p < n; ++p)
        if (std::find(sub_pos.begin(), sub_pos.end(), p) == sub_pos.end()) rest_pos.push_back(p);
    sub_table = digit_table(place_values(sub_pos, n, q), q);
    rest_table = digit_table(place_values(rest_pos, n, q), q);
}

LocalOperator embed_operator(const LocalOperator& op, const Volume& target) {
    if (op.support == target) return op;
    const int q = op.site_dim;
    EmbedIndexer ix(target, op.support, q);
    const long D = ipow(q, target.size());
    Matrix out = Matrix::Zero(D, D);
    for (long a = 0; a < ix.sub_dim(); ++a)
        for (long b = 0; b < ix.sub_dim(); ++b) {
            const Complex val = op.matrix(a, b);
            if (val == Complex(0, 0)) continue;
            for (long r = 0; r < ix.rest_dim(); ++r) out(ix.merge(a, r), ix.merge(b, r)) = val;
        }
    return LocalOperator(target, std::move(out), q);
}

namespace {

// Shared loop for dense/sparse superoperator embedding. Emits one entry of
// the embedded matrix per (T entry, rest column digit, rest row digit).
template <typename Sink>
void embed_superoperator_entries(const LocalSuperoperator& sop, const Volume& target, Sink&& sink) {
    const int q = sop.site_dim;
    EmbedIndexer ix(target, sop.support, q);
    const long Dop = ipow(q, target.size());           // operator dimension on target
    const long dS = ix.sub_dim();                      // operator dimension on support
    const Matrix& T = sop.matrix;
    for (long row = 0; row < T.rows(); ++row) {
        const long cOut = row / dS, rOut = row % dS;   // vec index = col * d + row
        for (long col = 0; col < T.cols(); ++col) {
            const Complex val = T(row, col);
            if (val == Complex(0, 0)) continue;
            const long cIn = col / dS, rIn = col % dS;
            for (long cr = 0; cr < ix.rest_dim(); ++cr) {
                const long gcOut = ix.merge(cOut, cr), gcIn = ix.merge(cIn, cr);
                for (long rr = 0; rr < ix.rest_dim(); ++rr) {
                    const long grOut = ix.merge(rOut, rr), grIn = ix.merge(rIn, rr);
                    sink(gcOut * Dop + grOut, gcIn * Dop + grIn, val);
                }
            }
        }
    }
}

}  // namespace

LocalSuperoperator embed_superoperator(const LocalSuperoperator& sop, const Volume& target) {
    if (sop.support == target) return sop;
    const long vdim = ipow(static_cast<long>(sop.site_dim) * sop.site_dim, target.size());
    if (vdim > 4096)
        throw std::invalid_argument("embed_superoperator: dense embedding capped at dimension 4096, got " +
                                    std::to_string(vdim) + "; use embed_superoperator_sparse");
    Matrix out = Matrix::Zero(vdim, vdim);
    embed_superoperator_entries(sop, target, [&](long i, long j, Complex v) { out(i, j) += v; });
    return LocalSuperoperator(target, std::move(out), sop.site_dim);
}

SparseMatrix embed_superoperator_sparse(const LocalSuperoperator& sop, const Volume& target) {
    const long vdim = ipow(static_cast<long>(sop.site_dim) * sop.site_dim, target.size());
    std::vector<Eigen::Triplet<Complex>> trips;
    embed_superoperator_entries(sop, target,
                                [&](long i, long j, Complex v) { trips.emplace_back(int(i), int(j), v); });
    SparseMatrix out(vdim, vdim);
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

Vector apply_on_subsystem(const Matrix& sop, const Volume& target, const Volume& subset, int q, const Vector& v) {
    EmbedIndexer ix(target, subset, q);
    const long Dop = ipow(q, target.size());
    const long dS = ix.sub_dim(), dR = ix.rest_dim();
    if (sop.rows() != dS * dS || sop.cols() != dS * dS)
        throw std::invalid_argument("apply_on_subsystem: superoperator dimension mismatch");
    if (v.size() != Dop * Dop) throw std::invalid_argument("apply_on_subsystem: vector length mismatch");
    Vector out = Vector::Zero(v.size());
    Vector sub(dS * dS), subo(dS * dS);
    for (long cr = 0; cr < dR; ++cr) {
        for (long rr = 0; rr < dR; ++rr) {
            for (long c = 0; c < dS; ++c)
                for (long r = 0; r < dS; ++r) sub(c * dS + r) = v(ix.merge(c, cr) * Dop + ix.merge(r, rr));
            subo.noalias() = sop * sub;
            for (long c = 0; c < dS; ++c)
                for (long r = 0; r < dS; ++r) out(ix.merge(c, cr) * Dop + ix.merge(r, rr)) = subo(c * dS + r);
        }
    }
    return out;
}

Matrix product_superoperator(const std::vector<Matrix>& factors, int n_sites, int q) {
    if (static_cast<int>(factors.size()) != n_sites)
        throw std::invalid_argument("product_superoperator: one factor per site required");
    const long d2 = static_cast<long>(q) * q;
    const long vdim = ipow(d2, n_sites);
    if (vdim > 4096) throw std::invalid_argument("product_superoperator: capped at dimension 4096");
    Matrix K = Matrix::Identity(1, 1);
    for (const auto& f : factors) {
        if (f.rows() != d2 || f.cols() != d2)
            throw std::invalid_argument("product_superoperator: factor must be q^2 x q^2");
        K = kron(K, f);
    }
    // Reindex from per-site (c_i, r_i) pairs to the global (c, r) layout.
    const long Dop = ipow(q, n_sites);
    std::vector<long> perm(vdim);
    for (long v = 0; v < vdim; ++v) {
        long c = v / Dop, r = v % Dop;
        long per_site = 0;
        std::vector<int> cd(n_sites), rd(n_sites);
        for (int i = n_sites - 1; i >= 0; --i) {
            cd[i] = int(c % q);
            c /= q;
            rd[i] = int(r % q);
            r /= q;
        }
        for (int i = 0; i < n_sites; ++i) per_site = per_site * d2 + (cd[i] * q + rd[i]);
        perm[v] = per_site;
    }
    Matrix out(vdim, vdim);
    for (long i = 0; i < vdim; ++i)
        for (long j = 0; j < vdim; ++j) out(i, j) = K(perm[i], perm[j]);
    return out;
}

LocalOperator apply(const LocalSuperoperator& sop, const LocalOperator& op) {
    if (sop.site_dim != op.site_dim) throw std::invalid_argument("apply: site dimension mismatch");
    if (sop.support == op.support) return LocalOperator(op.support, unvec(sop.matrix * vec(op.matrix)), op.site_dim);
    const Volume joint = sop.support | op.support;
    const LocalOperator big = embed_operator(op, joint);
    Vector out = apply_on_subsystem(sop.matrix, joint, sop.support, op.site_dim, vec(big.matrix));
    return LocalOperator(joint, unvec(out), op.site_dim);
}

// ---- norms ----------------------------------------------------------------

double spectral_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    if (m.rows() <= 256) {
        Eigen::JacobiSVD<Matrix> svd(m);
        return svd.singularValues()(0);
    }
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

namespace {

// Unitary polar factor U V^dagger; identity if the input is negligible.
Matrix polar_unitary(const Matrix& z) {
    Eigen::JacobiSVD<Matrix> svd(z, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues()(0) < 1e-300) return Matrix::Identity(z.rows(), z.cols());
    return svd.matrixU() * svd.matrixV().adjoint();
}

struct TopPair {
    double sigma;
    Vector u, v;
};

TopPair top_singular(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return {svd.singularValues()(0), svd.matrixU().col(0), svd.matrixV().col(0)};
}

}  // namespace

double induced_operator_norm(const std::function<Matrix(const Matrix&)>& apply_fn,
                             const std::function<Matrix(const Matrix&)>& apply_adjoint, long op_dim, double tol,
                             int max_iter) {
    std::vector<Matrix> starts;
    starts.push_back(Matrix::Identity(op_dim, op_dim));
    if (op_dim <= 8) {
        for (long i = 0; i < op_dim; ++i)
            for (long j = 0; j < op_dim; ++j) {
                Matrix unit = Matrix::Zero(op_dim, op_dim);
                unit(i, j) = 1;
                starts.push_back(std::move(unit));
            }
    }
    {
        // Gradient start from the identity: where does the adjoint point?
        TopPair tp = top_singular(apply_fn(Matrix::Identity(op_dim, op_dim)));
        if (tp.sigma > 1e-300) starts.push_back(polar_unitary(apply_adjoint(tp.u * tp.v.adjoint())));
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < 4; ++k) {
        Matrix g(op_dim, op_dim);
        for (long i = 0; i < op_dim; ++i)
            for (long j = 0; j < op_dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
        starts.push_back(polar_unitary(g));
    }

    double best = 0.0;
    for (auto& x0 : starts) {
        Matrix x = x0;
        double prev = -1.0;
        for (int it = 0; it < max_iter; ++it) {
            TopPair tp = top_singular(apply_fn(x));
            best = std::max(best, tp.sigma);
            if (tp.sigma < 1e-300) break;
            if (prev >= 0 && tp.sigma - prev <= tol * std::max(1.0, tp.sigma)) break;
            prev = tp.sigma;
            x = polar_unitary(apply_adjoint(tp.u * tp.v.adjoint()));
        }
    }
    return best;
}

double operator_norm(const LocalSuperoperator& sop) {
    const long d = sop.op_dim();
    auto fwd = [&](const Matrix& x) { return unvec(sop.matrix * vec(x)); };
    auto adj = [&](const Matrix& x) { return unvec(sop.matrix.adjoint() * vec(x)); };
    return induced_operator_norm(fwd, adj, d);
}

double cb_norm(const LocalSuperoperator& sop, CbMode mode) {
    const long d = sop.op_dim();
    if (mode == CbMode::footnote_bound) return static_cast<double>(d) * operator_norm(sop);
    // Ancilla of dimension d is enough to attain the cb norm. Act blockwise:
    // X on H (x) H_anc decomposes into d_anc^2 blocks, T hits each block.
    const long da = d;
    const long dim = d * da;
    auto blockwise = [da, d](const Matrix& sopm, const Matrix& x) {
        Matrix out(x.rows(), x.cols());
        Matrix blk(d, d);
        for (long a = 0; a < da; ++a)
            for (long b = 0; b < da; ++b) {
                for (long i = 0; i < d; ++i)
                    for (long j = 0; j < d; ++j) blk(i, j) = x(i * da + a, j * da + b);
                Matrix tout = unvec(sopm * vec(blk));
                for (long i = 0; i < d; ++i)
                    for (long j = 0; j < d; ++j) out(i * da + a, j * da + b) = tout(i, j);
            }
        return out;
    };
    const Matrix m = sop.matrix;
    const Matrix madj = sop.matrix.adjoint();
    auto fwd = [&](const Matrix& x) { return blockwise(m, x); };
    auto adj = [&](const Matrix& x) { return blockwise(madj, x); };
    return induced_operator_norm(fwd, adj, dim);
}

LocalSuperoperator hs_adjoint(const LocalSuperoperator& sop) {
    return LocalSuperoperator(sop.support, sop.matrix.adjoint(), sop.site_dim);
}

}  // namespace qmslat
