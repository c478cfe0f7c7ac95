#include "qpca/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "qpca/errors.hpp"

namespace qpca {

namespace {

void check_finite(const RealMatrix& a) {
    for (double x : a.data()) {
        if (!std::isfinite(x)) throw NumericalError("matrix contains a non-finite entry");
    }
}

double column_dot(const RealMatrix& w, std::size_t p, std::size_t q) {
    double sum = 0.0;
    for (std::size_t i = 0; i < w.rows(); ++i) sum += w(i, p) * w(i, q);
    return sum;
}

// Orthogonalize the columns of W by plane rotations, accumulating them in V.
// On convergence the columns of W are sigma_j * u_j.
void jacobi_orthogonalize(RealMatrix& w, RealMatrix& v) {
    const std::size_t n = w.cols();
    const double tol = 1e-14;
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = column_dot(w, p, p);
                const double beta = column_dot(w, q, q);
                const double gamma = column_dot(w, p, q);
                if (alpha == 0.0 || beta == 0.0) continue;
                if (std::abs(gamma) <= tol * std::sqrt(alpha * beta)) continue;
                rotated = true;

                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                for (std::size_t i = 0; i < w.rows(); ++i) {
                    const double wp = w(i, p);
                    const double wq = w(i, q);
                    w(i, p) = c * wp - s * wq;
                    w(i, q) = s * wp + c * wq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vp = v(i, p);
                    const double vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) return;
    }
    throw NumericalError("SVD did not converge");
}

// Fill the columns of u at positions [filled, m) with vectors orthonormal to
// the ones already present, drawn from the canonical basis.
void complete_basis(RealMatrix& u, std::size_t filled) {
    const std::size_t m = u.rows();
    std::size_t next = filled;
    for (std::size_t e = 0; e < m && next < m; ++e) {
        std::vector<double> cand(m, 0.0);
        cand[e] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < next; ++j) {
                double proj = 0.0;
                for (std::size_t i = 0; i < m; ++i) proj += u(i, j) * cand[i];
                for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * u(i, j);
            }
        }
        double norm2 = 0.0;
        for (double x : cand) norm2 += x * x;
        if (norm2 < 0.25) continue; // e_i mostly inside the current span
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < m; ++i) u(i, next) = cand[i] * inv;
        ++next;
    }
    if (next != m) throw NumericalError("failed to complete an orthonormal basis");
}

// Core routine for tall-or-square input (rows >= cols).
SvdResult svd_tall(const RealMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    RealMatrix w = a;
    RealMatrix v = RealMatrix::identity(n);
    jacobi_orthogonalize(w, v);

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(column_dot(w, j, j));

    // Non-increasing sigma; stable order keeps the result deterministic.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&sigma](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    SvdResult out;
    out.singular_values.resize(n);
    out.v = RealMatrix(n, n);
    out.u = RealMatrix(m, m);

    // Left vectors come from normalizing the nonzero columns of W. Columns
    // whose singular value underflows are replaced by basis completion.
    const double sigma_max = sigma[order[0]];
    const double tiny = std::max(sigma_max, 1.0) * 1e-14 * static_cast<double>(std::max(m, n));
    std::size_t filled = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.singular_values[j] = sigma[src];
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = v(i, src);
        if (sigma[src] > tiny && filled == j) {
            const double inv = 1.0 / sigma[src];
            for (std::size_t i = 0; i < m; ++i) out.u(i, j) = w(i, src) * inv;
            ++filled;
        }
    }
    complete_basis(out.u, filled);

    for (double& s : out.singular_values) {
        if (s < 0.0) s = 0.0; // norms are nonnegative; keep the contract explicit
    }
    return out;
}

} // namespace

DataMatrix build_data_matrix(const std::vector<std::vector<double>>& samples) {
    if (samples.empty()) throw DimensionError("training set is empty");
    const std::size_t n = samples.front().size();
    if (n == 0) throw DimensionError("samples must have at least one feature");

    RealMatrix m(samples.size(), n);
    for (std::size_t r = 0; r < samples.size(); ++r) {
        const auto& row = samples[r];
        if (row.size() != n) {
            throw DimensionError("sample " + std::to_string(r) + " has length " +
                                 std::to_string(row.size()) + ", expected " + std::to_string(n));
        }
        double norm2 = 0.0;
        for (double x : row) {
            if (!std::isfinite(x)) throw NumericalError("sample contains a non-finite entry");
            norm2 += x * x;
        }
        if (norm2 == 0.0) {
            throw DegenerateSampleError("sample " + std::to_string(r) + " is the zero vector");
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c] * inv;
    }
    return DataMatrix(std::move(m));
}

SvdResult svd(const RealMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) throw DimensionError("SVD of an empty matrix");
    check_finite(a);
    if (a.rows() >= a.cols()) return svd_tall(a);
    // A = U S V^T  <=>  A^T = V S U^T
    SvdResult t = svd_tall(a.transposed());
    return SvdResult{std::move(t.v), std::move(t.singular_values), std::move(t.u)};
}

SvdResult svd(const DataMatrix& a) { return svd(a.matrix()); }

std::size_t numerical_rank(const SvdResult& svd) {
    std::size_t r = 0;
    for (double s : svd.singular_values) {
        if (s > kRankThreshold) ++r;
    }
    return r;
}

PrincipalComponents extract_components(const SvdResult& svd, std::size_t s) {
    if (s == 0) throw RankError("component count must be at least 1");
    const std::size_t rank = numerical_rank(svd);
    if (s > rank) {
        throw RankError("requested " + std::to_string(s) + " components but numerical rank is " +
                        std::to_string(rank));
    }

    const std::size_t n = svd.v.rows();
    PrincipalComponents pc;
    pc.components.reserve(s);
    pc.singular_values.assign(svd.singular_values.begin(), svd.singular_values.begin() + s);
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<double> comp(n);
        for (std::size_t i = 0; i < n; ++i) comp[i] = svd.v(i, j);

        // Sign convention: largest-magnitude entry positive, ties to the
        // lowest index.
        std::size_t lead = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (std::abs(comp[i]) > std::abs(comp[lead])) lead = i;
        }
        if (comp[lead] < 0.0) {
            for (double& x : comp) x = -x;
        }
        // Unit norm bounds every entry by 1; trim float spill.
        for (double& x : comp) x = std::clamp(x, -1.0, 1.0);
        pc.components.push_back(std::move(comp));
    }
    return pc;
}

std::size_t component_count_for_variance(const SvdResult& svd, double tau) {
    if (tau <= 0.0 || tau > 1.0) throw RangeError("variance threshold must be in (0, 1]");
    double total = 0.0;
    for (double s : svd.singular_values) total += s * s;
    if (total == 0.0) throw RankError("matrix has no positive singular values");

    const std::size_t rank = std::max<std::size_t>(numerical_rank(svd), 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < rank; ++i) {
        acc += svd.singular_values[i] * svd.singular_values[i];
        if (acc / total >= tau) return i + 1;
    }
    return rank;
}

RealMatrix center_rows(const RealMatrix& m) {
    RealMatrix out = m;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < m.rows(); ++r) mean += m(r, c);
        mean /= static_cast<double>(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, c) -= mean;
    }
    return out;
}

} // namespace qpca
