#include "becurv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace becurv {

SymMatrix::SymMatrix(std::size_t order) : n_(order), a_(order * order, 0.0) {
    if (order < 1) throw std::invalid_argument("SymMatrix: order must be >= 1");
}

SymMatrix::SymMatrix(std::size_t order, const std::vector<double>& row_major)
    : SymMatrix(order) {
    if (row_major.size() != order * order)
        throw std::invalid_argument("SymMatrix: entry count does not match order");
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double v = 0.5 * (row_major[i * n_ + j] + row_major[j * n_ + i]);
            a_[i * n_ + j] = v;
            a_[j * n_ + i] = v;
        }
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
}

void SymMatrix::add(std::size_t i, std::size_t j, double v) {
    a_[i * n_ + j] += v;
    if (i != j) a_[j * n_ + i] += v;
}

double SymMatrix::max_abs_entry() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
    return t;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double SymMatrix::quadratic_form(const std::vector<double>& f) const {
    if (f.size() != n_) throw std::invalid_argument("quadratic_form: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j) row += a_[i * n_ + j] * f[j];
        s += f[i] * row;
    }
    return s;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition eigen_sym(const SymMatrix& m) {
    const std::size_t n = m.order();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

    // v starts as identity and accumulates the rotations; columns end up as
    // the eigenvectors.
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    const double target = 1e-14 * (1.0 + m.frobenius_norm());
    const int max_sweeps = 100;

    int sweep = 0;
    while (n > 1 && off_diagonal_norm(a, n) >= target) {
        if (sweep++ >= max_sweeps)
            throw std::runtime_error("eigen_sym: Jacobi iteration did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (apq == 0.0) continue;
                double app = a[p * n + p];
                double aqq = a[q * n + q];
                // Rotation angle chosen to annihilate a_pq (standard Jacobi).
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k * n + p];
                    double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p * n + k];
                    double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v[k * n + p];
                    double vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors.assign(n, std::vector<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a[idx[k] * n + idx[k]];
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors[k][i] = v[i * n + idx[k]];
    }
    return out;
}

double min_eigenvalue(const SymMatrix& m) { return eigen_sym(m).eigenvalues.front(); }

SymMatrix schur_reduce(const SymMatrix& a, const std::vector<std::vector<double>>& b,
                       const std::vector<double>& d) {
    const std::size_t p = a.order();
    const std::size_t q = d.size();
    for (std::size_t k = 0; k < q; ++k)
        if (!(d[k] > 0.0))
            throw std::invalid_argument("schur_reduce: non-positive diagonal entry at index " +
                                        std::to_string(k));
    if (b.size() != p) throw std::invalid_argument("schur_reduce: row count mismatch");
    for (const auto& row : b)
        if (row.size() != q) throw std::invalid_argument("schur_reduce: column count mismatch");

    SymMatrix out(p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < q; ++k) s += b[i][k] * b[j][k] / d[k];
            out.set(i, j, a(i, j) - s);
        }
    return out;
}

SymMatrix congruence_diag(const SymMatrix& m, const std::vector<double>& d) {
    const std::size_t n = m.order();
    if (d.size() != n) throw std::invalid_argument("congruence_diag: size mismatch");
    std::vector<double> inv_sqrt(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(d[i] > 0.0))
            throw std::invalid_argument("congruence_diag: non-positive diagonal entry at index " +
                                        std::to_string(i));
        inv_sqrt[i] = 1.0 / std::sqrt(d[i]);
    }
    SymMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            out.set(i, j, inv_sqrt[i] * m(i, j) * inv_sqrt[j]);
    return out;
}

bool is_psd(const SymMatrix& m, double tol) { return min_eigenvalue(m) >= -tol; }

}  // namespace becurv
