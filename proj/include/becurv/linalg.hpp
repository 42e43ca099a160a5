#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace becurv {

// Dense symmetric matrix, full storage. Construction symmetrizes by
// averaging (M[i][j] and M[j][i] are replaced by their mean), so the
// stored entries satisfy m(i,j) == m(j,i) exactly.
class SymMatrix {
public:
    explicit SymMatrix(std::size_t order);
    SymMatrix(std::size_t order, const std::vector<double>& row_major);

    std::size_t order() const { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    // Sets both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double v);
    // Adds v to both (i,j) and (j,i); adds only once on the diagonal.
    void add(std::size_t i, std::size_t j, double v);

    double max_abs_entry() const;
    double trace() const;
    double frobenius_norm() const;

    // f^T M f
    double quadratic_form(const std::vector<double>& f) const;

private:
    std::size_t n_;
    std::vector<double> a_;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;            // ascending
    std::vector<std::vector<double>> eigenvectors;  // eigenvectors[k] is the unit vector for eigenvalues[k]
};

// Cyclic Jacobi rotations. Converges when the off-diagonal Frobenius norm
// drops below 1e-14 * (1 + frobenius_norm(M)); throws after 100 full sweeps
// without convergence.
EigenDecomposition eigen_sym(const SymMatrix& m);

double min_eigenvalue(const SymMatrix& m);

// A - B D^-1 B^T for positive diagonal D. B is rows(A) x |D|, row-major.
// Throws std::invalid_argument naming the offending index if some D entry
// is not strictly positive.
SymMatrix schur_reduce(const SymMatrix& a, const std::vector<std::vector<double>>& b,
                       const std::vector<double>& d);

// D^{-1/2} M D^{-1/2} with D = diag(d), all d_i > 0.
SymMatrix congruence_diag(const SymMatrix& m, const std::vector<double>& d);

bool is_psd(const SymMatrix& m, double tol);

}  // namespace becurv
