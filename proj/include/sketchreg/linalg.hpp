#pragma once

#include <cstddef>
#include <memory>
#include <mutex>

#include "sketchreg/matrix.hpp"

namespace sketchreg {

// Thin SVD, width min(n, d). U has orthonormal columns (n x m), sigma is
// nonincreasing and nonnegative, V has orthonormal columns (d x m).
// Signs follow a fixed convention: the largest-magnitude entry of each
// right singular vector is positive, ties broken by lowest index.
struct SvdFactors {
    Matrix u;
    Vector sigma;
    Matrix v;

    std::size_t width() const { return sigma.size(); }
};

// One-sided Jacobi SVD. Deterministic; throws NumericalError if the
// sweep loop fails to converge.
SvdFactors svd(const Matrix& x);

// Singular values below this are treated as zero in projectors and
// pseudoinverses.
double rank_cutoff(double sigma_max, std::size_t rows, std::size_t cols);

std::size_t numerical_rank(const Vector& sigma, std::size_t rows, std::size_t cols);

// Dense design matrix with a lazily cached SVD. The cache is filled at
// most once (thread-safe) and shared across copies.
class DesignMatrix {
public:
    DesignMatrix() = default;
    explicit DesignMatrix(Matrix x);

    std::size_t rows() const { return x_.rows(); }
    std::size_t cols() const { return x_.cols(); }
    const Matrix& x() const { return x_; }

    const SvdFactors& svd() const;
    bool svd_cached() const;

private:
    struct Cache;
    Matrix x_;
    std::shared_ptr<Cache> cache_;
};

// Head/tail split of an SVD at truncation level r.
struct SpectralPartition {
    std::size_t r = 0;
    Matrix u_head, v_head;
    Vector sigma_head;
    Matrix u_tail, v_tail;
    Vector sigma_tail;
};

SpectralPartition partition(const SvdFactors& f, std::size_t r);

struct TruncationResult {
    Matrix truncated;  // best rank-r approximation
    Matrix residual;   // X minus the approximation
};

TruncationResult truncate(const SvdFactors& f, std::size_t r);

// Sum of squared singular values past r.
double tail_energy_sq(const Vector& sigma, std::size_t r);

// Cumulative spectral energy gamma(s) and relative tail tau(s),
// s = 0..m. Requires the spectrum scaled so gamma(m) = n*d.
class TailEnergy {
public:
    TailEnergy(Vector gamma, Vector tau, double scale);

    double gamma(std::size_t s) const { return gamma_.at(s); }
    double tau(std::size_t s) const { return tau_.at(s); }
    double scale() const { return scale_; }
    std::size_t width() const { return tau_.size() - 1; }

private:
    Vector gamma_;
    Vector tau_;
    double scale_;
};

TailEnergy tail_energy(const SvdFactors& f, std::size_t n, std::size_t d);
TailEnergy tail_energy(const Vector& sigma, std::size_t n, std::size_t d);

// Orthonormal basis of a column space, stored as rows (rank x dim) so
// projections run on contiguous memory. Supports incremental extension.
class OrthoBasis {
public:
    OrthoBasis() = default;
    explicit OrthoBasis(std::size_t dim) : dim_(dim) {}

    std::size_t rank() const { return rank_; }
    std::size_t dim() const { return dim_; }

    const double* basis_row(std::size_t j) const { return storage_.data() + j * dim_; }

    Vector coefficients(const Vector& y) const;
    void project_inplace(Vector& y) const;
    Vector project(const Vector& y) const;
    // y := y - Q Q^T y
    void remove_projection(Vector& y) const;
    Vector residual(const Vector& y) const;
    double residual_norm_sq(const Vector& y) const;

    // P_M applied to every column of y (rows(y) == dim).
    Matrix project_columns(const Matrix& y) const;

    // Orthonormalizes v against the current basis (two Gram-Schmidt
    // passes) and appends it; returns false if v is numerically
    // dependent on the span.
    bool append_column(Vector v, double dependence_tol = 1e-12);

    Matrix to_matrix() const;  // rank x dim

private:
    std::size_t dim_ = 0;
    std::size_t rank_ = 0;
    std::vector<double> storage_;
};

// Rank-revealing orthonormal basis of col(M) via Householder QR with
// column pivoting.
OrthoBasis orthonormal_basis(const Matrix& m);

// P_M * Y through the rank-revealing factorization of M.
Matrix project_onto_colspace(const Matrix& m, const Matrix& y);

// Minimum-norm least squares solution of A w ~= y.
Vector least_squares_min_norm(const Matrix& a, const Vector& y);

}  // namespace sketchreg
