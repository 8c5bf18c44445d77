#include "sketchreg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sketchreg/errors.hpp"
#include "sketchreg/kernels.hpp"

namespace sketchreg {

namespace {

constexpr double kJacobiTol = 1e-12;
constexpr int kJacobiMaxSweeps = 60;

// One-sided Jacobi on the rows of w (each row is a column of the tall
// input): rotates pairs of rows until they are mutually orthogonal.
// vwork accumulates the right-hand rotations, starting from identity.
void jacobi_orthogonalize(Matrix& w, Matrix& vwork, std::size_t orig_rows, std::size_t orig_cols) {
    const std::size_t m = w.rows();
    const std::size_t h = w.cols();
    Vector normsq(m);
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        for (std::size_t j = 0; j < m; ++j) normsq[j] = kernels::sumsq(w.row(j), h);
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = kernels::dot(w.row(p), w.row(q), h);
                const double denom = std::sqrt(normsq[p] * normsq[q]);
                if (denom == 0.0 || std::abs(apq) <= kJacobiTol * denom) continue;
                const double tau = (normsq[q] - normsq[p]) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                kernels::rot(w.row(p), w.row(q), c, s, h);
                kernels::rot(vwork.row(p), vwork.row(q), c, s, m);
                normsq[p] -= t * apq;
                normsq[q] += t * apq;
                rotated = true;
            }
        }
        if (!rotated) return;
    }
    throw NumericalError("SVD Jacobi sweeps did not converge", orig_rows, orig_cols);
}

// Deterministic completion of orthonormal columns for zero singular
// values: picks the canonical basis vector with the largest residual.
void complete_column(Matrix& u, std::size_t col, std::size_t filled) {
    const std::size_t n = u.rows();
    Vector best;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        Vector cand(n, 0.0);
        cand[i] = 1.0;
        for (std::size_t j = 0; j < filled; ++j) {
            double c = 0.0;
            for (std::size_t row = 0; row < n; ++row) c += u(row, j) * cand[row];
            for (std::size_t row = 0; row < n; ++row) cand[row] -= c * u(row, j);
        }
        const double nrm = norm2_sq(cand);
        if (nrm > best_norm) {
            best_norm = nrm;
            best = std::move(cand);
        }
    }
    // second orthogonalization pass
    for (std::size_t j = 0; j < filled; ++j) {
        double c = 0.0;
        for (std::size_t row = 0; row < n; ++row) c += u(row, j) * best[row];
        for (std::size_t row = 0; row < n; ++row) best[row] -= c * u(row, j);
    }
    const double nrm = norm2(best);
    for (std::size_t row = 0; row < n; ++row) u(row, col) = best[row] / nrm;
}

void apply_sign_convention(Matrix& u, Matrix& v) {
    const std::size_t m = v.cols();
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t arg = 0;
        double best = std::abs(v(0, j));
        for (std::size_t i = 1; i < v.rows(); ++i) {
            const double a = std::abs(v(i, j));
            if (a > best) {
                best = a;
                arg = i;
            }
        }
        if (v(arg, j) < 0.0) {
            for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) = -v(i, j);
            for (std::size_t i = 0; i < u.rows(); ++i) u(i, j) = -u(i, j);
        }
    }
}

}  // namespace

SvdFactors svd(const Matrix& x) {
    const std::size_t n = x.rows();
    const std::size_t d = x.cols();
    if (n == 0 || d == 0) throw std::invalid_argument("svd: empty matrix");
    if (!all_finite(x)) throw std::invalid_argument("svd: matrix has non-finite entries");
    const std::size_t m = std::min(n, d);
    const bool tall = n >= d;
    const std::size_t h = std::max(n, d);

    // w holds the columns of the tall orientation of x as rows.
    Matrix w(m, h);
    if (tall) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < d; ++j) w(j, i) = x(i, j);
    } else {
        w = x;
    }
    Matrix vwork = Matrix::identity(m);
    jacobi_orthogonalize(w, vwork, n, d);

    Vector sig(m);
    for (std::size_t j = 0; j < m; ++j) sig[j] = std::sqrt(kernels::sumsq(w.row(j), h));

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] > sig[b]; });

    // Left factor of the tall orientation (h x m) from normalized rows
    // of w; right factor (m x m) from the accumulated rotations.
    Matrix left(h, m);
    Matrix right(m, m);
    Vector sigma(m);
    std::size_t filled = 0;
    std::vector<std::size_t> zero_cols;
    for (std::size_t jj = 0; jj < m; ++jj) {
        const std::size_t src = order[jj];
        sigma[jj] = sig[src];
        for (std::size_t i = 0; i < m; ++i) right(i, jj) = vwork(src, i);
        if (sig[src] > 0.0) {
            const double inv = 1.0 / sig[src];
            for (std::size_t i = 0; i < h; ++i) left(i, jj) = w(src, i) * inv;
            filled = jj + 1;
        } else {
            zero_cols.push_back(jj);
        }
    }
    for (std::size_t col : zero_cols) {
        complete_column(left, col, filled);
        filled = std::max(filled, col + 1);
    }

    SvdFactors f;
    f.sigma = std::move(sigma);
    if (tall) {
        f.u = std::move(left);
        f.v = std::move(right);
    } else {
        f.u = std::move(right);
        f.v = std::move(left);
    }
    apply_sign_convention(f.u, f.v);
    return f;
}

double rank_cutoff(double sigma_max, std::size_t rows, std::size_t cols) {
    return std::numeric_limits<double>::epsilon() * sigma_max * static_cast<double>(std::max(rows, cols));
}

std::size_t numerical_rank(const Vector& sigma, std::size_t rows, std::size_t cols) {
    if (sigma.empty()) return 0;
    const double cutoff = rank_cutoff(sigma.front(), rows, cols);
    std::size_t r = 0;
    while (r < sigma.size() && sigma[r] > cutoff) ++r;
    return r;
}

struct DesignMatrix::Cache {
    std::once_flag flag;
    SvdFactors factors;
    bool ready = false;
};

DesignMatrix::DesignMatrix(Matrix x) : x_(std::move(x)), cache_(std::make_shared<Cache>()) {
    if (x_.rows() == 0 || x_.cols() == 0) throw std::invalid_argument("DesignMatrix: need at least one row and column");
    if (!all_finite(x_)) throw std::invalid_argument("DesignMatrix: entries must be finite");
}

const SvdFactors& DesignMatrix::svd() const {
    std::call_once(cache_->flag, [this] {
        cache_->factors = sketchreg::svd(x_);
        cache_->ready = true;
    });
    return cache_->factors;
}

bool DesignMatrix::svd_cached() const { return cache_ && cache_->ready; }

namespace {

Matrix take_columns(const Matrix& a, std::size_t j0, std::size_t j1) {
    Matrix out(a.rows(), j1 - j0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = j0; j < j1; ++j) out(i, j - j0) = a(i, j);
    return out;
}

}  // namespace

SpectralPartition partition(const SvdFactors& f, std::size_t r) {
    const std::size_t m = f.width();
    if (r < 1 || r > m) throw std::invalid_argument("partition: truncation level out of range");
    SpectralPartition p;
    p.r = r;
    p.u_head = take_columns(f.u, 0, r);
    p.v_head = take_columns(f.v, 0, r);
    p.sigma_head.assign(f.sigma.begin(), f.sigma.begin() + static_cast<std::ptrdiff_t>(r));
    p.u_tail = take_columns(f.u, r, m);
    p.v_tail = take_columns(f.v, r, m);
    p.sigma_tail.assign(f.sigma.begin() + static_cast<std::ptrdiff_t>(r), f.sigma.end());
    return p;
}

TruncationResult truncate(const SvdFactors& f, std::size_t r) {
    const std::size_t m = f.width();
    if (r < 1 || r > m) throw std::invalid_argument("truncate: rank out of range");
    const std::size_t n = f.u.rows();
    const std::size_t d = f.v.rows();

    const auto scaled_block = [&](std::size_t j0, std::size_t j1) {
        Matrix us(n, j1 - j0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = j0; j < j1; ++j) us(i, j - j0) = f.u(i, j) * f.sigma[j];
        return us;
    };

    TruncationResult out;
    out.truncated = matmul_nt(scaled_block(0, r), take_columns(f.v, 0, r));
    if (r < m) {
        out.residual = matmul_nt(scaled_block(r, m), take_columns(f.v, r, m));
    } else {
        out.residual = Matrix(n, d, 0.0);
    }
    return out;
}

double tail_energy_sq(const Vector& sigma, std::size_t r) {
    double acc = 0.0;
    for (std::size_t j = r; j < sigma.size(); ++j) acc += sigma[j] * sigma[j];
    return acc;
}

TailEnergy::TailEnergy(Vector gamma, Vector tau, double scale)
    : gamma_(std::move(gamma)), tau_(std::move(tau)), scale_(scale) {}

TailEnergy tail_energy(const SvdFactors& f, std::size_t n, std::size_t d) { return tail_energy(f.sigma, n, d); }

TailEnergy tail_energy(const Vector& sigma, std::size_t n, std::size_t d) {
    const std::size_t m = sigma.size();
    Vector gamma(m + 1, 0.0);
    for (std::size_t s = 1; s <= m; ++s) gamma[s] = gamma[s - 1] + sigma[s - 1] * sigma[s - 1];
    const double scale = gamma[m];
    const double expected = static_cast<double>(n) * static_cast<double>(d);
    if (std::abs(scale - expected) > 1e-8 * expected) throw SpectrumScalingError(scale, expected);
    Vector tau(m + 1, 0.0);
    for (std::size_t s = 0; s <= m; ++s) tau[s] = (scale - gamma[s]) / scale;
    return TailEnergy(std::move(gamma), std::move(tau), scale);
}

Vector OrthoBasis::coefficients(const Vector& y) const {
    Vector c(rank_);
    for (std::size_t j = 0; j < rank_; ++j) c[j] = kernels::dot(basis_row(j), y.data(), dim_);
    return c;
}

void OrthoBasis::project_inplace(Vector& y) const {
    const Vector c = coefficients(y);
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t j = 0; j < rank_; ++j) kernels::axpy(c[j], basis_row(j), y.data(), dim_);
}

Vector OrthoBasis::project(const Vector& y) const {
    Vector out = y;
    project_inplace(out);
    return out;
}

void OrthoBasis::remove_projection(Vector& y) const {
    for (std::size_t j = 0; j < rank_; ++j) {
        const double c = kernels::dot(basis_row(j), y.data(), dim_);
        kernels::axpy(-c, basis_row(j), y.data(), dim_);
    }
}

Vector OrthoBasis::residual(const Vector& y) const {
    Vector out = y;
    remove_projection(out);
    return out;
}

double OrthoBasis::residual_norm_sq(const Vector& y) const {
    Vector r = residual(y);
    return norm2_sq(r);
}

Matrix OrthoBasis::project_columns(const Matrix& y) const {
    if (y.rows() != dim_) throw std::invalid_argument("project_columns: dimension mismatch");
    const Matrix qt = to_matrix();
    if (rank_ == 0) return Matrix(y.rows(), y.cols(), 0.0);
    const Matrix coeffs = matmul(qt, y);
    return matmul_tn(qt, coeffs);
}

bool OrthoBasis::append_column(Vector v, double dependence_tol) {
    if (v.size() != dim_) throw std::invalid_argument("append_column: dimension mismatch");
    const double orig = norm2(v);
    if (!(orig > 0.0)) return false;
    remove_projection(v);
    remove_projection(v);
    const double nrm = norm2(v);
    if (nrm <= dependence_tol * orig) return false;
    const double inv = 1.0 / nrm;
    storage_.reserve(storage_.size() + dim_);
    for (double x : v) storage_.push_back(x * inv);
    ++rank_;
    return true;
}

Matrix OrthoBasis::to_matrix() const {
    Matrix out(rank_, dim_);
    std::copy(storage_.begin(), storage_.end(), out.data().begin());
    return out;
}

OrthoBasis orthonormal_basis(const Matrix& m) {
    const std::size_t n = m.rows();
    const std::size_t c = m.cols();
    if (n == 0) throw std::invalid_argument("orthonormal_basis: empty matrix");
    // Householder QR with column pivoting on w = m^T (rows are columns).
    Matrix w = transpose(m);
    const std::size_t steps = std::min(n, c);
    std::vector<Vector> reflectors;
    std::vector<double> taus;
    reflectors.reserve(steps);

    double r00 = 0.0;
    std::size_t rank = 0;
    for (std::size_t t = 0; t < steps; ++t) {
        // pivot: remaining column (= w row) with largest trailing norm
        std::size_t pivot = t;
        double best = kernels::sumsq(w.row(t) + t, n - t);
        for (std::size_t j = t + 1; j < c; ++j) {
            const double nrm = kernels::sumsq(w.row(j) + t, n - t);
            if (nrm > best) {
                best = nrm;
                pivot = j;
            }
        }
        const double colnorm = std::sqrt(best);
        if (t == 0) r00 = colnorm;
        if (colnorm <= rank_cutoff(r00, n, c) || colnorm == 0.0) break;
        if (pivot != t) {
            for (std::size_t i = 0; i < n; ++i) std::swap(w(t, i), w(pivot, i));
        }
        // Householder vector for the trailing part of row t
        Vector v(w.row(t) + t, w.row(t) + n);
        const double alpha = v[0] >= 0.0 ? -colnorm : colnorm;
        v[0] -= alpha;
        const double vss = norm2_sq(v);
        if (vss == 0.0) {
            // already aligned with the canonical direction
            reflectors.emplace_back(std::move(v));
            taus.push_back(0.0);
        } else {
            const double tau = 2.0 / vss;
            for (std::size_t j = t; j < c; ++j) {
                double* rowj = w.row(j) + t;
                const double coef = tau * kernels::dot(v.data(), rowj, n - t);
                kernels::axpy(-coef, v.data(), rowj, n - t);
            }
            w(t, t) = alpha;
            for (std::size_t i = t + 1; i < n; ++i) w(t, i) = 0.0;
            reflectors.emplace_back(std::move(v));
            taus.push_back(tau);
        }
        rank = t + 1;
    }

    // Q columns: reflectors applied in reverse to the canonical basis.
    OrthoBasis basis(n);
    for (std::size_t j = 0; j < rank; ++j) {
        Vector q(n, 0.0);
        q[j] = 1.0;
        for (std::size_t t = rank; t-- > 0;) {
            if (taus[t] == 0.0) continue;
            const Vector& v = reflectors[t];
            double* tail = q.data() + t;
            const double coef = taus[t] * kernels::dot(v.data(), tail, n - t);
            kernels::axpy(-coef, v.data(), tail, n - t);
        }
        basis.append_column(std::move(q));
    }
    return basis;
}

Matrix project_onto_colspace(const Matrix& m, const Matrix& y) {
    if (m.rows() != y.rows()) throw std::invalid_argument("project_onto_colspace: row counts differ");
    return orthonormal_basis(m).project_columns(y);
}

Vector least_squares_min_norm(const Matrix& a, const Vector& y) {
    if (a.rows() != y.size()) throw std::invalid_argument("least_squares_min_norm: dimension mismatch");
    const SvdFactors f = svd(a);
    const std::size_t rank = numerical_rank(f.sigma, a.rows(), a.cols());
    Vector coeff(f.width(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        kernels::axpy(y[i], f.u.row(i), coeff.data(), rank);
    }
    for (std::size_t j = 0; j < rank; ++j) coeff[j] /= f.sigma[j];
    Vector w(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) w[i] = kernels::dot(f.v.row(i), coeff.data(), rank);
    return w;
}

}  // namespace sketchreg
