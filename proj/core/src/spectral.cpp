#include "hpo/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <numbers>
#include <vector>

namespace hpo {

namespace {

constexpr double kPi = std::numbers::pi;

// Sampling radius for internal stabilized constructions. The 1/rho^k radius
// correction amplifies FFT rounding by rho^-L at order L; at 0.995 the noise
// stays below 1e-12 out to the stabilization cap, while the aliasing term
// rho^M still underflows for every admissible fft size.
constexpr double kInternalRadius = 0.995;

const std::vector<Complex>& twiddle_table(std::size_t n) {
    thread_local std::vector<Complex> table;
    thread_local std::size_t table_size = 0;
    if (table_size != n) {
        table.resize(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) {
            const double angle = -2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
            table[k] = Complex{std::cos(angle), std::sin(angle)};
        }
        table_size = n;
    }
    return table;
}

/// In-place iterative radix-2 forward DFT: x[k] <- sum_j x[j] exp(-2*pi*i*j*k/M).
/// Twiddles come from a precomputed table, so no rounding drift accumulates
/// across a stage.
void fft_inplace(std::vector<Complex>& x) {
    const std::size_t n = x.size();
    assert(std::has_single_bit(n));
    const int levels = std::countr_zero(n);
    const std::vector<Complex>& twiddles = twiddle_table(n);

    for (std::size_t i = 0; i < n; ++i) {
        std::size_t rev = 0;
        std::size_t v = i;
        for (int l = 0; l < levels; ++l) {
            rev = (rev << 1) | (v & 1u);
            v >>= 1;
        }
        if (rev > i) {
            std::swap(x[i], x[rev]);
        }
    }

    for (std::size_t size = 2; size <= n; size <<= 1) {
        const std::size_t half = size / 2;
        const std::size_t stride = n / size;
        for (std::size_t start = 0; start < n; start += size) {
            for (std::size_t k = 0; k < half; ++k) {
                const Complex t = x[start + k + half] * twiddles[k * stride];
                x[start + k + half] = x[start + k] - t;
                x[start + k] += t;
            }
        }
    }
}

int effective_fft_size(int min_order, int fft_size, double radius) {
    if (min_order < 1) {
        throw Error("matrix order must be >= 1");
    }
    if (fft_size < 4 * min_order) {
        throw Error("fft size must be at least 4x the matrix order");
    }
    // The aliasing term scales like radius^M; keep it at or below 1e-16.
    const int alias_floor = static_cast<int>(std::ceil(36.85 / -std::log(radius)));
    return static_cast<int>(std::bit_ceil(static_cast<unsigned>(std::max(fft_size, alias_floor))));
}

void check_radius(double radius) {
    if (!(radius > 0.0) || !(radius < 1.0)) {
        throw Error("sample radius must lie in (0, 1)");
    }
}

std::vector<Complex> circle_samples(int m, double radius) {
    std::vector<Complex> z(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double angle = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m);
        z[static_cast<std::size_t>(j)] = radius * Complex{std::cos(angle), std::sin(angle)};
    }
    return z;
}

/// Columns n = 0..n_cols-1 hold Taylor coefficients 0..n_rows-1 of
/// base(z) * factor(z)^n, extracted from samples on |z| = radius.
Eigen::MatrixXcd coefficient_block(const std::vector<Complex>& base,
                                   const std::vector<Complex>& factor, double radius, int n_rows,
                                   int n_cols) {
    const int m = static_cast<int>(base.size());
    Eigen::MatrixXcd entries(n_rows, n_cols);
    std::vector<Complex> current = base;
    std::vector<Complex> samples;
    for (int n = 0; n < n_cols; ++n) {
        samples = current;
        fft_inplace(samples);
        double radius_pow = 1.0;
        for (int k = 0; k < n_rows; ++k) {
            entries(k, n) = samples[static_cast<std::size_t>(k)] /
                            (static_cast<double>(m) * radius_pow);
            radius_pow *= radius;
        }
        if (n + 1 < n_cols) {
            for (int j = 0; j < m; ++j) {
                current[static_cast<std::size_t>(j)] *= factor[static_cast<std::size_t>(j)];
            }
        }
    }
    return entries;
}

/// Rectangular block of the composition matrix: entry (k, n) = k-th Taylor
/// coefficient of the disk-side transfer of C_phi e_n.
Eigen::MatrixXcd comp_block(const AffineSymbol& phi, int n_rows, int n_cols, int fft_size,
                            double radius) {
    check_radius(radius);
    const int m = effective_fft_size(std::max(n_rows, n_cols),
                                     std::max(fft_size, 4 * std::max(n_rows, n_cols)), radius);
    const std::vector<Complex> z = circle_samples(m, radius);

    std::vector<Complex> base(static_cast<std::size_t>(m));
    std::vector<Complex> factor(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Complex zj = z[static_cast<std::size_t>(j)];
        const Complex image = phi(cayley(zj));
        if (std::abs(1.0 + image) < 1e-12) {
            throw DegenerateSymbol("transferred symbol hit the Cayley pole on the sample circle");
        }
        base[static_cast<std::size_t>(j)] = 2.0 / ((1.0 + zj) * (1.0 + image));
        factor[static_cast<std::size_t>(j)] = cayley(image);
    }
    return coefficient_block(base, factor, radius, n_rows, n_cols);
}

Eigen::MatrixXcd wc_block(double c, int n_rows, int n_cols, int fft_size, double radius) {
    check_radius(radius);
    const int m = effective_fft_size(std::max(n_rows, n_cols),
                                     std::max(fft_size, 4 * std::max(n_rows, n_cols)), radius);
    const std::vector<Complex> z = circle_samples(m, radius);

    const double weight = std::sqrt(1.0 - c * c);
    std::vector<Complex> base(static_cast<std::size_t>(m));
    std::vector<Complex> factor(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Complex zj = z[static_cast<std::size_t>(j)];
        const Complex denom = 1.0 - c * zj;
        base[static_cast<std::size_t>(j)] = weight / denom;
        factor[static_cast<std::size_t>(j)] = (c - zj) / denom;
    }
    // The closing coefficient conjugation acts entrywise; the block is real
    // for real c, so conjugating the extracted entries is exact.
    return coefficient_block(base, factor, radius, n_rows, n_cols).conjugate();
}

Eigen::VectorXcd sign_diagonal(int n) {
    Eigen::VectorXcd signs(n);
    for (int k = 0; k < n; ++k) {
        signs(k) = (k % 2 == 0) ? 1.0 : -1.0;
    }
    return signs;
}

/// Rectangular block of the matrix of a ConjugationSpec, with the inner
/// product sums of Jr carried out at order `inner_order`.
Eigen::MatrixXcd spec_block(const ConjugationSpec& c, int n_rows, int n_cols, int inner_order,
                            int fft_size, double radius) {
    switch (c.tag()) {
        case ConjugationSpec::Tag::J:
            return Eigen::MatrixXcd::Identity(n_rows, n_cols);
        case ConjugationSpec::Tag::W0: {
            Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n_rows, n_cols);
            for (int k = 0; k < std::min(n_rows, n_cols); ++k) {
                out(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
            }
            return out;
        }
        case ConjugationSpec::Tag::Jr:
        case ConjugationSpec::Tag::Wab: {
            // Jr = C_{tau^-1} W0 C_tau with tau(w) = w - i r; the middle
            // conjugate-linear factor conjugates everything to its right.
            const Complex shift{0.0, -c.r()};
            const AffineSymbol tau(1.0, shift);
            const AffineSymbol tau_inv(1.0, -shift);
            const Eigen::MatrixXcd left = comp_block(tau_inv, n_rows, inner_order, fft_size, radius);
            const Eigen::MatrixXcd right = comp_block(tau, inner_order, n_cols, fft_size, radius);
            return left * sign_diagonal(inner_order).asDiagonal() * right.conjugate();
        }
        case ConjugationSpec::Tag::Ua: {
            const double a = c.dilation();
            return comp_block(AffineSymbol(1.0 / a, 0.0), n_rows, n_cols, fft_size, radius) /
                   std::sqrt(a);
        }
    }
    throw Error("unreachable conjugation tag");
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

Complex basis_eval(int n, Complex w) {
    if (!(w.real() > 0.0)) {
        throw OutsideDomain("basis function evaluated outside the open right half-plane");
    }
    const Complex ratio = cayley(w);
    Complex power{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        power *= ratio;
    }
    return std::numbers::sqrt2 / (1.0 + w) * power;
}

TruncatedOperator composition_matrix(const AffineSymbol& phi, int order, int fft_size,
                                     double radius) {
    TruncatedOperator op;
    op.order = order;
    op.kind = OperatorKind::Linear;
    op.meta = {effective_fft_size(order, fft_size, radius), radius};
    op.entries = comp_block(phi, order, order, fft_size, radius);
    return op;
}

Eigen::MatrixXcd composition_block(const AffineSymbol& phi, int n_rows, int n_cols, int fft_size,
                                   double radius) {
    return comp_block(phi, n_rows, n_cols, fft_size, radius);
}

TruncatedOperator conjugation_matrix(const ConjugationSpec& c, int order, int fft_size,
                                     double radius) {
    check_radius(radius);
    TruncatedOperator op;
    op.order = order;
    op.kind = OperatorKind::ConjugateLinear;
    op.meta = {effective_fft_size(order, fft_size, radius), radius};

    switch (c.tag()) {
        case ConjugationSpec::Tag::J:
        case ConjugationSpec::Tag::W0:
        case ConjugationSpec::Tag::Ua:
            // Entries are exact with no product truncation involved.
            op.entries = spec_block(c, order, order, order, fft_size, radius);
            break;
        case ConjugationSpec::Tag::Jr:
        case ConjugationSpec::Tag::Wab:
            // The composition-conjugation-composition sum is widened until
            // the reported block stops moving.
            op.entries = stabilized_block(
                [&](int inner) {
                    return spec_block(c, order, order, inner, fft_size, kInternalRadius);
                },
                2 * order);
            break;
    }
    return op;
}

TruncatedOperator wc_conjugation_matrix(double c, int order, int fft_size, double radius) {
    if (!(c > -1.0) || !(c < 1.0)) {
        throw Error("Wc parameter must lie in (-1, 1)");
    }
    TruncatedOperator op;
    op.order = order;
    op.kind = OperatorKind::ConjugateLinear;
    op.meta = {effective_fft_size(order, fft_size, radius), radius};
    op.entries = wc_block(c, order, order, fft_size, radius);
    return op;
}

ConjugationMatrixDefects conjugation_matrix_checks(const TruncatedOperator& a) {
    if (a.kind != OperatorKind::ConjugateLinear) {
        throw Error("conjugation_matrix_checks expects a conjugate-linear matrix");
    }
    const int half = std::max(1, a.order / 2);
    const Eigen::MatrixXcd sym = a.entries - a.entries.transpose();
    const Eigen::MatrixXcd gram = a.entries.adjoint() * a.entries -
                                  Eigen::MatrixXcd::Identity(a.order, a.order);
    return {max_abs(sym.topLeftCorner(half, half)), max_abs(gram.topLeftCorner(half, half))};
}

Eigen::MatrixXcd stabilized_block(const std::function<Eigen::MatrixXcd(int)>& build,
                                  int start_order, double tol, int max_order) {
    Eigen::MatrixXcd previous = build(start_order);
    for (int order = 2 * start_order; order <= max_order; order *= 2) {
        Eigen::MatrixXcd current = build(order);
        if (max_abs(current - previous) <= tol) {
            return current;
        }
        previous = std::move(current);
    }
    throw NoConvergence("truncated block did not stabilize below the doubling cap");
}

ConjugationMatrixDefects conjugation_defects(const ConjugationSpec& c, int order) {
    const int block = std::max(1, order / 2);
    const int fft = 4 * order;

    const Eigen::MatrixXcd sym_block = stabilized_block(
        [&](int inner) {
            const Eigen::MatrixXcd a = spec_block(c, block, block, inner, fft, kInternalRadius);
            return (a - a.transpose()).eval();
        },
        std::max(2 * order, 2 * block), 1e-9);

    const Eigen::MatrixXcd gram_block = stabilized_block(
        [&](int rows) {
            const Eigen::MatrixXcd cols = spec_block(c, rows, block, rows, 4 * rows,
                                                     kInternalRadius);
            return (cols.adjoint() * cols - Eigen::MatrixXcd::Identity(block, block)).eval();
        },
        std::max(2 * order, 2 * block), 1e-9);

    return {max_abs(sym_block), max_abs(gram_block)};
}

ConjugationMatrixDefects wc_conjugation_defects(double c, int order) {
    if (!(c > -1.0) || !(c < 1.0)) {
        throw Error("Wc parameter must lie in (-1, 1)");
    }
    const int block = std::max(1, order / 2);
    const Eigen::MatrixXcd sym = wc_block(c, block, block, 4 * order, kInternalRadius);
    const double symmetry = max_abs(sym - sym.transpose());

    const Eigen::MatrixXcd gram_block = stabilized_block(
        [&](int rows) {
            const Eigen::MatrixXcd cols = wc_block(c, rows, block, 4 * rows, kInternalRadius);
            return (cols.adjoint() * cols - Eigen::MatrixXcd::Identity(block, block)).eval();
        },
        std::max(2 * order, 2 * block), 1e-9);

    return {symmetry, max_abs(gram_block)};
}

double csym_matrix_residual(const AffineSymbol& phi, const ConjugationSpec& c, int order,
                            int fft_size, double radius) {
    (void)radius;
    const Eigen::MatrixXcd product = stabilized_block(
        [&](int inner) {
            const Eigen::MatrixXcd comp_rows =
                comp_block(phi, order, inner, fft_size, kInternalRadius);
            const Eigen::MatrixXcd conj_cols =
                spec_block(c, inner, order, inner, fft_size, kInternalRadius);
            return (comp_rows * conj_cols).eval();
        },
        2 * order, 1e-9);
    return max_abs(product - product.transpose());
}

double cohypo_matrix_residual(const AffineSymbol& phi, int order, int fft_size, double radius) {
    (void)radius;
    const Eigen::MatrixXcd h = stabilized_block(
        [&](int inner) {
            const Eigen::MatrixXcd rows = comp_block(phi, order, inner, fft_size, kInternalRadius);
            const Eigen::MatrixXcd cols = comp_block(phi, inner, order, fft_size, kInternalRadius);
            return (rows * rows.adjoint() - cols.adjoint() * cols).eval();
        },
        2 * order, 1e-9);
    return hermitian_min_eig(h);
}

double hermitian_min_eig(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw Error("hermitian_min_eig expects a nonempty square matrix");
    }
    const double defect = max_abs(h - h.adjoint());
    if (defect > 1e-10) {
        throw Error("matrix is not Hermitian within 1e-10");
    }
    const Eigen::MatrixXcd sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("Hermitian eigensolver did not converge");
    }
    const double lambda = solver.eigenvalues()(0);
    const Eigen::VectorXcd v = solver.eigenvectors().col(0);
    const double residual = (sym * v - lambda * v).norm();
    const double scale = std::max(sym.norm(), 1e-300);
    if (residual > 1e-9 * scale) {
        throw NoConvergence("Hermitian eigensolver residual guarantee not met");
    }
    return lambda;
}

double boundary_norm_quadrature(const std::function<Complex(Complex)>& f, double x, int n_nodes) {
    if (!(x > 0.0)) {
        throw OutsideDomain("the vertical line must lie in the open half-plane (x > 0)");
    }
    if (n_nodes < 2) {
        throw Error("quadrature needs at least 2 nodes");
    }

    // 16-point Gauss-Legendre nodes on [-1, 1] via Newton on the recurrence.
    constexpr int kPanelOrder = 16;
    static const auto rule = [] {
        std::array<std::pair<double, double>, kPanelOrder> nw{};
        for (int i = 0; i < kPanelOrder; ++i) {
            double t = std::cos(kPi * (i + 0.75) / (kPanelOrder + 0.5));
            double deriv = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = t;
                for (int k = 2; k <= kPanelOrder; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                deriv = kPanelOrder * (t * p1 - p0) / (t * t - 1.0);
                const double step = p1 / deriv;
                t -= step;
                if (std::abs(step) < 1e-15) {
                    break;
                }
            }
            nw[static_cast<std::size_t>(i)] = {t, 2.0 / ((1.0 - t * t) * deriv * deriv)};
        }
        return nw;
    }();

    const int panels = std::max(1, (n_nodes + kPanelOrder - 1) / kPanelOrder);
    const double theta_lo = -kPi / 2.0;
    const double theta_width = kPi / static_cast<double>(panels);

    double integral = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = theta_lo + p * theta_width;
        const double mid = a + 0.5 * theta_width;
        const double halfw = 0.5 * theta_width;
        double panel_sum = 0.0;
        for (const auto& [node, weight] : rule) {
            const double theta = mid + halfw * node;
            const double tan_theta = std::tan(theta);
            const double sec_sq = 1.0 + tan_theta * tan_theta;
            const Complex value = f(Complex{x, tan_theta});
            if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) ||
                std::abs(value) > 1e150) {
                throw QuadratureDivergence("sample exceeded the overflow guard");
            }
            panel_sum += weight * std::norm(value) * sec_sq;
        }
        integral += halfw * panel_sum;
    }
    return integral / (2.0 * kPi);
}

double matrix_vs_kernel_crosscheck(const AffineSymbol& phi, int order,
                                   std::span<const std::pair<HalfPlanePoint, HalfPlanePoint>> pairs,
                                   int fft_size, double radius) {
    const Eigen::MatrixXcd comp = comp_block(phi, order, order, fft_size, radius);
    double worst = 0.0;
    for (const auto& [u, v] : pairs) {
        const KernelCombo image = apply_forward(phi, KernelCombo::single(1.0, u.value()));
        const Complex exact = inner(image, KernelCombo::single(1.0, v.value()));
        Eigen::VectorXcd cu(order);
        Eigen::VectorXcd cv(order);
        for (int n = 0; n < order; ++n) {
            cu(n) = std::conj(basis_eval(n, u.value()));
            cv(n) = std::conj(basis_eval(n, v.value()));
        }
        const Complex approx = cv.dot(comp * cu);  // Eigen dot conjugates the left factor
        worst = std::max(worst, std::abs(exact - approx));
    }
    return worst;
}

} // namespace hpo
