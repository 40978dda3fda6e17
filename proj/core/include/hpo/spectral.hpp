#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hpo/kernel.hpp"
#include "hpo/lfmap.hpp"

namespace hpo {

/// The Cayley map z -> (1-z)/(1+z), a self-inverse bijection between the
/// unit disk and the right half-plane.
inline Complex cayley(Complex z) { return (1.0 - z) / (1.0 + z); }

/// n-th element of the transferred orthonormal basis e_n = V z^n:
/// e_n(w) = sqrt(2)/(1+w) * cayley(w)^n. Throws OutsideDomain for Re(w) <= 0.
Complex basis_eval(int n, Complex w);

enum class OperatorKind { Linear, ConjugateLinear };

struct FftMeta {
    int fft_size;         ///< effective (power-of-two) sample count M
    double sample_radius; ///< rho, the radius of the sampling circle
};

/// N x N truncation of an operator in the basis e_n. Linear kind: entries[m][n]
/// approximates <T e_n, e_m>. Conjugate-linear kind: the operator acts on
/// coefficient vectors as c -> entries * conj(c).
struct TruncatedOperator {
    int order = 0;
    Eigen::MatrixXcd entries;
    OperatorKind kind = OperatorKind::Linear;
    FftMeta meta{0, 0.0};
};

/// Matrix of C_phi: column n holds the Taylor coefficients 0..N-1 of the
/// disk-side transfer G_n(z) = 2/((1+z)(1+phi(cayley(z)))) * cayley(phi(cayley(z)))^n,
/// extracted by sampling on |z| = radius and inverse DFT with radius
/// correction. Requires fft_size >= 4*order (rounded up to a power of two)
/// and radius in (0, 1); entries are exact up to aliasing O(radius^M).
TruncatedOperator composition_matrix(const AffineSymbol& phi, int order, int fft_size = 8192,
                                     double radius = 0.9);

/// Rectangular block of the same matrix: coefficient rows 0..n_rows-1 of
/// columns 0..n_cols-1. Lets Gram sums run over many more rows or columns
/// than the block being reported.
Eigen::MatrixXcd composition_block(const AffineSymbol& phi, int n_rows, int n_cols,
                                   int fft_size = 8192, double radius = 0.9);

/// Matrix of a ConjugationSpec in the basis e_n. J and W0 transfer exactly
/// (identity and diag((-1)^n)); Jr/Wab are assembled as a product of
/// composition matrices around the W0 diagonal; Ua is a scaled composition
/// matrix right-composed with J.
TruncatedOperator conjugation_matrix(const ConjugationSpec& c, int order, int fft_size = 8192,
                                     double radius = 0.9);

/// Matrix of the disk-side conjugation family with parameter c in (-1, 1):
/// column n holds the Taylor coefficients of
/// sqrt(1-c^2)/(1-c z) * ((c-z)/(1-c z))^n.
TruncatedOperator wc_conjugation_matrix(double c, int order, int fft_size = 8192,
                                        double radius = 0.9);

struct ConjugationMatrixDefects {
    double symmetry;   ///< max |A - A^T| on the leading N/2 block
    double unitarity;  ///< max |A^H A - I| on the leading N/2 block
};

/// A conjugate-linear map is a conjugation iff its matrix in an orthonormal
/// basis is symmetric and unitary; both defects are reported on the inner
/// half-block to suppress truncation tails.
ConjugationMatrixDefects conjugation_matrix_checks(const TruncatedOperator& a);

/// Evaluates `build(L)` (a fixed-size block computed from an order-L
/// construction) at doubling L until the block stops moving by more than
/// `tol`; throws NoConvergence at `max_order`. This is how every quantity
/// that sums over truncated matrix products is measured: truncation error is
/// observed, never assumed.
Eigen::MatrixXcd stabilized_block(const std::function<Eigen::MatrixXcd(int)>& build,
                                  int start_order, double tol = 1e-10, int max_order = 4096);

/// Conjugation-axiom defects of the (infinite) matrix of C, measured on the
/// leading order/2 block through stabilized truncations. Maps that dilate
/// coefficient index (Wc with large |c|, Ua) push column mass far beyond any
/// fixed truncation, so the Gram sums are widened until they converge.
ConjugationMatrixDefects conjugation_defects(const ConjugationSpec& c, int order);
ConjugationMatrixDefects wc_conjugation_defects(double c, int order);

/// max |P - P^T| on the leading N x N block of P = M_phi * A, both factors
/// built at order 2N. Small exactly when C_phi is C-symmetric.
double csym_matrix_residual(const AffineSymbol& phi, const ConjugationSpec& c, int order,
                            int fft_size = 8192, double radius = 0.9);

/// Smallest eigenvalue of the leading N x N block of M M^H - M^H M built from
/// a 2N x 2N matrix; nonnegative (up to truncation) iff C_phi is cohyponormal.
double cohypo_matrix_residual(const AffineSymbol& phi, int order, int fft_size = 8192,
                              double radius = 0.9);

/// Smallest eigenvalue of a Hermitian matrix (input symmetrized first; the
/// Hermiticity defect must be below 1e-10). Throws NoConvergence if the
/// solver fails or the residual guarantee |Hv - lambda v| <= 1e-9 |H| is not met.
double hermitian_min_eig(const Eigen::MatrixXcd& h);

/// (1/2pi) * integral over the vertical line Re = x of |f(x+iy)|^2 dy, via
/// y = tan(theta) and composite Gauss-Legendre with ~n_nodes nodes. The
/// independent norm oracle against the Gram algebra.
double boundary_norm_quadrature(const std::function<Complex(Complex)>& f, double x, int n_nodes);

/// max over pairs (u, v) of |<C_phi K_u, K_v>_exact - c(v)^H M c(u)| with
/// c_n(u) = conj(e_n(u)) truncated at the matrix order; pure truncation error
/// for interior points.
double matrix_vs_kernel_crosscheck(const AffineSymbol& phi, int order,
                                   std::span<const std::pair<HalfPlanePoint, HalfPlanePoint>> pairs,
                                   int fft_size = 8192, double radius = 0.9);

} // namespace hpo
