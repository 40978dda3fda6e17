#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hpo/errors.hpp"
#include "hpo/lfmap.hpp"

namespace hpo {

/// A point of the open right half-plane, Re > 0.
class HalfPlanePoint {
public:
    /// Throws OutsideDomain unless Re(value) > 0.
    explicit HalfPlanePoint(Complex value);

    Complex value() const { return value_; }

private:
    Complex value_;
};

/// coeff * K_point, with K_u(w) = 1/(conj(u) + w). The inner product is
/// normalized so that this kernel is exactly reproducing: <f, K_u> = f(u).
struct ScaledKernel {
    Complex coeff;
    HalfPlanePoint point;
};

/// A finite sum of scaled kernels, the exact-arithmetic function
/// representation of the toolkit. Kept in normal form: terms whose points
/// coincide within 1e-12 are merged and exactly-zero coefficients dropped.
/// The empty combo is the zero function. Immutable value type.
class KernelCombo {
public:
    KernelCombo() = default;
    explicit KernelCombo(std::vector<ScaledKernel> terms);

    static KernelCombo single(Complex coeff, Complex point);

    const std::vector<ScaledKernel>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    KernelCombo operator+(const KernelCombo& other) const;
    KernelCombo operator-(const KernelCombo& other) const;
    KernelCombo operator*(Complex scale) const;

private:
    std::vector<ScaledKernel> terms_;
};

/// Tagged description of the conjugate-linear maps used as complex-symmetry
/// certificates. Every tag except Ua is a conjugation (involutive
/// antiunitary); Ua is an isometric conjugate-linear map that fails the
/// involution axiom.
///
/// Kernel actions (conjugate-linear, so C(c*K_u) = conj(c)*C(K_u)):
///   J       : K_u -> K_{conj(u)}
///   W0      : K_u -> (1/u) * K_{1/conj(u)}
///   Jr(r)   : K_u -> (1/(u+ir)) * K_{1/(conj(u)-ir) - ir}
///   Wab(a,b): the Jr with r = Im(b)/(a-1)
///   Ua(a)   : K_u -> sqrt(a) * K_{a*conj(u)}
class ConjugationSpec {
public:
    enum class Tag { J, W0, Jr, Wab, Ua };

    static ConjugationSpec j();
    static ConjugationSpec w0();
    static ConjugationSpec jr(double r);
    /// Requires a != 1 and Re(b) == 0; reduces to jr(Im(b)/(a-1)).
    static ConjugationSpec wab(double a, Complex b);
    /// Requires a > 0. Not a conjugation.
    static ConjugationSpec ua(double a);

    Tag tag() const { return tag_; }
    bool is_conjugation() const { return tag_ != Tag::Ua; }

    /// Translation parameter for Jr (and the reduced Wab).
    double r() const { return r_; }
    /// Dilation parameter for Ua.
    double dilation() const { return dilation_; }

    std::string name() const;

private:
    ConjugationSpec(Tag tag, double r, double dilation)
        : tag_(tag), r_(r), dilation_(dilation) {}

    Tag tag_;
    double r_ = 0.0;
    double dilation_ = 1.0;
};

/// K_u(w) = 1/(conj(u) + w). Throws OutsideDomain when Re(w) <= 0.
Complex kernel_eval(const HalfPlanePoint& u, Complex w);

/// Pointwise evaluation of a combo; same domain restriction as kernel_eval.
Complex combo_eval(const KernelCombo& f, Complex w);

/// Exact Gram inner product: <sum c_j K_{u_j}, sum d_i K_{v_i}> =
/// sum_{i,j} c_j * conj(d_i) * K_{u_j}(v_i).
Complex inner(const KernelCombo& f, const KernelCombo& g);

/// Norm induced by inner(); the tiny negative rounding floor is clamped.
double combo_norm(const KernelCombo& f);

/// C_phi acting on kernels: c*K_u -> (c/a) * K_{(u + conj(b))/a}.
KernelCombo apply_forward(const AffineSymbol& phi, const KernelCombo& f);

/// C_phi^* acting on kernels: c*K_u -> c * K_{phi(u)}.
KernelCombo apply_adjoint(const AffineSymbol& phi, const KernelCombo& f);

/// Conjugate-linear action of a ConjugationSpec, term by term.
KernelCombo apply_conjugation(const ConjugationSpec& c, const KernelCombo& f);

struct ConjugationAxiomResiduals {
    double involution;     ///< max over samples of |C(C(f)) - f| / max(1, |f|)
    double antiunitarity;  ///< max over sample pairs of |<Cf, Cg> - <g, f>|
};

ConjugationAxiomResiduals conjugation_axiom_residuals(const ConjugationSpec& c,
                                                      std::span<const KernelCombo> samples);

/// max over u of |(C ∘ C_phi^* ∘ C)(K_u) - C_phi(K_u)| / |K_u|; zero (to
/// rounding) exactly when C_phi is C-symmetric. C must be a conjugation tag.
double symmetry_residual(const AffineSymbol& phi, const ConjugationSpec& c,
                         std::span<const HalfPlanePoint> points);

/// |C_phi^* f|^2 - |C_phi f|^2, computed exactly via Gram algebra. Negative
/// values witness failure of cohyponormality.
double cohypo_quadratic_form(const AffineSymbol& phi, const KernelCombo& f);

struct CohypoWitness {
    std::vector<HalfPlanePoint> points;
    std::vector<Complex> coeffs;  ///< minimizing eigenvector over the span
    double value;                 ///< minimal quadratic-form value, < 0
};

/// Builds the Hermitian form D[i][j] = <C*K_{u_j}, C*K_{u_i}> - <CK_{u_j}, CK_{u_i}>
/// over seeded random points (the fixed point of phi is always included when
/// it lies in the open half-plane) and reports the minimizing direction if
/// the smallest eigenvalue is below -1e-12.
std::optional<CohypoWitness> cohypo_witness_search(const AffineSymbol& phi, int n_points,
                                                   std::uint64_t seed);

/// max over u of |apply_adjoint(phi, K_u) - scale * apply_forward(psi, K_u)| / |K_u|
/// with (scale, psi) = adjoint_symbol(phi).
double adjoint_formula_residual(const AffineSymbol& phi, std::span<const HalfPlanePoint> points);

/// max over u of |U_a(C_phi(U_a(K_u))) - C_phi^*(K_u)| / |K_u| for the
/// symbol (a, b).
double ua_relation_residual(double a, Complex b, std::span<const HalfPlanePoint> points);

} // namespace hpo
