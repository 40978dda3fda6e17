#pragma once

#include <complex>
#include <optional>
#include <string>

#include "hpo/errors.hpp"

namespace hpo {

using Complex = std::complex<double>;

/// Taxonomy of the bounded affine symbols. Classification is rule-based on
/// the exact stored parameters, never on a tolerance: the operator-theoretic
/// statements attached to each class are iff-statements in (a, b).
enum class SymbolClass {
    Identity,
    Parabolic,
    ParabolicAutomorphism,
    Hyperbolic,
    HyperbolicAutomorphism,
};

/// An affine self-map w -> a*w + b of the open right half-plane, restricted
/// to the bounded class a > 0, Re(b) >= 0. Exactly these maps induce bounded
/// composition operators on the Hardy space of the half-plane.
class AffineSymbol {
public:
    /// Throws UnboundedSymbol unless a > 0 and Re(b) >= 0.
    AffineSymbol(double a, Complex b);

    double a() const { return a_; }
    Complex b() const { return b_; }

    Complex operator()(Complex w) const { return a_ * w + b_; }

    bool is_identity() const { return a_ == 1.0 && b_ == Complex{}; }
    bool is_automorphism() const { return b_.real() == 0.0; }

    friend bool operator==(const AffineSymbol&, const AffineSymbol&) = default;

private:
    double a_;
    Complex b_;
};

/// Validating factory; throws UnboundedSymbol outside the bounded class.
AffineSymbol make_symbol(double a, Complex b);

/// (outer ∘ inner)(w) = outer(inner(w)); stays in the bounded class.
AffineSymbol compose(const AffineSymbol& outer, const AffineSymbol& inner);

/// Inverse map w -> w/a - b/a. Throws NotAutomorphism when Re(b) > 0, since
/// the inverse then leaves the bounded class.
AffineSymbol invert(const AffineSymbol& phi);

/// Factorization of the adjoint: C_phi^* = scale * C_psi with scale = 1/a and
/// psi(w) = w/a + conj(b)/a.
struct AdjointFactorization {
    double scale;
    AffineSymbol symbol;
};

AdjointFactorization adjoint_symbol(const AffineSymbol& phi);

/// Solution of phi(u) = u. `inside_domain` flags whether the point lies in
/// the open half-plane; for a > 1, Re(b) > 0 it does not, but the value is
/// still reported.
struct FixedPoint {
    Complex value;
    bool inside_domain;
};

/// Empty when a = 1: a non-trivial translation has no finite fixed point and
/// for the identity every point is fixed (report the class instead).
std::optional<FixedPoint> fixed_point(const AffineSymbol& phi);

SymbolClass classify_symbol(const AffineSymbol& phi);

std::string to_string(SymbolClass c);

} // namespace hpo
