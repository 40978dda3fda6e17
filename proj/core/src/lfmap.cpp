#include "hpo/lfmap.hpp"

#include <cassert>
#include <sstream>

namespace hpo {

namespace {

std::string describe(double a, Complex b) {
    std::ostringstream os;
    os << "a=" << a << ", b=" << b.real();
    if (b.imag() >= 0.0) {
        os << "+" << b.imag() << "i";
    } else {
        os << b.imag() << "i";
    }
    return os.str();
}

} // namespace

AffineSymbol::AffineSymbol(double a, Complex b) : a_(a), b_(b) {
    if (!(a > 0.0) || !(b.real() >= 0.0)) {
        throw UnboundedSymbol("symbol outside the bounded class (need a > 0, Re(b) >= 0): " +
                              describe(a, b));
    }
}

AffineSymbol make_symbol(double a, Complex b) {
    return AffineSymbol(a, b);
}

AffineSymbol compose(const AffineSymbol& outer, const AffineSymbol& inner) {
    // outer(inner(w)) = a1*(a2*w + b2) + b1
    const double a = outer.a() * inner.a();
    const Complex b = outer.a() * inner.b() + outer.b();
    assert(a > 0.0 && b.real() >= 0.0);
    return AffineSymbol(a, b);
}

AffineSymbol invert(const AffineSymbol& phi) {
    if (phi.b().real() > 0.0) {
        throw NotAutomorphism("symbol has Re(b) > 0; its inverse is not a self-map of the half-plane");
    }
    return AffineSymbol(1.0 / phi.a(), -phi.b() / phi.a());
}

AdjointFactorization adjoint_symbol(const AffineSymbol& phi) {
    const double inv_a = 1.0 / phi.a();
    return {inv_a, AffineSymbol(inv_a, std::conj(phi.b()) * inv_a)};
}

std::optional<FixedPoint> fixed_point(const AffineSymbol& phi) {
    if (phi.a() == 1.0) {
        return std::nullopt;
    }
    const Complex u = phi.b() / (1.0 - phi.a());
    return FixedPoint{u, u.real() > 0.0};
}

SymbolClass classify_symbol(const AffineSymbol& phi) {
    if (phi.is_identity()) {
        return SymbolClass::Identity;
    }
    if (phi.a() == 1.0) {
        return phi.is_automorphism() ? SymbolClass::ParabolicAutomorphism : SymbolClass::Parabolic;
    }
    return phi.is_automorphism() ? SymbolClass::HyperbolicAutomorphism : SymbolClass::Hyperbolic;
}

std::string to_string(SymbolClass c) {
    switch (c) {
        case SymbolClass::Identity: return "identity";
        case SymbolClass::Parabolic: return "parabolic";
        case SymbolClass::ParabolicAutomorphism: return "parabolic_automorphism";
        case SymbolClass::Hyperbolic: return "hyperbolic";
        case SymbolClass::HyperbolicAutomorphism: return "hyperbolic_automorphism";
    }
    return "unknown";
}

} // namespace hpo
