#include "hpo/kernel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "hpo/sampling.hpp"

namespace hpo {

namespace {

constexpr double kMergeDistance = 1e-12;
constexpr Complex kImagUnit{0.0, 1.0};

/// Absolute Gram mass, the natural magnitude scale for rounding guards.
[[maybe_unused]] double gram_abs_mass(const KernelCombo& f) {
    double mass = 0.0;
    for (const auto& ti : f.terms()) {
        for (const auto& tj : f.terms()) {
            mass += std::abs(ti.coeff) * std::abs(tj.coeff) *
                    std::abs(kernel_eval(tj.point, ti.point.value()));
        }
    }
    return mass;
}

double real_norm_sq(const KernelCombo& f) {
    const Complex v = inner(f, f);
    assert(std::abs(v.imag()) <= 1e-14 * std::max(1.0, gram_abs_mass(f)));
    return std::max(0.0, v.real());
}

} // namespace

HalfPlanePoint::HalfPlanePoint(Complex value) : value_(value) {
    if (!(value.real() > 0.0)) {
        std::ostringstream os;
        os << "point " << value.real() << "+" << value.imag() << "i is not in the open right half-plane";
        throw OutsideDomain(os.str());
    }
}

KernelCombo::KernelCombo(std::vector<ScaledKernel> terms) {
    terms_.reserve(terms.size());
    for (const auto& t : terms) {
        bool merged = false;
        for (auto& existing : terms_) {
            if (std::abs(existing.point.value() - t.point.value()) < kMergeDistance) {
                existing.coeff += t.coeff;
                merged = true;
                break;
            }
        }
        if (!merged) {
            terms_.push_back(t);
        }
    }
    std::erase_if(terms_, [](const ScaledKernel& t) { return t.coeff == Complex{}; });
}

KernelCombo KernelCombo::single(Complex coeff, Complex point) {
    return KernelCombo({ScaledKernel{coeff, HalfPlanePoint(point)}});
}

KernelCombo KernelCombo::operator+(const KernelCombo& other) const {
    std::vector<ScaledKernel> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return KernelCombo(std::move(all));
}

KernelCombo KernelCombo::operator-(const KernelCombo& other) const {
    return *this + other * Complex{-1.0, 0.0};
}

KernelCombo KernelCombo::operator*(Complex scale) const {
    std::vector<ScaledKernel> scaled = terms_;
    for (auto& t : scaled) {
        t.coeff *= scale;
    }
    return KernelCombo(std::move(scaled));
}

ConjugationSpec ConjugationSpec::j() { return {Tag::J, 0.0, 1.0}; }

ConjugationSpec ConjugationSpec::w0() { return {Tag::W0, 0.0, 1.0}; }

ConjugationSpec ConjugationSpec::jr(double r) { return {Tag::Jr, r, 1.0}; }

ConjugationSpec ConjugationSpec::wab(double a, Complex b) {
    if (a == 1.0 || b.real() != 0.0) {
        throw Error("Wab requires a != 1 and Re(b) = 0");
    }
    return {Tag::Wab, b.imag() / (a - 1.0), 1.0};
}

ConjugationSpec ConjugationSpec::ua(double a) {
    if (!(a > 0.0)) {
        throw Error("Ua requires a > 0");
    }
    return {Tag::Ua, 0.0, a};
}

std::string ConjugationSpec::name() const {
    std::ostringstream os;
    switch (tag_) {
        case Tag::J: return "J";
        case Tag::W0: return "W0";
        case Tag::Jr: os << "Jr(" << r_ << ")"; break;
        case Tag::Wab: os << "Wab->Jr(" << r_ << ")"; break;
        case Tag::Ua: os << "Ua(" << dilation_ << ")"; break;
    }
    return os.str();
}

Complex kernel_eval(const HalfPlanePoint& u, Complex w) {
    if (!(w.real() > 0.0)) {
        throw OutsideDomain("kernel evaluated outside the open right half-plane");
    }
    return 1.0 / (std::conj(u.value()) + w);
}

Complex combo_eval(const KernelCombo& f, Complex w) {
    Complex sum{};
    for (const auto& t : f.terms()) {
        sum += t.coeff * kernel_eval(t.point, w);
    }
    return sum;
}

Complex inner(const KernelCombo& f, const KernelCombo& g) {
    Complex sum{};
    for (const auto& gi : g.terms()) {
        for (const auto& fj : f.terms()) {
            sum += fj.coeff * std::conj(gi.coeff) * kernel_eval(fj.point, gi.point.value());
        }
    }
    return sum;
}

double combo_norm(const KernelCombo& f) {
    return std::sqrt(real_norm_sq(f));
}

KernelCombo apply_forward(const AffineSymbol& phi, const KernelCombo& f) {
    std::vector<ScaledKernel> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        const Complex point = (t.point.value() + std::conj(phi.b())) / phi.a();
        out.push_back({t.coeff / phi.a(), HalfPlanePoint(point)});
    }
    return KernelCombo(std::move(out));
}

KernelCombo apply_adjoint(const AffineSymbol& phi, const KernelCombo& f) {
    std::vector<ScaledKernel> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        out.push_back({t.coeff, HalfPlanePoint(phi(t.point.value()))});
    }
    return KernelCombo(std::move(out));
}

KernelCombo apply_conjugation(const ConjugationSpec& c, const KernelCombo& f) {
    std::vector<ScaledKernel> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        const Complex u = t.point.value();
        const Complex coeff = std::conj(t.coeff);
        switch (c.tag()) {
            case ConjugationSpec::Tag::J:
                out.push_back({coeff, HalfPlanePoint(std::conj(u))});
                break;
            case ConjugationSpec::Tag::W0:
                out.push_back({coeff / u, HalfPlanePoint(1.0 / std::conj(u))});
                break;
            case ConjugationSpec::Tag::Jr:
            case ConjugationSpec::Tag::Wab: {
                const Complex ir = kImagUnit * c.r();
                const Complex point = 1.0 / (std::conj(u) - ir) - ir;
                out.push_back({coeff / (u + ir), HalfPlanePoint(point)});
                break;
            }
            case ConjugationSpec::Tag::Ua: {
                const double a = c.dilation();
                out.push_back({coeff * std::sqrt(a), HalfPlanePoint(a * std::conj(u))});
                break;
            }
        }
    }
    return KernelCombo(std::move(out));
}

ConjugationAxiomResiduals conjugation_axiom_residuals(const ConjugationSpec& c,
                                                      std::span<const KernelCombo> samples) {
    if (samples.empty()) {
        throw Error("conjugation_axiom_residuals needs at least one sample combo");
    }
    double involution = 0.0;
    for (const auto& f : samples) {
        const KernelCombo round_trip = apply_conjugation(c, apply_conjugation(c, f));
        const double defect = combo_norm(round_trip - f) / std::max(1.0, combo_norm(f));
        involution = std::max(involution, defect);
    }

    double antiunitarity = 0.0;
    std::vector<KernelCombo> images;
    images.reserve(samples.size());
    for (const auto& f : samples) {
        images.push_back(apply_conjugation(c, f));
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = 0; j < samples.size(); ++j) {
            const Complex lhs = inner(images[i], images[j]);
            const Complex rhs = inner(samples[j], samples[i]);
            antiunitarity = std::max(antiunitarity, std::abs(lhs - rhs));
        }
    }
    return {involution, antiunitarity};
}

double symmetry_residual(const AffineSymbol& phi, const ConjugationSpec& c,
                         std::span<const HalfPlanePoint> points) {
    if (!c.is_conjugation()) {
        throw Error("symmetry_residual requires a conjugation tag, not Ua");
    }
    if (points.empty()) {
        throw Error("symmetry_residual needs at least one point");
    }
    double residual = 0.0;
    for (const auto& u : points) {
        const KernelCombo k = KernelCombo::single(1.0, u.value());
        const KernelCombo lhs = apply_conjugation(c, apply_adjoint(phi, apply_conjugation(c, k)));
        const KernelCombo rhs = apply_forward(phi, k);
        residual = std::max(residual, combo_norm(lhs - rhs) / combo_norm(k));
    }
    return residual;
}

double cohypo_quadratic_form(const AffineSymbol& phi, const KernelCombo& f) {
    const double adjoint_sq = real_norm_sq(apply_adjoint(phi, f));
    const double forward_sq = real_norm_sq(apply_forward(phi, f));
    return adjoint_sq - forward_sq;
}

std::optional<CohypoWitness> cohypo_witness_search(const AffineSymbol& phi, int n_points,
                                                   std::uint64_t seed) {
    if (n_points < 1) {
        throw Error("cohypo_witness_search needs n_points >= 1");
    }
    std::vector<HalfPlanePoint> points;
    points.reserve(static_cast<std::size_t>(n_points));
    if (const auto fp = fixed_point(phi); fp && fp->inside_domain) {
        points.emplace_back(fp->value);
    }
    PointSampler sampler(seed);
    while (static_cast<int>(points.size()) < n_points) {
        points.push_back(sampler.point());
    }

    const int n = static_cast<int>(points.size());
    std::vector<KernelCombo> fwd;
    std::vector<KernelCombo> adj;
    fwd.reserve(points.size());
    adj.reserve(points.size());
    for (const auto& u : points) {
        const KernelCombo k = KernelCombo::single(1.0, u.value());
        fwd.push_back(apply_forward(phi, k));
        adj.push_back(apply_adjoint(phi, k));
    }

    Eigen::MatrixXcd d(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            d(i, j) = inner(adj[static_cast<std::size_t>(j)], adj[static_cast<std::size_t>(i)]) -
                      inner(fwd[static_cast<std::size_t>(j)], fwd[static_cast<std::size_t>(i)]);
        }
    }
    const Eigen::MatrixXcd sym = 0.5 * (d + d.adjoint());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("eigensolver failed on the cohyponormality form");
    }
    const double min_eig = solver.eigenvalues()(0);
    if (min_eig >= -1e-12) {
        return std::nullopt;
    }
    std::vector<Complex> coeffs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        coeffs[static_cast<std::size_t>(i)] = solver.eigenvectors().col(0)(i);
    }
    return CohypoWitness{std::move(points), std::move(coeffs), min_eig};
}

double adjoint_formula_residual(const AffineSymbol& phi, std::span<const HalfPlanePoint> points) {
    if (points.empty()) {
        throw Error("adjoint_formula_residual needs at least one point");
    }
    const auto [scale, psi] = adjoint_symbol(phi);
    double residual = 0.0;
    for (const auto& u : points) {
        const KernelCombo k = KernelCombo::single(1.0, u.value());
        const KernelCombo lhs = apply_adjoint(phi, k);
        const KernelCombo rhs = apply_forward(psi, k) * Complex{scale, 0.0};
        residual = std::max(residual, combo_norm(lhs - rhs) / combo_norm(k));
    }
    return residual;
}

double ua_relation_residual(double a, Complex b, std::span<const HalfPlanePoint> points) {
    if (points.empty()) {
        throw Error("ua_relation_residual needs at least one point");
    }
    const AffineSymbol phi(a, b);
    const ConjugationSpec ua = ConjugationSpec::ua(a);
    double residual = 0.0;
    for (const auto& u : points) {
        const KernelCombo k = KernelCombo::single(1.0, u.value());
        const KernelCombo lhs = apply_conjugation(ua, apply_forward(phi, apply_conjugation(ua, k)));
        const KernelCombo rhs = apply_adjoint(phi, k);
        residual = std::max(residual, combo_norm(lhs - rhs) / combo_norm(k));
    }
    return residual;
}

} // namespace hpo
