#include "hpo/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <utility>

#include "hpo/kernel.hpp"
#include "hpo/sampling.hpp"
#include "hpo/spectral.hpp"

namespace hpo {

namespace {

constexpr double kTight = 1e-12;
constexpr double kLoose = 1e-6;

struct ScaleParams {
    int points;        // kernel points per symbol
    int combos;        // random combos for axiom checks
    int symbols;       // random symbols per batch
    int witness_seeds; // repeated witness searches
    int order;         // matrix truncation order
    int fft_size;
};

ScaleParams params_for(Scale scale) {
    if (scale == Scale::Quick) {
        return {12, 20, 20, 20, 32, 8192};
    }
    return {50, 50, 50, 100, 128, 16384};
}

class SuiteBuilder {
public:
    void below(const std::string& label, double measured, double threshold) {
        cases_.push_back({label, measured, threshold, Direction::Below, measured < threshold});
    }
    void above(const std::string& label, double measured, double threshold) {
        cases_.push_back({label, measured, threshold, Direction::Above, measured > threshold});
    }
    std::vector<SuiteCase> take() { return std::move(cases_); }

private:
    std::vector<SuiteCase> cases_;
};

AffineSymbol sample_parabolic(PointSampler& s, bool automorphism) {
    if (automorphism) {
        const double sign = s.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
        return AffineSymbol(1.0, Complex{0.0, sign * s.uniform(0.5, 4.0)});
    }
    return AffineSymbol(1.0, Complex{std::exp(s.uniform(-1.5, 1.5)), s.uniform(-4.0, 4.0)});
}

double sample_dilation(PointSampler& s) {
    // Kept away from a = 1 so the negative residual directions stay robust.
    const double sign = s.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    return std::exp(sign * s.uniform(0.25, 1.5));
}

AffineSymbol sample_hyperbolic(PointSampler& s, bool positive_re_b) {
    const double re = positive_re_b ? std::exp(s.uniform(-1.5, 1.5)) : 0.0;
    return AffineSymbol(sample_dilation(s), Complex{re, s.uniform(-4.0, 4.0)});
}

AffineSymbol sample_hyperbolic_automorphism(PointSampler& s) {
    // Parametrized by the certificate translation r* (so phi(w) = aw + i(a-1)r*),
    // kept bounded: a large |r*| shifts kernel images toward the boundary and
    // amplifies rounding in the residuals by orders of magnitude.
    const double a = sample_dilation(s);
    const double sign = s.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    const double r_star = sign * s.uniform(0.1, 3.0);
    return AffineSymbol(a, Complex{0.0, (a - 1.0) * r_star});
}

AffineSymbol sample_any_valid(PointSampler& s) {
    const double pick = s.uniform(0.0, 1.0);
    if (pick < 0.25) {
        return sample_parabolic(s, pick < 0.125);
    }
    if (pick < 0.5) {
        return sample_hyperbolic_automorphism(s);
    }
    return sample_hyperbolic(s, true);
}

std::vector<SuiteCase> suite_conjugation_axioms(std::uint64_t seed, const ScaleParams& p) {
    PointSampler sampler(seed_for(seed, "conjugation_axioms"));
    const auto samples = sampler.combos(p.combos);

    SuiteBuilder b;
    const std::vector<ConjugationSpec> conjugations = {
        ConjugationSpec::j(), ConjugationSpec::w0(), ConjugationSpec::jr(-2.0),
        ConjugationSpec::jr(0.0), ConjugationSpec::jr(1.5)};
    for (const auto& c : conjugations) {
        const auto r = conjugation_axiom_residuals(c, samples);
        b.below(c.name() + " involution", r.involution, kTight);
        b.below(c.name() + " antiunitarity", r.antiunitarity, kTight);
    }

    const auto ua = conjugation_axiom_residuals(ConjugationSpec::ua(4.0), samples);
    b.below("Ua(4) antiunitarity (isometry)", ua.antiunitarity, kTight);
    b.above("Ua(4) involution defect (expected fail of C^2=I)", ua.involution, 0.1);
    return b.take();
}

std::vector<SuiteCase> suite_thm9(std::uint64_t seed, const ScaleParams& p) {
    PointSampler sampler(seed_for(seed, "thm9"));
    const auto j = ConjugationSpec::j();

    SuiteBuilder b;
    const auto pinned_points = sampler.points(p.points);
    b.below("J-residual, parabolic (1, 2)",
            symmetry_residual(AffineSymbol(1.0, 2.0), j, pinned_points), kTight);
    b.below("J-residual, parabolic automorphism (1, 3i)",
            symmetry_residual(AffineSymbol(1.0, Complex{0.0, 3.0}), j, pinned_points), kTight);

    double worst_parabolic = 0.0;
    for (int i = 0; i < p.symbols; ++i) {
        const auto phi = sample_parabolic(sampler, i % 2 == 1);
        worst_parabolic = std::max(
            worst_parabolic, symmetry_residual(phi, j, sampler.points(p.points)));
    }
    b.below("J-residual, random parabolic batch max", worst_parabolic, kTight);

    b.above("J-residual, hyperbolic (0.5, 1)",
            symmetry_residual(AffineSymbol(0.5, 1.0), j, pinned_points), kLoose);
    b.above("J-residual, hyperbolic (2, 1)",
            symmetry_residual(AffineSymbol(2.0, 1.0), j, pinned_points), kLoose);

    double best_hyperbolic = 1e300;
    for (int i = 0; i < p.symbols; ++i) {
        const auto phi = (i % 3 == 2) ? sample_hyperbolic_automorphism(sampler)
                                      : sample_hyperbolic(sampler, true);
        best_hyperbolic = std::min(
            best_hyperbolic, symmetry_residual(phi, j, sampler.points(p.points)));
    }
    b.above("J-residual, random a != 1 batch min", best_hyperbolic, kLoose);
    return b.take();
}

std::vector<SuiteCase> suite_thm26(std::uint64_t seed, const ScaleParams& p) {
    PointSampler sampler(seed_for(seed, "thm26"));
    const auto w0 = ConjugationSpec::w0();

    SuiteBuilder b;
    for (double a : {0.1, 0.5, 2.0, 10.0}) {
        b.below("W0-residual, dilation (" + std::to_string(a) + ", 0)",
                symmetry_residual(AffineSymbol(a, 0.0), w0, sampler.points(p.points)), kTight);
    }

    const auto pinned_points = sampler.points(p.points);
    b.above("W0-residual, translation (1, 1)",
            symmetry_residual(AffineSymbol(1.0, 1.0), w0, pinned_points), kLoose);
    b.above("W0-residual, automorphism (2, i)",
            symmetry_residual(AffineSymbol(2.0, Complex{0.0, 1.0}), w0, pinned_points), kLoose);

    double best = 1e300;
    for (int i = 0; i < p.symbols; ++i) {
        AffineSymbol phi = (i % 3 == 0) ? sample_parabolic(sampler, i % 2 == 1)
                                        : ((i % 3 == 1) ? sample_hyperbolic_automorphism(sampler)
                                                        : sample_hyperbolic(sampler, true));
        best = std::min(best, symmetry_residual(phi, w0, sampler.points(p.points)));
    }
    b.above("W0-residual, random b != 0 batch min", best, kLoose);
    return b.take();
}

std::vector<SuiteCase> suite_thm100(std::uint64_t seed, const ScaleParams& p) {
    PointSampler sampler(seed_for(seed, "thm100"));

    SuiteBuilder b;
    const auto pinned = AffineSymbol(3.0, Complex{0.0, 2.0});  // r* = 1
    const auto pinned_points = sampler.points(p.points);
    b.below("Jr(r*) residual, automorphism (3, 2i)",
            symmetry_residual(pinned, ConjugationSpec::jr(1.0), pinned_points), kTight);
    b.above("Jr(r*+0.1) residual, automorphism (3, 2i)",
            symmetry_residual(pinned, ConjugationSpec::jr(1.1), pinned_points), kLoose);
    b.above("Jr(-r*) residual, automorphism (3, 2i)",
            symmetry_residual(pinned, ConjugationSpec::jr(-1.0), pinned_points), kLoose);

    double worst_match = 0.0;
    double best_offset = 1e300;
    for (int i = 0; i < p.symbols; ++i) {
        const auto phi = sample_hyperbolic_automorphism(sampler);
        const double r_star = phi.b().imag() / (phi.a() - 1.0);
        const auto points = sampler.points(p.points);
        worst_match = std::max(
            worst_match, symmetry_residual(phi, ConjugationSpec::jr(r_star), points));
        best_offset = std::min(
            best_offset, symmetry_residual(phi, ConjugationSpec::jr(r_star + 0.1), points));
    }
    b.below("Jr(r*) residual, random automorphism batch max", worst_match, kTight);
    b.above("Jr(r*+0.1) residual, random automorphism batch min", best_offset, kLoose);

    double worst_wab = 0.0;
    for (int i = 0; i < p.symbols / 2; ++i) {
        const auto phi = sample_hyperbolic_automorphism(sampler);
        const auto wab = ConjugationSpec::wab(phi.a(), phi.b());
        worst_wab = std::max(worst_wab,
                             symmetry_residual(phi, wab, sampler.points(p.points)));
    }
    b.below("Wab residual, random automorphism batch max", worst_wab, kTight);
    return b.take();
}

std::vector<SuiteCase> suite_prop3(std::uint64_t seed, const ScaleParams& p) {
    PointSampler sampler(seed_for(seed, "prop3"));

    SuiteBuilder b;
    const auto pinned_points = sampler.points(p.points);
    b.below("adjoint factorization residual (2, 1)",
            adjoint_formula_residual(AffineSymbol(2.0, 1.0), pinned_points), kTight);
    b.below("adjoint factorization residual (1/3, 2+i)",
            adjoint_formula_residual(AffineSymbol(1.0 / 3.0, Complex{2.0, 1.0}), pinned_points),
            kTight);
    b.below("adjoint factorization residual, identity",
            adjoint_formula_residual(AffineSymbol(1.0, 0.0), pinned_points), kTight);

    double worst = 0.0;
    for (int i = 0; i < p.symbols; ++i) {
        const auto phi = sample_any_valid(sampler);
        worst = std::max(worst, adjoint_formula_residual(phi, sampler.points(p.points)));
    }
    b.below("adjoint factorization residual, random batch max", worst, kTight);
    return b.take();
}

std::vector<SuiteCase> suite_eq29(std::uint64_t seed, const ScaleParams& p) {
    PointSampler sampler(seed_for(seed, "eq29"));

    SuiteBuilder b;
    const auto pinned_points = sampler.points(p.points);
    b.below("Ua relation residual (4, 1+i)",
            ua_relation_residual(4.0, Complex{1.0, 1.0}, pinned_points), kTight);
    b.below("Ua relation residual (1/2, i)",
            ua_relation_residual(0.5, Complex{0.0, 1.0}, pinned_points), kTight);
    b.below("Ua relation residual, identity",
            ua_relation_residual(1.0, 0.0, pinned_points), kTight);

    double worst = 0.0;
    for (int i = 0; i < p.symbols; ++i) {
        const auto phi = sample_any_valid(sampler);
        worst = std::max(worst,
                         ua_relation_residual(phi.a(), phi.b(), sampler.points(p.points)));
    }
    b.below("Ua relation residual, random batch max", worst, kTight);
    return b.take();
}

std::vector<SuiteCase> suite_thm101(std::uint64_t seed, const ScaleParams& p) {
    PointSampler sampler(seed_for(seed, "thm101"));

    SuiteBuilder b;
    const AffineSymbol contraction(0.5, 1.0);
    const double form = cohypo_quadratic_form(contraction, KernelCombo::single(1.0, 2.0));
    b.below("quadratic form at the fixed point, (1/2, 1) on K_2: |value + 1/12|",
            std::abs(form + 1.0 / 12.0), kTight);

    const auto witness = cohypo_witness_search(contraction, 8, seed_for(seed, "thm101-pinned"));
    b.below("witness search value (1/2, 1)", witness ? witness->value : 0.0,
            -1.0 / 12.0 + 1e-10);

    const double expansion_form =
        cohypo_quadratic_form(AffineSymbol(2.0, 1.0), KernelCombo::single(1.0, 1.0));
    b.below("quadratic form (2, 1) on K_1: |value - 1/24|",
            std::abs(expansion_form - 1.0 / 24.0), kTight);

    double worst_violation = 0.0;
    for (int s = 0; s < p.witness_seeds; ++s) {
        const auto w = cohypo_witness_search(AffineSymbol(2.0, 1.0), 8,
                                             seed_for(seed, "thm101-expansive") + s);
        worst_violation = std::max(worst_violation, w ? -w->value : 0.0);
    }
    b.below("no violation for (2, 1) across seeds", worst_violation, kTight);

    double worst_normal = 0.0;
    const std::vector<AffineSymbol> normals = {
        AffineSymbol(1.0, Complex{0.0, 3.0}), AffineSymbol(2.0, Complex{0.0, 1.0}),
        AffineSymbol(0.5, Complex{0.0, 2.0}), AffineSymbol(3.0, 0.0), AffineSymbol(1.0, 5.0)};
    for (const auto& phi : normals) {
        for (int s = 0; s < p.witness_seeds / 4; ++s) {
            const auto w =
                cohypo_witness_search(phi, 8, seed_for(seed, "thm101-normal") + s);
            worst_normal = std::max(worst_normal, w ? -w->value : 0.0);
        }
    }
    b.below("no violation for Re(b)=0 and parabolic symbols across seeds", worst_normal, kTight);

    const auto found = cohypo_witness_search(AffineSymbol(0.5, 2.0), 8,
                                             seed_for(seed, "thm101-witness"));
    b.above("violation found for (1/2, 2)", found ? -found->value : 0.0, kTight);

    double worst_unitary = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto f = sampler.combo();
        worst_unitary = std::max(
            worst_unitary,
            std::abs(cohypo_quadratic_form(AffineSymbol(1.0, Complex{0.0, 1.0}), f)));
    }
    b.below("quadratic form vanishes for the unitary (1, i)", worst_unitary, kTight);
    return b.take();
}

std::vector<SuiteCase> suite_thm2_matrix(std::uint64_t seed, const ScaleParams& p) {
    (void)seed;  // matrix cases are deterministic
    SuiteBuilder b;
    const int n = p.order;
    const int half = n / 2;
    const double internal_radius = 0.995;

    // Gram sums over truncated products are widened until the reported block
    // stabilizes; entries themselves are exact up to aliasing.
    const auto unitarity_defect = [&](const AffineSymbol& phi) {
        const Eigen::MatrixXcd block = stabilized_block(
            [&](int rows) {
                const Eigen::MatrixXcd cols =
                    composition_block(phi, rows, half, 4 * rows, internal_radius);
                return (cols.adjoint() * cols - Eigen::MatrixXcd::Identity(half, half)).eval();
            },
            n, 1e-9);
        return block.cwiseAbs().maxCoeff();
    };
    b.below("unitary defect |M*M - I|, automorphism (1, 3i)",
            unitarity_defect(AffineSymbol(1.0, Complex{0.0, 3.0})), 1e-8);

    const Eigen::MatrixXcd selfadj =
        composition_block(AffineSymbol(1.0, 2.0), half, half, p.fft_size);
    b.below("self-adjointness defect |M - M*|, translation (1, 2)",
            (selfadj - selfadj.adjoint()).cwiseAbs().maxCoeff(), 1e-8);

    const auto commutator_norm = [&](const AffineSymbol& phi) {
        const Eigen::MatrixXcd block = stabilized_block(
            [&](int inner) {
                const Eigen::MatrixXcd rows =
                    composition_block(phi, half, inner, 4 * inner, internal_radius);
                const Eigen::MatrixXcd cols =
                    composition_block(phi, inner, half, 4 * inner, internal_radius);
                return (rows * rows.adjoint() - cols.adjoint() * cols).eval();
            },
            n, 1e-9);
        return block.cwiseAbs().maxCoeff();
    };
    b.below("normality defect, translation (1, 2)", commutator_norm(AffineSymbol(1.0, 2.0)), 1e-6);
    b.below("normality defect, automorphism (3, 2i)",
            commutator_norm(AffineSymbol(3.0, Complex{0.0, 2.0})), 1e-6);
    b.above("normality defect, non-normal (2, 1)", commutator_norm(AffineSymbol(2.0, 1.0)), 1e-6);

    // Cohyponormality at the matrix level, pinned at the documented order.
    b.above("commutator min eigenvalue, cohyponormal (2, 1)",
            cohypo_matrix_residual(AffineSymbol(2.0, 1.0), 24, p.fft_size), -1e-6);
    b.below("commutator min eigenvalue, non-cohyponormal (1/2, 1)",
            cohypo_matrix_residual(AffineSymbol(0.5, 1.0), 24, p.fft_size), -1e-3);
    b.below("commutator |min eigenvalue|, unitary (1, 3i)",
            std::abs(cohypo_matrix_residual(AffineSymbol(1.0, Complex{0.0, 3.0}), 24, p.fft_size)),
            1e-6);
    return b.take();
}

std::vector<SuiteCase> suite_transfer_consistency(std::uint64_t seed, const ScaleParams& p) {
    PointSampler sampler(seed_for(seed, "transfer_consistency"));
    SuiteBuilder b;
    const int n = p.order;
    const int half = n / 2;

    b.below("conjugation matrix of J is the identity",
            (conjugation_matrix(ConjugationSpec::j(), n, p.fft_size).entries -
             Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff(),
            kTight);

    Eigen::MatrixXcd signs = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        signs(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    }
    b.below("conjugation matrix of W0 is diag((-1)^n)",
            (conjugation_matrix(ConjugationSpec::w0(), n, p.fft_size).entries - signs)
                .cwiseAbs().maxCoeff(),
            kTight);

    // Pinned at order 64 / fft 8192: the 1/rho^k radius correction makes a
    // 1e-12 identity check meaningful only up to this order.
    const auto identity_op = composition_matrix(AffineSymbol(1.0, 0.0), 64, 8192);
    b.below("identity symbol transfers to the identity matrix (N=64)",
            (identity_op.entries - Eigen::MatrixXcd::Identity(64, 64)).cwiseAbs().maxCoeff(),
            kTight);

    const auto parabolic = composition_matrix(AffineSymbol(1.0, 2.0), n, p.fft_size).entries;
    b.below("parabolic matrix is complex symmetric (J at matrix level)",
            (parabolic - parabolic.transpose()).topLeftCorner(half, half).cwiseAbs().maxCoeff(),
            1e-8);

    const auto dilation = composition_matrix(AffineSymbol(2.0, 0.0), n, p.fft_size).entries;
    const Eigen::MatrixXcd dilation_sym = dilation * signs;
    b.below("dilation matrix times diag((-1)^n) is symmetric (W0 at matrix level)",
            (dilation_sym - dilation_sym.transpose())
                .topLeftCorner(half, half).cwiseAbs().maxCoeff(),
            1e-8);

    const auto wc = wc_conjugation_matrix(0.6, n, p.fft_size);
    b.below("Wc(0.6) entry [0,0] equals sqrt(1-c^2) = 0.8",
            std::abs(wc.entries(0, 0) - Complex{0.8, 0.0}), kTight);
    const auto wc_defects = wc_conjugation_defects(0.6, n);
    b.below("Wc(0.6) symmetry defect", wc_defects.symmetry, 1e-8);
    b.below("Wc(0.6) unitarity defect", wc_defects.unitarity, 1e-8);

    const auto jr_defects = conjugation_defects(ConjugationSpec::jr(1.0), n);
    b.below("Jr(1.0) symmetry defect", jr_defects.symmetry, 1e-8);
    b.below("Jr(1.0) unitarity defect", jr_defects.unitarity, 1e-8);

    b.below("matrix symmetry residual, parabolic (1, 1+2i) with J",
            csym_matrix_residual(AffineSymbol(1.0, Complex{1.0, 2.0}), ConjugationSpec::j(), 32,
                                 p.fft_size),
            1e-8);
    b.below("matrix symmetry residual, automorphism (3, 2i) with Jr(r*=1)",
            csym_matrix_residual(AffineSymbol(3.0, Complex{0.0, 2.0}), ConjugationSpec::jr(1.0),
                                 32, p.fft_size),
            1e-8);
    b.above("matrix symmetry residual, automorphism (3, 2i) with Jr(-1)",
            csym_matrix_residual(AffineSymbol(3.0, Complex{0.0, 2.0}), ConjugationSpec::jr(-1.0),
                                 32, p.fft_size),
            1e-4);
    b.above("matrix symmetry residual, non-normal (2, 1) with J",
            csym_matrix_residual(AffineSymbol(2.0, 1.0), ConjugationSpec::j(), 32, p.fft_size),
            1e-4);

    // Kernel/matrix bridge, pinned at N=64 -> 128. The anchor pair sits at
    // the corner of the admissible region (|u| = 2, Re = 0.5), the slowest
    // coefficient decay available, so the N=64 discrepancy stays measurably
    // above the rounding floor and the doubling ratio is meaningful.
    std::vector<std::pair<HalfPlanePoint, HalfPlanePoint>> pairs;
    pairs.emplace_back(HalfPlanePoint(Complex{0.5, 1.9365}), HalfPlanePoint(Complex{0.5, -1.9365}));
    while (pairs.size() < 10) {
        const Complex u{std::exp(sampler.uniform(std::log(0.5), std::log(1.4))),
                        sampler.uniform(-1.4, 1.4)};
        const Complex v{std::exp(sampler.uniform(std::log(0.5), std::log(1.4))),
                        sampler.uniform(-1.4, 1.4)};
        if (std::abs(u) <= 2.0 && std::abs(v) <= 2.0) {
            pairs.emplace_back(HalfPlanePoint(u), HalfPlanePoint(v));
        }
    }
    const AffineSymbol bridge_symbol(2.0, 1.0);
    const double d64 = matrix_vs_kernel_crosscheck(bridge_symbol, 64, pairs, p.fft_size);
    const double d128 = matrix_vs_kernel_crosscheck(bridge_symbol, 128, pairs, p.fft_size);
    b.below("kernel/matrix crosscheck (2, 1) at N=64", d64, 1e-6);
    b.above("crosscheck improvement ratio N=64 -> 128", d64 / std::max(d128, 1e-300), 10.0);

    const auto aliased = composition_matrix(AffineSymbol(2.0, 1.0), n, p.fft_size);
    const auto refined = composition_matrix(AffineSymbol(2.0, 1.0), n, 2 * p.fft_size);
    b.below("aliasing control: doubling the fft size leaves entries fixed",
            (aliased.entries - refined.entries).cwiseAbs().maxCoeff(), 1e-10);
    return b.take();
}

using SuiteFn = std::vector<SuiteCase> (*)(std::uint64_t, const ScaleParams&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"conjugation_axioms", suite_conjugation_axioms},
        {"thm9", suite_thm9},
        {"thm26", suite_thm26},
        {"thm100", suite_thm100},
        {"prop3", suite_prop3},
        {"eq29", suite_eq29},
        {"thm101", suite_thm101},
        {"thm2_matrix", suite_thm2_matrix},
        {"transfer_consistency", suite_transfer_consistency},
    };
    return table;
}

} // namespace

bool SuiteResult::all_pass() const {
    for (const auto& c : cases) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, Scale scale) {
    for (const auto& [suite_name, fn] : suite_table()) {
        if (suite_name == name) {
            const auto start = std::chrono::steady_clock::now();
            SuiteResult result;
            result.suite_name = name;
            result.seed = seed;
            result.cases = fn(seed, params_for(scale));
            result.elapsed_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return result;
        }
    }
    throw UnknownSuite("unknown suite: " + name);
}

std::vector<SuiteResult> run_all(std::uint64_t seed, Scale scale) {
    std::vector<SuiteResult> results;
    results.reserve(suite_names().size());
    for (const auto& name : suite_names()) {
        results.push_back(run_suite(name, seed, scale));
    }
    return results;
}

Scale parse_scale(const std::string& text) {
    if (text == "quick") {
        return Scale::Quick;
    }
    if (text == "full") {
        return Scale::Full;
    }
    throw Error("scale must be 'quick' or 'full', got '" + text + "'");
}

std::string to_string(Scale scale) {
    return scale == Scale::Quick ? "quick" : "full";
}

} // namespace hpo
