#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <functional>
#include <hpo/kernel.hpp>
#include <hpo/sampling.hpp>
#include <thread>
#include <vector>

using hpo::AffineSymbol;
using hpo::Complex;
using hpo::ConjugationSpec;
using hpo::HalfPlanePoint;
using hpo::KernelCombo;

namespace {

constexpr Complex kI{0.0, 1.0};

using PointFn = std::function<Complex(Complex)>;

PointFn combo_fn(const KernelCombo& f) {
    return [f](Complex w) { return combo_eval(f, w); };
}

/// Function-level definitions of the conjugate-linear maps, evaluated
/// directly; the independent oracle for apply_conjugation.
PointFn conjugation_fn(const ConjugationSpec& c, const PointFn& f) {
    switch (c.tag()) {
        case ConjugationSpec::Tag::J:
            return [f](Complex w) { return std::conj(f(std::conj(w))); };
        case ConjugationSpec::Tag::W0:
            return [f](Complex w) { return std::conj(f(1.0 / std::conj(w))) / w; };
        case ConjugationSpec::Tag::Jr:
        case ConjugationSpec::Tag::Wab: {
            const double r = c.r();
            return [f, r](Complex w) {
                const Complex shifted = w + kI * r;
                return std::conj(f(1.0 / std::conj(shifted) - kI * r)) / shifted;
            };
        }
        case ConjugationSpec::Tag::Ua: {
            const double a = c.dilation();
            return [f, a](Complex w) {
                return std::conj(f(std::conj(w) / a)) / std::sqrt(a);
            };
        }
    }
    return {};
}

bool single_kernel_close(const KernelCombo& f, Complex coeff, Complex point, double tol) {
    if (f.terms().size() != 1) {
        return false;
    }
    return std::abs(f.terms()[0].coeff - coeff) <= tol &&
           std::abs(f.terms()[0].point.value() - point) <= tol;
}

} // namespace

TEST_CASE("half-plane points reject the closed left half-plane") {
    CHECK_NOTHROW(HalfPlanePoint(Complex{1e-9, 5.0}));
    CHECK_THROWS_AS(HalfPlanePoint(Complex{0.0, 1.0}), hpo::OutsideDomain);
    CHECK_THROWS_AS(HalfPlanePoint(Complex{-1.0, 0.0}), hpo::OutsideDomain);
}

TEST_CASE("kernel_eval matches 1/(conj(u) + w)") {
    CHECK(hpo::kernel_eval(HalfPlanePoint(1.0), 1.0) == Complex{0.5, 0.0});
    CHECK(std::abs(hpo::kernel_eval(HalfPlanePoint(Complex{1.0, 1.0}), Complex{1.0, -1.0}) -
                   Complex{0.25, 0.25}) <= 1e-15);
    const Complex u{3.0, 4.0};
    CHECK(std::abs(hpo::kernel_eval(HalfPlanePoint(u), u) - Complex{1.0 / 6.0, 0.0}) <= 1e-15);
    CHECK_THROWS_AS(hpo::kernel_eval(HalfPlanePoint(1.0), Complex{-1.0, 0.0}),
                    hpo::OutsideDomain);
}

TEST_CASE("combo_eval sums the terms") {
    const auto f = KernelCombo::single(1.0, 1.0) + KernelCombo::single(1.0, 2.0);
    CHECK(std::abs(combo_eval(f, 1.0) - Complex{5.0 / 6.0, 0.0}) <= 1e-15);
    CHECK(combo_eval(KernelCombo{}, Complex{3.0, 1.0}) == Complex{});
    CHECK(std::abs(combo_eval(KernelCombo::single(2.0 * kI, 1.0), 1.0) - kI) <= 1e-15);
    CHECK_THROWS_AS(combo_eval(f, Complex{-0.5, 1.0}), hpo::OutsideDomain);
}

TEST_CASE("normal form merges coincident points and drops cancelled terms") {
    const auto merged = KernelCombo::single(1.0, Complex{1.0, 2.0}) +
                        KernelCombo::single(Complex{0.5, -1.0}, Complex{1.0, 2.0});
    REQUIRE(merged.terms().size() == 1);
    CHECK(merged.terms()[0].coeff == Complex{1.5, -1.0});

    const auto cancelled = KernelCombo::single(1.0, 2.0) - KernelCombo::single(1.0, 2.0);
    CHECK(cancelled.empty());
    CHECK(hpo::combo_norm(cancelled) == 0.0);
}

TEST_CASE("inner reproduces kernel values") {
    const auto k1 = KernelCombo::single(1.0, 1.0);
    const auto k2 = KernelCombo::single(1.0, 2.0);
    CHECK(std::abs(inner(k1, k1) - Complex{0.5, 0.0}) <= 1e-15);
    CHECK(std::abs(inner(k1, k2) - Complex{1.0 / 3.0, 0.0}) <= 1e-15);

    hpo::PointSampler sampler(23);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = sampler.combo(3, 3);
        const auto u = sampler.point();
        const Complex via_inner = inner(f, KernelCombo::single(1.0, u.value()));
        CHECK(std::abs(via_inner - combo_eval(f, u.value())) <= 1e-13);
    }
}

TEST_CASE("Gram positivity and conjugate symmetry") {
    hpo::PointSampler sampler(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = sampler.combo(2, 5);
        const auto g = sampler.combo(2, 5);
        const Complex ff = inner(f, f);
        CHECK(ff.real() >= -1e-14);
        CHECK(std::abs(inner(f, g) - std::conj(inner(g, f))) <= 1e-13);
    }
}

TEST_CASE("apply_forward has the derived closed form, verified pointwise") {
    const AffineSymbol phi(0.5, 1.0);
    const auto image = apply_forward(phi, KernelCombo::single(1.0, 2.0));
    CHECK(single_kernel_close(image, 2.0, 6.0, 1e-15));

    const auto rotated = apply_forward(AffineSymbol(2.0, kI), KernelCombo::single(1.0, 1.0));
    CHECK(single_kernel_close(rotated, 0.5, Complex{0.5, -0.5}, 1e-15));

    hpo::PointSampler sampler(31);
    for (int trial = 0; trial < 60; ++trial) {
        const AffineSymbol random_phi(std::exp(sampler.uniform(-1.5, 1.5)),
                                      Complex{trial % 2 == 0 ? std::exp(sampler.uniform(-1.0, 1.0))
                                                             : 0.0,
                                              sampler.uniform(-4.0, 4.0)});
        const auto f = sampler.combo();
        const Complex w = sampler.point().value();
        // The oracle: (C_phi f)(w) = f(phi(w)).
        const Complex direct = combo_eval(f, random_phi(w));
        const Complex via_action = combo_eval(apply_forward(random_phi, f), w);
        CHECK(std::abs(direct - via_action) <= 1e-13 * std::max(1.0, std::abs(direct)));
    }

    const auto f = hpo::PointSampler(1).combo();
    const auto same = apply_forward(AffineSymbol(1.0, 0.0), f);
    CHECK(std::abs(inner(same - f, same - f)) <= 1e-15);
}

TEST_CASE("apply_adjoint moves kernels along the symbol") {
    const auto moved = apply_adjoint(AffineSymbol(2.0, 1.0), KernelCombo::single(1.0, 1.0));
    CHECK(single_kernel_close(moved, 1.0, 3.0, 1e-15));

    // The interior fixed point pins its kernel.
    const auto fixed = apply_adjoint(AffineSymbol(0.5, 1.0), KernelCombo::single(1.0, 2.0));
    CHECK(single_kernel_close(fixed, 1.0, 2.0, 1e-15));
}

TEST_CASE("adjoint duality <C_phi K_u, K_v> = <K_u, C_phi* K_v>") {
    hpo::PointSampler sampler(17);
    for (int trial = 0; trial < 50; ++trial) {
        const AffineSymbol phi(std::exp(sampler.uniform(-1.5, 1.5)),
                               Complex{std::exp(sampler.uniform(-1.0, 1.0)),
                                       sampler.uniform(-4.0, 4.0)});
        const auto ku = KernelCombo::single(1.0, sampler.point().value());
        const auto kv = KernelCombo::single(1.0, sampler.point().value());
        const Complex lhs = inner(apply_forward(phi, ku), kv);
        const Complex rhs = inner(ku, apply_adjoint(phi, kv));
        CHECK(std::abs(lhs - rhs) <= 1e-13);
    }
}

TEST_CASE("conjugation kernel actions match the frozen images") {
    const auto j_image = apply_conjugation(ConjugationSpec::j(),
                                           KernelCombo::single(1.0, Complex{1.0, 1.0}));
    CHECK(single_kernel_close(j_image, 1.0, Complex{1.0, -1.0}, 1e-15));

    const auto w0_image = apply_conjugation(ConjugationSpec::w0(), KernelCombo::single(1.0, 1.0));
    CHECK(single_kernel_close(w0_image, 1.0, 1.0, 1e-15));

    const auto ua_image = apply_conjugation(ConjugationSpec::ua(4.0), KernelCombo::single(1.0, 1.0));
    CHECK(single_kernel_close(ua_image, 2.0, 4.0, 1e-15));
}

TEST_CASE("conjugation actions agree with their function-level definitions") {
    const std::vector<ConjugationSpec> specs = {
        ConjugationSpec::j(), ConjugationSpec::w0(), ConjugationSpec::jr(1.5),
        ConjugationSpec::jr(-2.0), ConjugationSpec::ua(4.0), ConjugationSpec::ua(0.25)};
    hpo::PointSampler sampler(41);
    for (const auto& spec : specs) {
        for (int trial = 0; trial < 25; ++trial) {
            const auto f = sampler.combo();
            const Complex w = sampler.point().value();
            const Complex direct = conjugation_fn(spec, combo_fn(f))(w);
            const Complex via_action = combo_eval(apply_conjugation(spec, f), w);
            CHECK(std::abs(direct - via_action) <= 1e-13 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("conjugations are conjugate-linear") {
    hpo::PointSampler sampler(43);
    for (const auto& spec : {ConjugationSpec::j(), ConjugationSpec::jr(0.7),
                             ConjugationSpec::ua(2.0)}) {
        const auto f = sampler.combo();
        const Complex c = sampler.coefficient();
        const auto scaled_first = apply_conjugation(spec, f * c);
        const auto scaled_after = apply_conjugation(spec, f) * std::conj(c);
        CHECK(hpo::combo_norm(scaled_first - scaled_after) <= 1e-13);
    }
}

TEST_CASE("Wab reduces to the certificate translation") {
    const auto wab = ConjugationSpec::wab(3.0, Complex{0.0, 2.0});
    CHECK(wab.r() == 1.0);
    CHECK_THROWS_AS(ConjugationSpec::wab(1.0, Complex{0.0, 2.0}), hpo::Error);
    CHECK_THROWS_AS(ConjugationSpec::wab(2.0, Complex{1.0, 0.0}), hpo::Error);
    CHECK_THROWS_AS(ConjugationSpec::ua(0.0), hpo::Error);
}

TEST_CASE("conjugation axioms hold for J, W0, Jr and fail for Ua") {
    hpo::PointSampler sampler(2);
    const auto samples = sampler.combos(20);

    for (const auto& spec : {ConjugationSpec::j(), ConjugationSpec::w0(),
                             ConjugationSpec::jr(1.5), ConjugationSpec::jr(-2.0)}) {
        const auto residuals = conjugation_axiom_residuals(spec, samples);
        CHECK(residuals.involution <= 1e-13);
        CHECK(residuals.antiunitarity <= 1e-13);
    }

    std::vector<KernelCombo> with_k1 = samples;
    with_k1.push_back(KernelCombo::single(1.0, 1.0));
    const auto ua = conjugation_axiom_residuals(ConjugationSpec::ua(4.0), with_k1);
    CHECK(ua.involution > 0.1);
    CHECK(ua.antiunitarity <= 1e-13);
}

TEST_CASE("Ua is an isometry") {
    hpo::PointSampler sampler(29);
    const auto ua = ConjugationSpec::ua(4.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = sampler.combo();
        const auto g = sampler.combo();
        const Complex lhs = inner(apply_conjugation(ua, f), apply_conjugation(ua, g));
        CHECK(std::abs(lhs - inner(g, f)) <= 1e-13);
    }
}

TEST_CASE("symmetry residual frozen examples") {
    hpo::PointSampler sampler(13);
    const auto points = sampler.points(10);

    CHECK(hpo::symmetry_residual(AffineSymbol(1.0, Complex{2.0, 3.0}), ConjugationSpec::j(),
                                 points) <= 1e-13);
    CHECK(hpo::symmetry_residual(AffineSymbol(3.0, 0.0), ConjugationSpec::w0(), points) <= 1e-13);

    std::vector<HalfPlanePoint> with_one = points;
    with_one.emplace_back(Complex{1.0, 0.0});
    CHECK(hpo::symmetry_residual(AffineSymbol(2.0, 1.0), ConjugationSpec::j(), with_one) > 1e-3);

    CHECK_THROWS_AS(hpo::symmetry_residual(AffineSymbol(1.0, 1.0), ConjugationSpec::ua(2.0),
                                           points),
                    hpo::Error);

    // Empty inputs would vacuously report a zero residual; they are rejected.
    const std::vector<HalfPlanePoint> no_points;
    const std::vector<KernelCombo> no_combos;
    CHECK_THROWS_AS(hpo::symmetry_residual(AffineSymbol(1.0, 1.0), ConjugationSpec::j(),
                                           no_points),
                    hpo::Error);
    CHECK_THROWS_AS(hpo::conjugation_axiom_residuals(ConjugationSpec::j(), no_combos), hpo::Error);
    CHECK_THROWS_AS(hpo::adjoint_formula_residual(AffineSymbol(2.0, 1.0), no_points), hpo::Error);
    CHECK_THROWS_AS(hpo::ua_relation_residual(2.0, 1.0, no_points), hpo::Error);
}

TEST_CASE("translation symmetry under J is a biconditional in a") {
    hpo::PointSampler sampler(37);
    const auto points = sampler.points(12);
    const std::vector<Complex> bs = {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{0.0, 1.0},
                                     Complex{2.0, 3.0}};
    for (double a : {0.5, 1.0, 2.0}) {
        for (const auto& b : bs) {
            const AffineSymbol phi(a, b);
            const double residual = hpo::symmetry_residual(phi, ConjugationSpec::j(), points);
            if (a == 1.0) {
                CHECK(residual <= 1e-12);
            } else {
                CHECK(residual > 1e-6);
            }
        }
    }
}

TEST_CASE("dilation symmetry under W0 is a biconditional in b") {
    hpo::PointSampler sampler(38);
    const auto points = sampler.points(12);
    const std::vector<Complex> bs = {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{0.0, 1.0},
                                     Complex{2.0, 3.0}};
    for (double a : {0.5, 1.0, 2.0}) {
        for (const auto& b : bs) {
            const double residual =
                hpo::symmetry_residual(AffineSymbol(a, b), ConjugationSpec::w0(), points);
            if (b == Complex{}) {
                CHECK(residual <= 1e-12);
            } else {
                CHECK(residual > 1e-6);
            }
        }
    }
}

TEST_CASE("hyperbolic automorphisms are certified by exactly one translation parameter") {
    hpo::PointSampler sampler(39);
    for (int trial = 0; trial < 25; ++trial) {
        const double sign = sampler.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
        const double a = std::exp(sign * sampler.uniform(0.25, 1.5));
        const double r_star = (sampler.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) *
                              sampler.uniform(0.1, 3.0);
        const double beta = (a - 1.0) * r_star;
        const AffineSymbol phi(a, Complex{0.0, beta});
        const auto points = sampler.points(12);
        CHECK(hpo::symmetry_residual(phi, ConjugationSpec::jr(r_star), points) <= 1e-12);
        CHECK(hpo::symmetry_residual(phi, ConjugationSpec::jr(r_star + 0.1), points) > 1e-6);
        CHECK(hpo::symmetry_residual(phi, ConjugationSpec::wab(a, Complex{0.0, beta}), points) <=
              1e-12);
    }
}

TEST_CASE("cohyponormality quadratic form frozen values") {
    const double at_fixed_point =
        hpo::cohypo_quadratic_form(AffineSymbol(0.5, 1.0), KernelCombo::single(1.0, 2.0));
    CHECK(std::abs(at_fixed_point + 1.0 / 12.0) <= 1e-15);

    const double expansive =
        hpo::cohypo_quadratic_form(AffineSymbol(2.0, 1.0), KernelCombo::single(1.0, 1.0));
    CHECK(std::abs(expansive - 1.0 / 24.0) <= 1e-15);

    hpo::PointSampler sampler(47);
    for (int trial = 0; trial < 20; ++trial) {
        const double unitary_form =
            hpo::cohypo_quadratic_form(AffineSymbol(1.0, kI), sampler.combo());
        CHECK(std::abs(unitary_form) <= 1e-13);
    }
}

TEST_CASE("witness search finds violations exactly for a < 1, Re(b) > 0") {
    const auto forced = hpo::cohypo_witness_search(AffineSymbol(0.5, 1.0), 1, 0);
    REQUIRE(forced.has_value());
    CHECK(forced->points.size() == 1);
    CHECK(std::abs(forced->points[0].value() - Complex{2.0, 0.0}) <= 1e-15);
    CHECK(std::abs(forced->value + 1.0 / 12.0) <= 1e-13);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        CHECK_FALSE(hpo::cohypo_witness_search(AffineSymbol(2.0, 1.0), 8, seed).has_value());
        CHECK_FALSE(hpo::cohypo_witness_search(AffineSymbol(1.0, 5.0), 8, seed).has_value());
    }

    const auto found = hpo::cohypo_witness_search(AffineSymbol(0.5, 2.0), 8, 1);
    REQUIRE(found.has_value());
    CHECK(found->value < -1e-6);

    CHECK_THROWS_AS(hpo::cohypo_witness_search(AffineSymbol(2.0, 1.0), 0, 0), hpo::Error);
}

TEST_CASE("witness existence across the parameter grid") {
    for (double a : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        for (const Complex b : {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{4.0, 0.0},
                                Complex{0.0, 1.0}, Complex{0.0, 3.0}, Complex{1.0, 1.0},
                                Complex{2.0, 3.0}}) {
            const AffineSymbol phi(a, b);
            const bool cohyponormal = a >= 1.0 || b.real() == 0.0;
            const auto witness = hpo::cohypo_witness_search(phi, 8, 7);
            CHECK(witness.has_value() == !cohyponormal);
        }
    }
}

TEST_CASE("adjoint factorization residual is tiny for all valid symbols") {
    hpo::PointSampler sampler(53);
    const auto points = sampler.points(10);
    CHECK(hpo::adjoint_formula_residual(AffineSymbol(2.0, 1.0), points) <= 1e-13);
    CHECK(hpo::adjoint_formula_residual(AffineSymbol(1.0 / 3.0, Complex{2.0, 1.0}), points) <=
          1e-13);
    CHECK(hpo::adjoint_formula_residual(AffineSymbol(1.0, 0.0), points) == 0.0);
}

TEST_CASE("conjugate relation residual is tiny for all valid symbols") {
    hpo::PointSampler sampler(59);
    const auto points = sampler.points(10);
    CHECK(hpo::ua_relation_residual(4.0, Complex{1.0, 1.0}, points) <= 1e-13);
    CHECK(hpo::ua_relation_residual(0.5, kI, points) <= 1e-13);
    CHECK(hpo::ua_relation_residual(1.0, 0.0, points) == 0.0);
}

TEST_CASE("kernel operations are safe to call from concurrent threads") {
    hpo::PointSampler sampler(97);
    const auto points = sampler.points(8);
    const AffineSymbol phi(1.0, Complex{2.0, 3.0});
    const auto j = ConjugationSpec::j();
    const double expected = hpo::symmetry_residual(phi, j, points);

    std::atomic<int> mismatches{0};
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&] {
            for (int i = 0; i < 200; ++i) {
                if (hpo::symmetry_residual(phi, j, points) != expected) {
                    ++mismatches;
                }
                const auto witness = hpo::cohypo_witness_search(AffineSymbol(0.5, 1.0), 4, 3);
                if (!witness.has_value()) {
                    ++mismatches;
                }
            }
        });
    }
    for (auto& thread : threads) {
        thread.join();
    }
    CHECK(mismatches.load() == 0);
}
