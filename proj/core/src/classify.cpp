#include "hpo/classify.hpp"


#include "hpo/sampling.hpp"

namespace hpo {

namespace {

constexpr double kTightThreshold = 1e-12;
constexpr double kLooseThreshold = 1e-6;

std::optional<ConjugationSpec> certificate_for(const AffineSymbol& phi) {
    if (phi.a() == 1.0) {
        return ConjugationSpec::j();
    }
    if (phi.b() == Complex{}) {
        return ConjugationSpec::w0();
    }
    if (phi.is_automorphism()) {
        return ConjugationSpec::jr(phi.b().imag() / (phi.a() - 1.0));
    }
    return std::nullopt;
}

CrossCheck check_below(double measured, double threshold) {
    return {true, measured, threshold, measured <= threshold};
}

CrossCheck check_above(double measured, double threshold) {
    return {false, measured, threshold, measured > threshold};
}

} // namespace

std::vector<HalfPlanePoint> default_point_set(const AffineSymbol& phi, std::uint64_t seed,
                                              int n_points) {
    PointSampler sampler(seed);
    std::vector<HalfPlanePoint> points = sampler.points(n_points);
    if (const auto fp = fixed_point(phi); fp && fp->inside_domain) {
        points.emplace_back(fp->value);
    }
    return points;
}

ClassificationReport classify_operator(const AffineSymbol& phi, std::uint64_t seed) {
    const bool a_is_one = phi.a() == 1.0;
    const bool b_imaginary = phi.b().real() == 0.0;
    const bool b_real = phi.b().imag() == 0.0;

    ClassificationReport report{
        .symbol = phi,
        .symbol_class = classify_symbol(phi),
        .normal = a_is_one || b_imaginary,
        .self_adjoint = a_is_one && b_real,
        .unitary = a_is_one && b_imaginary,
        .complex_symmetric = a_is_one || b_imaginary,
        .cohyponormal = phi.a() >= 1.0 || b_imaginary,
        .certificate = certificate_for(phi),
        .residuals = {},
        .notes = {},
    };

    const auto points = default_point_set(phi, seed_for(seed, "classify-points"), 12);
    report.residuals["prop3_adjoint_formula"] = adjoint_formula_residual(phi, points);
    report.residuals["eq29_ua_relation"] = ua_relation_residual(phi.a(), phi.b(), points);

    if (report.certificate) {
        report.residuals["certificate_symmetry"] =
            symmetry_residual(phi, *report.certificate, points);
        PointSampler sampler(seed_for(seed, "classify-combos"));
        const auto combos = sampler.combos(12);
        const auto axioms = conjugation_axiom_residuals(*report.certificate, combos);
        report.residuals["certificate_involution"] = axioms.involution;
        report.residuals["certificate_antiunitarity"] = axioms.antiunitarity;
        if (report.certificate->tag() == ConjugationSpec::Tag::W0) {
            report.notes.push_back("the certificate W0 coincides with Jr(0)");
        }
    }

    const auto witness = cohypo_witness_search(phi, 8, seed_for(seed, "classify-witness"));
    report.residuals["cohypo_witness_violation"] = witness ? -witness->value : 0.0;

    return report;
}

std::map<std::string, CrossCheck> cross_validate(const AffineSymbol& phi, std::uint64_t seed,
                                                 int n_points) {
    std::map<std::string, CrossCheck> checks;
    const auto points = default_point_set(phi, seed_for(seed, "cross-points"), n_points);

    checks["prop3_adjoint_formula"] = check_below(adjoint_formula_residual(phi, points),
                                                  kTightThreshold);
    checks["eq29_ua_relation"] = check_below(ua_relation_residual(phi.a(), phi.b(), points),
                                             kTightThreshold);

    const auto certificate = certificate_for(phi);
    if (certificate) {
        checks["certificate_symmetry"] =
            check_below(symmetry_residual(phi, *certificate, points), kTightThreshold);
    }

    // Deliberately wrong conjugations must show a clear positive residual.
    // The identity operator is symmetric for every conjugation, so it has no
    // wrong direction to probe.
    if (!phi.is_identity()) {
        if (!certificate) {
            checks["wrong_j"] =
                check_above(symmetry_residual(phi, ConjugationSpec::j(), points), kLooseThreshold);
            checks["wrong_w0"] =
                check_above(symmetry_residual(phi, ConjugationSpec::w0(), points), kLooseThreshold);
        } else {
            switch (certificate->tag()) {
                case ConjugationSpec::Tag::J:
                    checks["wrong_w0"] = check_above(
                        symmetry_residual(phi, ConjugationSpec::w0(), points), kLooseThreshold);
                    break;
                case ConjugationSpec::Tag::W0:
                    checks["wrong_j"] = check_above(
                        symmetry_residual(phi, ConjugationSpec::j(), points), kLooseThreshold);
                    checks["wrong_jr_offset"] = check_above(
                        symmetry_residual(phi, ConjugationSpec::jr(0.1), points), kLooseThreshold);
                    break;
                default:
                    checks["wrong_j"] = check_above(
                        symmetry_residual(phi, ConjugationSpec::j(), points), kLooseThreshold);
                    checks["wrong_jr_offset"] = check_above(
                        symmetry_residual(phi, ConjugationSpec::jr(certificate->r() + 0.1), points),
                        kLooseThreshold);
                    break;
            }
        }
    }

    const bool cohyponormal = phi.a() >= 1.0 || phi.b().real() == 0.0;
    const auto witness = cohypo_witness_search(phi, 8, seed_for(seed, "cross-witness"));
    const double violation = witness ? -witness->value : 0.0;
    checks["thm101_witness_violation"] = cohyponormal ? check_below(violation, kTightThreshold)
                                                      : check_above(violation, kTightThreshold);

    return checks;
}

} // namespace hpo
