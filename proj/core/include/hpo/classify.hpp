#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpo/kernel.hpp"
#include "hpo/lfmap.hpp"

namespace hpo {

/// Rule-based operator classification with a certificate conjugation where
/// one exists, plus measured residuals from the kernel layer. The flags are
/// exact parameter rules; the residuals are the numerical evidence.
struct ClassificationReport {
    AffineSymbol symbol;
    SymbolClass symbol_class;
    bool normal = false;             ///< a = 1 or Re(b) = 0
    bool self_adjoint = false;       ///< a = 1 and b real >= 0
    bool unitary = false;            ///< a = 1 and Re(b) = 0
    bool complex_symmetric = false;  ///< equivalent to normal
    bool cohyponormal = false;       ///< a >= 1 or Re(b) = 0
    std::optional<ConjugationSpec> certificate;
    std::map<std::string, double> residuals;
    std::vector<std::string> notes;
};

/// One cross-validation entry: `expect_below` states the direction the rule
/// flags predict; `pass` records whether the measurement agrees.
struct CrossCheck {
    bool expect_below = true;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// Classifies C_phi per the exact parameter rules and fills residuals from
/// the kernel layer over a default point set (12 seeded points plus the
/// fixed point of phi when it lies in the open half-plane).
ClassificationReport classify_operator(const AffineSymbol& phi, std::uint64_t seed = 0);

/// Binds the rule flags to numerical evidence: certificate residuals must be
/// tiny, deliberately wrong conjugations must not be, the witness search must
/// agree with the cohyponormality flag, and the adjoint/conjugate-relation
/// identities must hold for every symbol.
std::map<std::string, CrossCheck> cross_validate(const AffineSymbol& phi, std::uint64_t seed,
                                                 int n_points);

/// Default validation points: n from the seeded sampler plus the interior
/// fixed point when present.
std::vector<HalfPlanePoint> default_point_set(const AffineSymbol& phi, std::uint64_t seed,
                                              int n_points);

} // namespace hpo
