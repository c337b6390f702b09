#pragma once

// Named verification suites over a plan of models, with the bundled
// worked-example plan.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

#include "h1/verify/checks.hpp"

namespace h1::verify {

enum class Suite { all, orthonormality, residual, oracle, duality, contraction };

inline std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "all") return Suite::all;
    if (name == "orthonormality") return Suite::orthonormality;
    if (name == "residual") return Suite::residual;
    if (name == "oracle") return Suite::oracle;
    if (name == "duality") return Suite::duality;
    if (name == "contraction") return Suite::contraction;
    return std::nullopt;
}

struct VerificationPlan {
    std::vector<oscillator::OscillatorModel> oscillators;
    std::vector<coulomb::CoulombModel> coulombs;
    std::vector<OscillatorContraction> oscillator_contractions;
    std::vector<CoulombContraction> coulomb_contractions;
};

/**
 * @brief The worked parameter sets.
 *
 * Oscillator omega = sqrt(30), R = 1, k = 1 (k0 = 11/2); Coulomb mu = 6, R = 1
 * with p = 1/2 (nu = 1) and p = 1/4 on both branches (nu = 3/4, 1/4);
 * contraction sweeps for the Coulomb ground state (mu = 1, nu = 1) and the
 * oscillator ground state (omega = 1, k = 1).
 */
inline VerificationPlan paper_demo_plan() {
    VerificationPlan plan;
    plan.oscillators.emplace_back(std::sqrt(30.0), 1.0, 1.0, Branch::plus);
    plan.coulombs.emplace_back(6.0, 1.0, 0.5, Branch::plus);
    plan.coulombs.emplace_back(6.0, 1.0, 0.25, Branch::plus);
    plan.coulombs.emplace_back(6.0, 1.0, 0.25, Branch::minus);
    plan.coulomb_contractions.push_back({1.0, 0.5, Branch::plus, 0, {1e2, 1e3}});
    plan.oscillator_contractions.push_back({1.0, 1.0, Branch::plus, 0, {1e2, 1e3, 1e4}});
    return plan;
}

/// Runs the selected checks; reports are sorted by check name, then parameters.
inline std::vector<VerificationReport> run_suite(Suite suite, const VerificationPlan& plan,
                                                 const CheckOptions& opt = {}) {
    std::vector<VerificationReport> out;
    const auto append = [&out](std::vector<VerificationReport> r) {
        out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    };
    const auto wants = [suite](Suite s) { return suite == Suite::all || suite == s; };
    if (wants(Suite::orthonormality)) {
        for (const auto& m : plan.oscillators) append(check_orthonormality(m, opt));
        for (const auto& m : plan.coulombs) append(check_orthonormality(m, opt));
    }
    if (wants(Suite::residual)) {
        for (const auto& m : plan.oscillators) append(check_residual(m, opt));
        for (const auto& m : plan.coulombs) append(check_residual(m, opt));
    }
    if (wants(Suite::oracle)) {
        for (const auto& m : plan.oscillators) append(check_oracle(m, opt));
        for (const auto& m : plan.coulombs) append(check_oracle(m, opt));
    }
    if (wants(Suite::duality)) {
        for (const auto& m : plan.coulombs)
            for (unsigned n = 0; n < coulomb::bound_state_count(m); ++n)
                append(check_duality(m, n, opt));
    }
    if (wants(Suite::contraction)) {
        for (const auto& c : plan.oscillator_contractions) append(check_contraction(c, opt));
        for (const auto& c : plan.coulomb_contractions) append(check_contraction(c, opt));
    }
    std::stable_sort(out.begin(), out.end(), report_order);
    return out;
}

inline bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

} // namespace h1::verify
