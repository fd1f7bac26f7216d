#pragma once

// Flux-balance residuals for the solved steady-state tables. Each entry is
// substituted into the zero-sum form "sum over transitions of rate * jump",
// which evaluates in a different order than the solver's rearranged
// quotients, so agreement is a real check rather than an identity.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>

#include "gossip/analytics.hpp"

namespace testsupport {

/// |sum of fluxes| relative to the largest single flux.
inline double rel_residual(std::initializer_list<double> fluxes) {
    double sum = 0.0;
    double scale = 0.0;
    for (double flux : fluxes) {
        sum += flux;
        scale = std::max(scale, std::abs(flux));
    }
    return scale == 0.0 ? 0.0 : std::abs(sum) / scale;
}

/// Largest relative residual over every entry of every solved table.
inline double max_residual(const gossip::Params& params,
                           const gossip::AnalyticTables& tables) {
    const std::uint32_t n = params.n;
    const std::uint32_t gap = params.gap;
    double worst = 0.0;
    const auto note = [&worst](double residual) { worst = std::max(worst, residual); };

    for (std::uint32_t k = 1; k <= n; ++k) {
        const gossip::RateTerms rates = gossip::rate_terms(params, k);

        for (std::uint32_t g = 0; g < gap; ++g) {
            const double here = tables.c[k - 1][g];
            const double aged = g == 0 ? 0.0 : tables.c[k - 1][g - 1];
            const double grown = k == n ? 0.0 : tables.c[k][g];
            note(rel_residual({params.lambda_e * (aged - here),
                               rates.source_reliable * (1.0 - here),
                               rates.gossip * (grown - here)}));
        }
        {
            const double here = tables.b[k - 1];
            const double boundary = gap == 0 ? 0.0 : tables.c[k - 1][gap - 1];
            const double grown = k == n ? 0.0 : tables.b[k];
            note(rel_residual({params.lambda_e * ((1.0 - boundary) - here),
                               rates.source_reliable * (0.0 - here),
                               rates.gossip * (grown - here)}));
        }
        {
            const double here = tables.a[k - 1];
            const double grown = k == n ? 0.0 : tables.a[k];
            note(rel_residual({rates.source_unreliable * (tables.b[k - 1] - here),
                               rates.source_reliable * (0.0 - here),
                               rates.gossip * (grown - here)}));
        }
        for (std::uint32_t g = 0; g <= gap; ++g) {
            const double here = tables.d[k - 1][g];
            const double aged =
                g == 0 ? 0.0 : tables.d[k - 1][g - 1] + tables.c[k - 1][g - 1];
            const double grown = k == n ? 0.0 : tables.d[k][g];
            note(rel_residual({params.lambda_e * (aged - here),
                               rates.source_reliable * (0.0 - here),
                               rates.gossip * (grown - here)}));
        }
        {
            const double here = tables.e[k - 1];
            const double grown = k == n ? 0.0 : tables.e[k];
            note(rel_residual({params.lambda_e,
                               rates.source_unreliable * (tables.d[k - 1][gap] - here),
                               rates.source_reliable * (0.0 - here),
                               rates.gossip * (grown - here)}));
        }
    }
    return worst;
}

}  // namespace testsupport
