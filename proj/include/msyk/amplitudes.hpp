/*
 * Copyright 2026 The msyk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MSYK_AMPLITUDES_HPP
#define MSYK_AMPLITUDES_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include <msyk/permutations.hpp>
#include <msyk/special.hpp>

namespace msyk {

/// Single-particle momenta of a free chain wound around a cycle of the
/// given length: periodic (k = 2 pi j / n, including 0) when the length is
/// odd, antiperiodic (k = (2j - 1) pi / n) when even.
struct MomentumGrid {
    int length = 0;
    bool antiperiodic = false;
    std::vector<double> momenta;  ///< all n momenta in [0, 2 pi)
};

inline MomentumGrid momentum_grid(int n) {
    if (n < 1) throw std::invalid_argument("momentum_grid: n must be >= 1");
    MomentumGrid g;
    g.length = n;
    g.antiperiodic = (n % 2 == 0);
    g.momenta.reserve(n);
    for (int j = 0; j < n; ++j) {
        double k = g.antiperiodic ? (2.0 * j + 1.0) * M_PI / n : 2.0 * j * M_PI / n;
        g.momenta.push_back(k);
    }
    return g;
}

/// Large-T form of a single-cycle amplitude: the amplitude approaches
/// coefficient * exp(growth_exponent * T). stripped_value is the
/// coefficient; for the unitary point it equals 2^{1 - n}.
struct CycleAmplitude {
    double growth_exponent = 0.0;
    double stripped_value = 0.0;
};

/// Late-time data of a length-n cycle of the purely unitary chain with
/// quadratic scale lambda: growth n lambda / 2, coefficient 2^{1 - n}.
inline CycleAmplitude unitary_cycle_amplitude(int n, double lambda) {
    if (n < 1) throw std::invalid_argument("unitary_cycle_amplitude: n must be >= 1");
    return CycleAmplitude{0.5 * n * lambda, std::pow(2.0, 1.0 - n)};
}

/// Exact finite-T amplitude of a single unitary chain of cycle length n,
/// as a product over the momentum grid:
/// exp(n mod 2 * lambda T / 2) * prod_{k > 0} (cos^2(k/2) e^{lambda T}
/// + sin^2(k/2) e^{-lambda T}), with momenta paired k <-> 2 pi - k.
inline double unitary_cycle_amplitude_exact(int n, double lambda, double T) {
    MomentumGrid g = momentum_grid(n);
    double log_amp = (n % 2 == 1) ? 0.5 * lambda * T : 0.0;
    for (double k : g.momenta) {
        if (k <= 1e-15 || k >= M_PI - 1e-15) continue;
        double c = std::cos(0.5 * k), s = std::sin(0.5 * k);
        double big = lambda * T + std::log(c * c + s * s * std::exp(-2.0 * lambda * T));
        log_amp += big;
    }
    return std::exp(log_amp);
}

/// Time-independent weight of a length-n cycle of the monitored two-chain
/// system at angle theta, after stripping exp(n Lambda T sec(theta)):
/// 2^{1 - 2n} cos^n(theta) (T_n(sec theta) + 1), evaluated through the
/// Chebyshev form. theta = pi/2 is the direct product limit 2^{-n}.
inline double monitored_cycle_factor(int n, double theta) {
    if (n < 1) throw std::invalid_argument("monitored_cycle_factor: n must be >= 1");
    if (theta < 0.0 || theta > M_PI / 2)
        throw std::invalid_argument("monitored_cycle_factor: theta must be in [0, pi/2]");
    if (std::abs(theta - M_PI / 2) < 1e-13) return std::pow(2.0, -n);
    double sec = 1.0 / std::cos(theta);
    return std::pow(2.0, 1.0 - 2.0 * n) * std::pow(std::cos(theta), n)
         * (chebyshev_T(static_cast<double>(n), sec) + 1.0);
}

/// Same quantity evaluated as the momentum-space product
/// prod_k (1 + s cos(theta) cos(k)) / 2 over the parity-matched grid,
/// with s = +1 on the periodic grid and -1 on the antiperiodic one.
/// Kept as an independent route for cross-checks.
inline double monitored_cycle_factor_direct(int n, double theta) {
    MomentumGrid g = momentum_grid(n);
    double sign = g.antiperiodic ? -1.0 : 1.0;
    double out = 1.0;
    for (double k : g.momenta)
        out *= 0.5 * (1.0 + sign * std::cos(theta) * std::cos(k));
    return out;
}

/// Product of monitored_cycle_factor over all n + 1 cycles of a maximal
/// pair. At theta = 0 this reduces to 2^{2 - 2n} for every maximal pair.
inline std::vector<int> pair_cycle_lengths(const PermutationPair& pair) {
    std::vector<int> lens;
    CycleDecomposition da(pair.tau_a());
    CycleDecomposition db(pair.tau_abar);
    for (const auto& cyc : da.cycles()) lens.push_back(static_cast<int>(cyc.size()));
    for (const auto& cyc : db.cycles()) lens.push_back(static_cast<int>(cyc.size()));
    return lens;
}

inline double pair_pfaffian_factor(const PermutationPair& pair, double theta) {
    double out = 1.0;
    for (int len : pair_cycle_lengths(pair)) out *= monitored_cycle_factor(len, theta);
    return out;
}

/// log of pair_pfaffian_factor, for use inside saddle sums at large N L.
inline double log_pair_pfaffian_factor(const PermutationPair& pair, double theta) {
    double out = 0.0;
    for (int len : pair_cycle_lengths(pair))
        out += std::log(monitored_cycle_factor(len, theta));
    return out;
}

}  // namespace msyk

#endif  // MSYK_AMPLITUDES_HPP
