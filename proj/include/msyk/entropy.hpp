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

#ifndef MSYK_ENTROPY_HPP
#define MSYK_ENTROPY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <msyk/amplitudes.hpp>
#include <msyk/permutations.hpp>

namespace msyk {

/// Replica entropy of a single fully scrambled cluster of N Majoranas cut
/// in half: (N - 2) log 2 + log(Catalan(n)) / (1 - n).
inline double cluster_renyi(double n, int N) {
    if (N < 2 || N % 2 != 0)
        throw std::invalid_argument("cluster_renyi: N must be even and >= 2");
    if (n <= 0.0 || std::abs(n - 1.0) < 1e-12)
        throw std::invalid_argument("cluster_renyi: n must be positive and != 1");
    double ni = std::round(n);
    if (std::abs(n - ni) > 1e-9 || ni < 1)
        throw std::invalid_argument("cluster_renyi: integer n required");
    double log_cat =
        std::log(catalan(static_cast<int>(ni)).convert_to<double>());
    return (N - 2) * std::log(2.0) + log_cat / (1.0 - n);
}

/// n -> 1 limit of cluster_renyi: (N - 2) log 2 - 1/2, using the Catalan
/// continuation slope d log C(n) / dn |_{n=1} = 1/2.
inline double cluster_renyi_vn(int N) {
    if (N < 2 || N % 2 != 0)
        throw std::invalid_argument("cluster_renyi_vn: N must be even and >= 2");
    return (N - 2) * std::log(2.0) - 0.5;
}

/// Analytic continuation of log of the monitored cycle weight divided by
/// its n = 1 normalization: log g(x) with
/// g(x) = 2^{1 - 2x} cos^x(theta) (T_x(sec theta) + 1) / cos^{2x}(theta/2),
/// so g(1) = 1 for every theta and g(x) -> 1 as theta -> pi/2.
inline double continued_quasi_log(double x, double theta) {
    if (theta < 0.0 || theta > M_PI / 2)
        throw std::invalid_argument("continued_quasi_log: theta must be in [0, pi/2]");
    if (std::abs(theta - M_PI / 2) < 1e-13) return 0.0;
    double sec = 1.0 / std::cos(theta);
    double log_g = (1.0 - 2.0 * x) * std::log(2.0) + x * std::log(std::cos(theta))
                 + std::log(chebyshev_T(x, sec) + 1.0)
                 - 2.0 * x * std::log(std::cos(0.5 * theta));
    return log_g;
}

struct QuasiEntropyResult {
    double order = 2.0;
    double value = 0.0;                       ///< total quasi entropy
    double density = 0.0;                     ///< value / (N L)
    std::vector<double> saddle_logs;          ///< per-saddle log weights
    std::vector<PermutationPair> saddles;
};

/// Quasi entropy S^{(n)} of the half-system cut for integer n >= 2,
/// summing all maximal permutation saddles in log space:
/// S^{(n)} = [L (n - 1) log 2 + LSE_mu((N L / 2) log b_mu)] / (1 - n),
/// with b_mu = pair_pfaffian_factor(mu, theta) / cos^{4n}(theta / 2).
inline QuasiEntropyResult quasi_entropy(int n, double theta, int N, int L) {
    if (n < 2 || n > 8) throw std::invalid_argument("quasi_entropy: n must be in [2, 8]");
    if (N < 2 || N % 2 != 0)
        throw std::invalid_argument("quasi_entropy: N must be even and >= 2");
    if (L < 1) throw std::invalid_argument("quasi_entropy: L must be >= 1");
    if (theta < 0.0 || theta > M_PI / 2)
        throw std::invalid_argument("quasi_entropy: theta must be in [0, pi/2]");

    QuasiEntropyResult res;
    res.order = n;
    res.saddles = enumerate_maximal_pairs(n);
    bool critical = std::abs(theta - M_PI / 2) < 1e-13;
    double log_norm = 4.0 * n * std::log(std::cos(0.5 * theta));
    for (const auto& pair : res.saddles) {
        double log_b = critical ? 0.0
                                : log_pair_pfaffian_factor(pair, theta) - log_norm;
        res.saddle_logs.push_back(0.5 * N * L * log_b);
    }
    double mx = *std::max_element(res.saddle_logs.begin(), res.saddle_logs.end());
    double lse = 0.0;
    for (double v : res.saddle_logs) lse += std::exp(v - mx);
    lse = mx + std::log(lse);
    res.value = (L * (n - 1.0) * std::log(2.0) + lse) / (1.0 - n);
    res.density = res.value / (static_cast<double>(N) * L);
    return res;
}

/// Von Neumann entropy density (entropy per Majorana of the cut cluster)
/// in the volume-law phase:
/// sigma(theta) = log(2 (1 + sec theta)) - tan(theta/2) arccosh(sec theta),
/// with sigma(0) = 2 log 2 and sigma(pi/2) = 0.
inline double vn_entropy_density(double theta) {
    if (theta < 0.0 || theta > M_PI / 2)
        throw std::invalid_argument("vn_entropy_density: theta must be in [0, pi/2]");
    if (std::abs(theta - M_PI / 2) < 1e-13) return 0.0;
    double sec = 1.0 / std::cos(theta);
    return std::log(2.0 * (1.0 + sec)) - std::tan(0.5 * theta) * std::acosh(sec);
}

/// The same density assembled term by term from the derivative of the
/// continued cycle weight, kept as an independent route:
/// 2 log 2 - log cos(theta) + 2 log cos(theta/2)
/// - tan(theta/2) arccosh(sec theta).
inline double vn_entropy_density_deriv_route(double theta) {
    if (std::abs(theta - M_PI / 2) < 1e-13) return 0.0;
    double sec = 1.0 / std::cos(theta);
    return 2.0 * std::log(2.0) - std::log(std::cos(theta))
         + 2.0 * std::log(std::cos(0.5 * theta))
         - std::tan(0.5 * theta) * std::acosh(sec);
}

/// Central finite difference of -log g at x = 1, matching
/// vn_entropy_density up to O(h^2).
inline double vn_entropy_density_fd(double theta, double h = 1e-4) {
    return -(continued_quasi_log(1.0 + h, theta)
             - continued_quasi_log(1.0 - h, theta)) / (2.0 * h);
}

/// Leading behavior of sigma as theta -> pi/2, in terms of
/// eps = pi/2 - theta: eps (log(2 e) - log eps). The form printed with the
/// opposite overall sign is available behind the flag for comparison.
inline double near_critical_density(double eps, bool printed_form = false) {
    if (eps <= 0.0) throw std::invalid_argument("near_critical_density: eps must be > 0");
    double v = eps * (std::log(2.0 * M_E) - std::log(eps));
    return printed_form ? -v : v;
}

/// Von Neumann entropy of an unequal bipartition: the smaller side with
/// L_A sites carries sigma(theta) N L_A.
inline double vn_entropy_unequal_cut(double theta, int N, int L_A) {
    if (L_A < 0) throw std::invalid_argument("vn_entropy_unequal_cut: L_A must be >= 0");
    return vn_entropy_density(theta) * N * L_A;
}

/// Spectral density of the half-cut reduced density matrix of a scrambled
/// cluster of N Majoranas: D(lam) = 2^{2N-5} / pi * sqrt(lam (lam_max -
/// lam)) / lam on [0, lam_max], lam_max = 2^{4-N}.
inline double spectrum_density(double lam, int N) {
    double lam_max = std::pow(2.0, 4 - N);
    if (lam <= 0.0 || lam >= lam_max) return 0.0;
    return std::pow(2.0, 2 * N - 5) / M_PI * std::sqrt(lam * (lam_max - lam)) / lam;
}

/// Moments int lam^k D(lam) d lam via Gauss-Chebyshev quadrature adapted
/// to the sqrt((lam_max - lam) lam) weight. k = 0 counts states (2^{N-2}),
/// k = 1 gives unit trace.
inline double spectrum_moment(int N, double k, int quad_points = 4096) {
    double lam_max = std::pow(2.0, 4 - N);
    double pref = std::pow(2.0, 2 * N - 5) / M_PI;
    // substitute lam = lam_max (1 + cos t) / 2, sqrt weight absorbed.
    double sum = 0.0;
    for (int i = 1; i <= quad_points; ++i) {
        double t = M_PI * (i - 0.5) / quad_points;
        double lam = 0.5 * lam_max * (1.0 + std::cos(t));
        sum += std::pow(lam, k) / lam * std::sin(t) * std::sin(t);
    }
    double jac = M_PI / quad_points * 0.25 * lam_max * lam_max;
    return pref * jac * sum;
}

/// Trace of the resolvent (z - rho_A)^{-1} summed over the 2^{N-2}
/// eigenvalues, from the closed square-root form
/// R(z) = 2^{2N-5} (1 - sqrt(1 - lam_max / z)), principal branch.
inline std::complex<double> resolvent_trace(std::complex<double> z, int N) {
    double lam_max = std::pow(2.0, 4 - N);
    return std::pow(2.0, 2 * N - 5) * (1.0 - std::sqrt(1.0 - lam_max / z));
}

}  // namespace msyk

#endif  // MSYK_ENTROPY_HPP
