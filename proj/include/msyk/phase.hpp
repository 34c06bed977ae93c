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

#ifndef MSYK_PHASE_HPP
#define MSYK_PHASE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include <msyk/model.hpp>

namespace msyk {

/// The saddle condition in polar form: mu as a function of the angle,
/// mu(theta) = sin(theta) (J + U cos^{q-2}(theta)).
inline double mu_of_theta(double theta, double J, double U, int q) {
    return std::sin(theta) * (J + U * std::pow(std::cos(theta), q - 2));
}

/// One point of the phase diagram: every saddle angle solving
/// mu(theta) = mu, with the matching Lambda = mu / tan(theta).
struct PhasePoint {
    double mu = 0.0;
    std::vector<double> thetas;
    std::vector<double> lambdas;
};

/// All solutions theta in (0, pi/2] of mu_of_theta(theta) = mu, located by
/// sign changes on a fine grid and polished by bisection. mu = 0 returns
/// the trivial angle theta = 0 with Lambda = J + U.
inline PhasePoint solve_lambda(double mu, double J, double U, int q,
                               int grid = 2048) {
    if (mu < 0.0) throw std::invalid_argument("solve_lambda: mu must be >= 0");
    PhasePoint pt;
    pt.mu = mu;
    if (mu == 0.0) {
        pt.thetas.push_back(0.0);
        pt.lambdas.push_back(J + U);
        return pt;
    }
    auto f = [&](double th) { return mu_of_theta(th, J, U, q) - mu; };
    double prev_th = 0.0, prev_f = f(0.0);
    for (int i = 1; i <= grid; ++i) {
        double th = (M_PI / 2) * i / grid;
        double fv = f(th);
        if (prev_f == 0.0 || (prev_f < 0.0) != (fv < 0.0) || fv == 0.0) {
            double lo = prev_th, hi = th;
            double flo = prev_f;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = f(mid);
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
                if (hi - lo < 1e-12) break;
            }
            double th_root = 0.5 * (lo + hi);
            if (pt.thetas.empty() || th_root - pt.thetas.back() > 1e-9) {
                pt.thetas.push_back(th_root);
                double lam = (std::abs(th_root - M_PI / 2) < 1e-9)
                                 ? 0.0
                                 : mu / std::tan(th_root);
                pt.lambdas.push_back(lam);
            }
        }
        prev_th = th;
        prev_f = fv;
    }
    return pt;
}

/// Weak-monitoring branch Lambda = J s + U s^{q-3} with
/// s = sqrt(1 - (mu / J)^2), exact at U = 0 and perturbative otherwise.
/// Valid for mu < J.
inline double perturbative_lambda(double mu, double J, double U, int q) {
    if (mu >= J) throw std::invalid_argument("perturbative_lambda: requires mu < J");
    double s2 = 1.0 - (mu / J) * (mu / J);
    return J * std::sqrt(s2) + U * std::pow(s2, 0.5 * (q - 3));
}

enum class TransitionOrder { Continuous, FirstOrder, Tricritical };

struct TransitionInfo {
    TransitionOrder order = TransitionOrder::Continuous;
    double mu_endpoint = 0.0;    ///< mu(pi/2) = J, where the nontrivial
                                 ///< angle terminates
    double mu_spinodal = 0.0;    ///< global max of mu(theta); exceeds
                                 ///< mu_endpoint only for a first-order
                                 ///< transition, giving the coexistence
                                 ///< window [mu_endpoint, mu_spinodal]
};

/// Coefficient of (pi/2 - theta)^2 in mu(theta) near the critical angle:
/// U - J/2 at q = 4 and -J/2 for larger q. Its sign decides whether
/// mu(theta) peaks at the endpoint (continuous transition) or folds back
/// (first order); at q = 4 it vanishes on the tricritical line J = 2U.
inline double mu_curvature_at_critical(double J, double U, int q) {
    return (q == 4) ? (U - 0.5 * J) : (-0.5 * J);
}

inline TransitionInfo classify_transition(double J, double U, int q) {
    TransitionInfo info;
    info.mu_endpoint = mu_of_theta(M_PI / 2, J, U, q);
    // maximize mu(theta) by golden-section search.
    double lo = 0.0, hi = M_PI / 2;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
    double fa = mu_of_theta(a, J, U, q), fb = mu_of_theta(b, J, U, q);
    for (int it = 0; it < 200; ++it) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + gr * (hi - lo);
            fb = mu_of_theta(b, J, U, q);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - gr * (hi - lo);
            fa = mu_of_theta(a, J, U, q);
        }
    }
    info.mu_spinodal = std::max(info.mu_endpoint,
                                mu_of_theta(0.5 * (lo + hi), J, U, q));
    double c2 = mu_curvature_at_critical(J, U, q);
    double tol = 1e-9 * (J + U);
    if (info.mu_spinodal > info.mu_endpoint * (1.0 + 1e-9)) {
        info.order = TransitionOrder::FirstOrder;
    } else if (std::abs(c2) <= tol) {
        info.order = TransitionOrder::Tricritical;
    } else {
        info.order = TransitionOrder::Continuous;
    }
    return info;
}

}  // namespace msyk

#endif  // MSYK_PHASE_HPP
