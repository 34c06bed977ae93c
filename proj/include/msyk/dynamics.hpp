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

#ifndef MSYK_DYNAMICS_HPP
#define MSYK_DYNAMICS_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <msyk/special.hpp>

namespace msyk {

/// The six correlator components entering the saddle equations of the
/// interacting two-sided problem.
struct OdeState {
    double x1 = 0.0, x2 = 0.0, z1 = 0.0;
    double y1 = 0.0, y2 = 0.0, w1 = 0.0;
};

inline OdeState ode_rhs(const OdeState& s, double J, double U) {
    OdeState d;
    d.x1 = 4.0 * J * s.x2 * s.z1 + 2.0 * U * s.x2 * s.z1 * (s.y1 * s.y1 + s.w1 * s.w1);
    d.x2 = -4.0 * J * s.x1 * s.z1 - 2.0 * U * s.x1 * s.z1 * (s.y2 * s.y2 + s.w1 * s.w1);
    d.z1 = 2.0 * U * s.x1 * s.x2 * (s.y1 * s.y1 - s.y2 * s.y2);
    d.y1 = 4.0 * J * s.y2 * s.w1 + 2.0 * U * s.y2 * s.w1 * (s.x1 * s.x1 + s.z1 * s.z1);
    d.y2 = -4.0 * J * s.y1 * s.w1 - 2.0 * U * s.y1 * s.w1 * (s.x2 * s.x2 + s.z1 * s.z1);
    d.w1 = 2.0 * U * s.y1 * s.y2 * (s.x1 * s.x1 - s.x2 * s.x2);
    return d;
}

struct OdeTrace {
    std::vector<double> t;
    std::vector<OdeState> state;
};

/// Classical fourth-order Runge-Kutta with a fixed step, capped at
/// 0.01 / sqrt(U (2J + U)) to stay well inside the stiffness budget of
/// the hyperbolic solutions.
inline OdeTrace integrate(const OdeState& init, double J, double U, double t0,
                          double t1, double dt) {
    if (t1 < t0) throw std::invalid_argument("integrate: t1 must be >= t0");
    if (dt <= 0.0) throw std::invalid_argument("integrate: dt must be > 0");
    double scale = std::sqrt(std::max(U * (2.0 * J + U), 1e-300));
    double cap = 0.01 / scale;
    if (U > 0.0 && dt > cap) dt = cap;

    auto add = [](const OdeState& a, const OdeState& b, double f) {
        return OdeState{a.x1 + f * b.x1, a.x2 + f * b.x2, a.z1 + f * b.z1,
                        a.y1 + f * b.y1, a.y2 + f * b.y2, a.w1 + f * b.w1};
    };

    OdeTrace tr;
    OdeState s = init;
    double t = t0;
    tr.t.push_back(t);
    tr.state.push_back(s);
    while (t < t1 - 1e-15) {
        double h = std::min(dt, t1 - t);
        OdeState k1 = ode_rhs(s, J, U);
        OdeState k2 = ode_rhs(add(s, k1, 0.5 * h), J, U);
        OdeState k3 = ode_rhs(add(s, k2, 0.5 * h), J, U);
        OdeState k4 = ode_rhs(add(s, k3, h), J, U);
        OdeState sum = add(add(add(k1, k2, 2.0), k3, 2.0), k4, 1.0);
        s = add(s, sum, h / 6.0);
        t += h;
        tr.t.push_back(t);
        tr.state.push_back(s);
    }
    return tr;
}

/// Offset t0 = arccosh((J + U) / J) / (4 sqrt(U (2J + U))) that centers
/// the kink of the hyperbolic solution.
inline double shift_t0(double J, double U) {
    if (J <= 0.0 || U <= 0.0) throw std::invalid_argument("shift_t0: J, U must be > 0");
    return std::acosh((J + U) / J) / (4.0 * std::sqrt(U * (2.0 * J + U)));
}

/// Closed-form kink solution of the x sector with the y sector switched
/// off: x1 = tanh(s (t - t0)), x2 = -sqrt((2J + U) / 2J) sech(s (t - t0)),
/// z1 = -sqrt(U / 2J) sech(s (t - t0)), with s = 2 sqrt(U (2J + U)).
inline OdeState hyperbolic_solution(double t, double J, double U, double t0) {
    double s = 2.0 * std::sqrt(U * (2.0 * J + U));
    double arg = s * (t - t0);
    OdeState out;
    out.x1 = std::tanh(arg);
    out.x2 = -std::sqrt((2.0 * J + U) / (2.0 * J)) / std::cosh(arg);
    out.z1 = -std::sqrt(U / (2.0 * J)) / std::cosh(arg);
    return out;
}

/// Which closed form to use for the x2 component of the oscillatory
/// solution family; Corrected solves the equations exactly, Printed keeps
/// the (1 - sn)^{1/2} variant for comparison.
enum class EllipticBranch { Corrected, Printed };

/// Two-parameter oscillatory solution of the x sector (y sector pinned at
/// y1 = w1 = 0, y2 = -1), with modulus m = c1 / c2 and phase
/// u = 2 sqrt(U (2J + U) c2) t:
/// x1 = sqrt(c1) sn(u, m),
/// x2 = -sqrt((2J + U) c1 / 2J) cn(u, m),
/// z1 = -sqrt(U c2 / 2J) dn(u, m).
/// The conserved combination is x1^2 + x2^2 - z1^2 =
/// c1 + U (c1 - c2) / 2J. Moduli above 1 (c1 > c2) fold back through the
/// reciprocal-modulus transformation inside jacobi_elliptic. The Printed
/// branch replaces cn by (1 - sn)^{1/2}, kept for comparison only.
inline OdeState elliptic_solution(double t, double J, double U, double c1, double c2,
                                  EllipticBranch branch = EllipticBranch::Corrected) {
    if (c1 <= 0.0 || c2 <= 0.0)
        throw std::invalid_argument("elliptic_solution: c1, c2 must be > 0");
    double m = c1 / c2;
    double rate = 2.0 * std::sqrt(U * (2.0 * J + U) * c2);
    JacobiElliptic jac = jacobi_elliptic(rate * t, m);
    OdeState out;
    out.x1 = std::sqrt(c1) * jac.sn;
    double amp2 = (2.0 * J + U) / (2.0 * J);
    if (branch == EllipticBranch::Corrected) {
        out.x2 = -std::sqrt(amp2 * c1) * jac.cn;
    } else {
        out.x2 = -std::sqrt(amp2 * c1) * std::sqrt(std::max(0.0, 1.0 - jac.sn));
    }
    out.z1 = -std::sqrt(U / (2.0 * J) * c2) * jac.dn;
    return out;
}

}  // namespace msyk

#endif  // MSYK_DYNAMICS_HPP
