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

#include <catch2/catch_amalgamated.hpp>

#include <msyk/dynamics.hpp>

using namespace msyk;

namespace {

OdeState with_steady_y(OdeState s) {
    s.y1 = 0.0;
    s.y2 = -1.0;
    s.w1 = 0.0;
    return s;
}

double conserved_x(const OdeState& s) {
    return s.x1 * s.x1 + s.x2 * s.x2 - s.z1 * s.z1;
}

}  // namespace

TEST_CASE("hyperbolic solution satisfies the reduced equations") {
    double J = 1.0, U = 0.4;
    double t0 = shift_t0(J, U);
    for (double t : {-1.0, 0.0, t0, t0 + 0.7, 3.0}) {
        OdeState s = with_steady_y(hyperbolic_solution(t, J, U, t0));
        OdeState d = ode_rhs(s, J, U);
        double h = 1e-6;
        OdeState sp = hyperbolic_solution(t + h, J, U, t0);
        OdeState sm = hyperbolic_solution(t - h, J, U, t0);
        REQUIRE(d.x1 == Catch::Approx((sp.x1 - sm.x1) / (2 * h)).margin(1e-7));
        REQUIRE(d.x2 == Catch::Approx((sp.x2 - sm.x2) / (2 * h)).margin(1e-7));
        REQUIRE(d.z1 == Catch::Approx((sp.z1 - sm.z1) / (2 * h)).margin(1e-7));
        REQUIRE(d.y1 == 0.0);
        REQUIRE(d.y2 == 0.0);
        REQUIRE(d.w1 == 0.0);
    }
}

TEST_CASE("integration tracks the hyperbolic solution") {
    double J = 1.0, U = 0.4;
    double t0 = shift_t0(J, U);
    double ta = t0 - 2.0, tb = t0 + 2.0;
    OdeState init = with_steady_y(hyperbolic_solution(ta, J, U, t0));
    OdeTrace tr = integrate(init, J, U, ta, tb, 0.1);
    for (std::size_t i = 0; i < tr.t.size(); i += 50) {
        OdeState want = hyperbolic_solution(tr.t[i], J, U, t0);
        REQUIRE(tr.state[i].x1 == Catch::Approx(want.x1).margin(1e-8));
        REQUIRE(tr.state[i].x2 == Catch::Approx(want.x2).margin(1e-8));
        REQUIRE(tr.state[i].z1 == Catch::Approx(want.z1).margin(1e-8));
        REQUIRE(tr.state[i].y2 == -1.0);
    }
    // conserved combination stays put
    double c0 = conserved_x(tr.state.front());
    for (const auto& s : tr.state)
        REQUIRE(conserved_x(s) == Catch::Approx(c0).margin(1e-10));
}

TEST_CASE("corrected elliptic branch satisfies the reduced equations") {
    double J = 1.0, U = 0.4, c1 = 0.6, c2 = 0.9;
    for (double t : {-2.0, -0.3, 0.0, 0.8, 2.4, 5.0}) {
        OdeState s = with_steady_y(elliptic_solution(t, J, U, c1, c2));
        OdeState d = ode_rhs(s, J, U);
        double h = 1e-6;
        OdeState sp = elliptic_solution(t + h, J, U, c1, c2);
        OdeState sm = elliptic_solution(t - h, J, U, c1, c2);
        REQUIRE(d.x1 == Catch::Approx((sp.x1 - sm.x1) / (2 * h)).margin(1e-6));
        REQUIRE(d.x2 == Catch::Approx((sp.x2 - sm.x2) / (2 * h)).margin(1e-6));
        REQUIRE(d.z1 == Catch::Approx((sp.z1 - sm.z1) / (2 * h)).margin(1e-6));
        REQUIRE(conserved_x(s)
                == Catch::Approx(c1 + U * (c1 - c2) / (2 * J)).margin(1e-10));
    }
}

TEST_CASE("printed elliptic branch violates the equations") {
    double J = 1.0, U = 0.4, c1 = 0.6, c2 = 0.9;
    double worst = 0.0;
    for (double t : {0.3, 0.9, 1.7}) {
        OdeState s = with_steady_y(
            elliptic_solution(t, J, U, c1, c2, EllipticBranch::Printed));
        OdeState d = ode_rhs(s, J, U);
        double h = 1e-6;
        OdeState sp = elliptic_solution(t + h, J, U, c1, c2, EllipticBranch::Printed);
        OdeState sm = elliptic_solution(t - h, J, U, c1, c2, EllipticBranch::Printed);
        worst = std::max(worst, std::abs(d.x2 - (sp.x2 - sm.x2) / (2 * h)));
    }
    REQUIRE(worst > 1e-2);
}

TEST_CASE("modulus above one stays bounded and solves the equations") {
    double J = 1.0, U = 0.4, c1 = 1.0, c2 = 1.0 - 1e-7;
    double amp = 0.0;
    for (int i = 0; i <= 400; ++i) {
        double t = -10.0 + 20.0 * i / 400;
        OdeState s = with_steady_y(elliptic_solution(t, J, U, c1, c2));
        amp = std::max(amp, std::abs(s.x1));
        REQUIRE(std::abs(s.x1) <= std::sqrt(c2) + 1e-9);
        OdeState d = ode_rhs(s, J, U);
        double h = 1e-6;
        OdeState sp = elliptic_solution(t + h, J, U, c1, c2);
        OdeState sm = elliptic_solution(t - h, J, U, c1, c2);
        REQUIRE(d.x1 == Catch::Approx((sp.x1 - sm.x1) / (2 * h)).margin(1e-5));
    }
    REQUIRE(amp > 0.9);
}

TEST_CASE("time shift centers the kink") {
    double J = 1.0, U = 0.4;
    double t0 = shift_t0(J, U);
    OdeState s = hyperbolic_solution(t0, J, U, t0);
    REQUIRE(s.x1 == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(s.x2 == Catch::Approx(-std::sqrt((2 * J + U) / (2 * J))));
    REQUIRE_THROWS(shift_t0(0.0, 0.4));
}

TEST_CASE("step cap activates for stiff parameters") {
    double J = 1.0, U = 0.4;
    OdeTrace tr = integrate(OdeState{0.1, 0.1, 0.1, 0.0, -1.0, 0.0}, J, U, 0.0, 1.0, 0.5);
    REQUIRE(tr.t.size() > 50);  // the 0.5 request was capped
    REQUIRE_THROWS(integrate(OdeState{}, J, U, 0.0, 1.0, -0.1));
    REQUIRE_THROWS(integrate(OdeState{}, J, U, 1.0, 0.0, 0.1));
}
