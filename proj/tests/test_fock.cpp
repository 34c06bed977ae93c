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

#include <msyk/amplitudes.hpp>
#include <msyk/fock.hpp>

using namespace msyk;

TEST_CASE("majorana anticommutation relations") {
    MajoranaAlgebra alg(6);
    for (int a = 0; a < 6; ++a) {
        for (int b = a; b < 6; ++b) {
            MatrixXc anti = MatrixXc(alg.gamma(a) * alg.gamma(b))
                          + MatrixXc(alg.gamma(b) * alg.gamma(a));
            double expect = (a == b) ? 1.0 : 0.0;
            REQUIRE((anti - expect * MatrixXc::Identity(alg.dim(), alg.dim()))
                        .cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    REQUIRE_THROWS(MajoranaAlgebra(5));
    REQUIRE_THROWS(MajoranaAlgebra(22));
}

TEST_CASE("epr state is annihilated by the pairing modes") {
    for (int p : {1, 2, 3}) {
        MajoranaAlgebra alg(2 * p);
        VectorXc epr = epr_state(alg);
        REQUIRE(epr.norm() == Catch::Approx(1.0));
        const std::complex<double> I(0.0, 1.0);
        for (int j = 0; j < p; ++j) {
            VectorXc dj = (MatrixXc(alg.gamma(j)) + I * MatrixXc(alg.gamma(p + j)))
                              * epr / std::sqrt(2.0);
            REQUIRE(dj.norm() < 1e-10);
        }
    }
}

TEST_CASE("epr reduced state is maximally mixed") {
    MajoranaAlgebra alg(4);
    VectorXc epr = epr_state(alg);
    MatrixXc rho = epr * epr.adjoint();
    MatrixXc rho_a = reduced_density_majorana(alg, rho, {0, 1});
    REQUIRE(rho_a.trace().real() == Catch::Approx(1.0));
    REQUIRE((rho_a - 0.5 * MatrixXc::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("reduced density of a pure product factor is pure") {
    MajoranaAlgebra alg(4);
    // |0000...> is the joint vacuum of the JW modes.
    VectorXc psi = VectorXc::Zero(alg.dim());
    psi(0) = 1.0;
    MatrixXc rho = psi * psi.adjoint();
    MatrixXc rho_a = reduced_density_majorana(alg, rho, {0, 1});
    REQUIRE((rho_a * rho_a - rho_a).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("cyclic permutation operator shifts replicas") {
    int n = 3, N = 2;
    MajoranaAlgebra alg(n * N);
    MatrixXc m = cyclic_permutation_operator(alg, n, N);
    REQUIRE((m * m.adjoint() - MatrixXc::Identity(alg.dim(), alg.dim()))
                .cwiseAbs().maxCoeff() < 1e-10);
    for (int alpha = 0; alpha < n; ++alpha) {
        for (int i = 0; i < N; ++i) {
            MatrixXc moved = m * MatrixXc(alg.gamma(alpha * N + i)) * m.adjoint();
            MatrixXc target = MatrixXc(alg.gamma(((alpha + 1) % n) * N + i));
            double plus = (moved - target).cwiseAbs().maxCoeff();
            double minus = (moved + target).cwiseAbs().maxCoeff();
            REQUIRE(std::min(plus, minus) < 1e-10);
        }
    }
}

TEST_CASE("single chain oracle matches the closed finite-T form") {
    double lambda = 0.9;
    for (int len : {1, 2, 3, 4}) {
        for (double T : {0.0, 0.5, 2.0}) {
            REQUIRE(oracle_cycle_amplitude(len, 0.0, lambda, T, 1)
                    == Catch::Approx(unitary_cycle_amplitude_exact(len, lambda, T))
                           .epsilon(1e-9));
        }
    }
}

TEST_CASE("single chain stripped oracle matches the analytic weight") {
    double lambda = 1.1;
    for (int len : {1, 2, 3, 4}) {
        auto got = oracle_stripped_amplitude(len, 0.0, lambda, 1);
        auto want = unitary_cycle_amplitude(len, lambda);
        REQUIRE(got.growth_rate == Catch::Approx(want.growth_exponent).margin(1e-10));
        REQUIRE(got.coefficient == Catch::Approx(want.stripped_value).epsilon(1e-10));
    }
}

TEST_CASE("two chains at theta 0 factorize") {
    double scale = 0.8;
    for (int len : {1, 2, 3}) {
        double two = oracle_cycle_amplitude(len, 0.0, scale, 1.3, 2);
        double one = oracle_cycle_amplitude(len, 0.0, scale, 1.3, 1);
        REQUIRE(two == Catch::Approx(one * one).epsilon(1e-9));
    }
}

TEST_CASE("monitored stripped oracle matches the Chebyshev weight") {
    double scale = 1.0;
    for (int len : {1, 2, 3, 4}) {
        for (double theta : {0.0, 0.4, 1.0, M_PI / 2}) {
            auto got = oracle_stripped_amplitude(len, theta, scale, 2);
            REQUIRE(got.growth_rate == Catch::Approx(len * scale).margin(1e-9));
            REQUIRE(got.coefficient
                    == Catch::Approx(monitored_cycle_factor(len, theta)).epsilon(1e-9));
        }
    }
}
