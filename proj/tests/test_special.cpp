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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <msyk/special.hpp>

using namespace msyk;

static double cheb_recurrence(int n, double a) {
    double tm = 1.0, t = a;
    if (n == 0) return tm;
    for (int k = 1; k < n; ++k) {
        double next = 2.0 * a * t - tm;
        tm = t;
        t = next;
    }
    return t;
}

TEST_CASE("chebyshev matches integer-order recurrence") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> arg(-1.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng() % 9);
        double a = arg(rng);
        REQUIRE(chebyshev_T(n, a)
                == Catch::Approx(cheb_recurrence(n, a)).margin(1e-10));
    }
    REQUIRE_THROWS(chebyshev_T(2.0, -1.5));
}

TEST_CASE("chebyshev of real order interpolates smoothly") {
    REQUIRE(chebyshev_T(0.5, 1.0) == Catch::Approx(1.0));
    REQUIRE(chebyshev_T(2.5, std::cos(0.3)) == Catch::Approx(std::cos(2.5 * 0.3)));
    REQUIRE(chebyshev_T(1.5, std::cosh(0.4)) == Catch::Approx(std::cosh(1.5 * 0.4)));
}

static double hyp2f1_series(double a, double b, double c, double z) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 400; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    }
    return sum;
}

TEST_CASE("hypergeometric identity against the power series") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> xs(0.1, 4.0), zs(-0.4, 0.45);
    for (int trial = 0; trial < 100; ++trial) {
        double x = xs(rng), z = zs(rng);
        REQUIRE(hyp2f1_spectral(x, z)
                == Catch::Approx(hyp2f1_series(x, -x, 0.5, z)).epsilon(1e-9));
    }
    REQUIRE_THROWS(hyp2f1_spectral(1.0, 0.7));
}

TEST_CASE("jacobi functions satisfy the defining identities") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> us(-3.0, 3.0), ms(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        double u = us(rng), m = ms(rng);
        auto [sn, dn] = jacobi_sn_dn(u, m);
        REQUIRE(dn * dn == Catch::Approx(1.0 - m * sn * sn).margin(1e-10));
        REQUIRE(std::abs(sn) <= 1.0 + 1e-12);

        double h = 1e-5;
        auto [snp, dnp] = jacobi_sn_dn(u + h, m);
        auto [snm, dnm] = jacobi_sn_dn(u - h, m);
        double cn2 = 1.0 - sn * sn;
        double cn = std::sqrt(std::max(0.0, cn2));
        REQUIRE(std::abs((snp - snm) / (2 * h)) == Catch::Approx(cn * dn).margin(1e-6));
        REQUIRE(std::abs((dnp - dnm) / (2 * h))
                == Catch::Approx(m * std::abs(sn) * cn).margin(1e-6));
    }
}

TEST_CASE("jacobi limits") {
    auto [sn0, dn0] = jacobi_sn_dn(0.8, 0.0);
    REQUIRE(sn0 == Catch::Approx(std::sin(0.8)));
    REQUIRE(dn0 == Catch::Approx(1.0));
    auto [sn1, dn1] = jacobi_sn_dn(0.8, 1.0);
    REQUIRE(sn1 == Catch::Approx(std::tanh(0.8)));
    REQUIRE(dn1 == Catch::Approx(1.0 / std::cosh(0.8)));
}

TEST_CASE("pfaffian squares to the determinant") {
    std::mt19937 rng(5);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int dim : {2, 4, 6, 8, 10}) {
        for (int trial = 0; trial < 10; ++trial) {
            Eigen::MatrixXd g(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) g(i, j) = gauss(rng);
            Eigen::MatrixXd a = g - g.transpose();
            double pf = pfaffian(a);
            REQUIRE(pf * pf == Catch::Approx(a.determinant()).epsilon(1e-8));
        }
    }
}

TEST_CASE("pfaffian blocks and edge cases") {
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(4, 4);
    block(0, 1) = 2.0; block(1, 0) = -2.0;
    block(2, 3) = 3.0; block(3, 2) = -3.0;
    REQUIRE(pfaffian(block) == Catch::Approx(6.0));

    REQUIRE(pfaffian(Eigen::MatrixXd::Zero(4, 4)) == 0.0);
    REQUIRE_THROWS(pfaffian(Eigen::MatrixXd::Zero(3, 3)));
    REQUIRE_THROWS(pfaffian(Eigen::MatrixXd::Identity(4, 4)));
}

TEST_CASE("trig product identity") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> as(-0.99, 4.0);
    for (int n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            auto [lhs, rhs] = trig_product_identity(n, as(rng));
            REQUIRE(lhs == Catch::Approx(rhs).margin(1e-8 * std::max(1.0, std::abs(rhs))));
        }
    }
}
