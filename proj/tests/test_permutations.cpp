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

#include <msyk/permutations.hpp>

using namespace msyk;

TEST_CASE("compose and inverse") {
    Permutation eps = Permutation::cyclic_shift(4);
    REQUIRE(compose(eps, eps.inverse()) == Permutation::identity(4));
    REQUIRE(eps(3) == 0);
    REQUIRE_THROWS(Permutation({0, 0, 1}));
}

TEST_CASE("cycle decomposition is canonical and invertible") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        Permutation p(img);
        CycleDecomposition d(p);
        REQUIRE(d.reconstruct() == p);
        int total = 0;
        for (std::size_t i = 0; i < d.cycles().size(); ++i) {
            const auto& c = d.cycles()[i];
            total += static_cast<int>(c.size());
            REQUIRE(*std::min_element(c.begin(), c.end()) == c.front());
            if (i > 0) REQUIRE(d.cycles()[i - 1].size() >= c.size());
        }
        REQUIRE(total == n);
    }
}

TEST_CASE("identity pair has maximal cycle count") {
    for (int n = 1; n <= 6; ++n) {
        Permutation id = Permutation::identity(n);
        REQUIRE(pair_cycle_count(id) == n + 1);
    }
}

TEST_CASE("cycle count bound and parity") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        int m = pair_cycle_count(Permutation(img));
        REQUIRE(m <= n + 1);
        REQUIRE((n + 1 - m) % 2 == 0);
    }
}

TEST_CASE("maximal pairs are counted by Catalan numbers") {
    const long expected[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 1; n <= 6; ++n) {
        auto pairs = enumerate_maximal_pairs(n);
        REQUIRE(static_cast<long>(pairs.size()) == expected[n]);
        REQUIRE(catalan(n) == expected[n]);
        for (const auto& p : pairs) REQUIRE(p.cycle_total() == n + 1);
    }
    REQUIRE(catalan(10) == 16796);
}

TEST_CASE("canonical cycle matrices") {
    Eigen::MatrixXd m2 = canonical_cycle(2);
    REQUIRE(m2(0, 1) == 1.0);
    REQUIRE(m2(1, 0) == -1.0);

    Eigen::MatrixXd m3 = canonical_cycle(3);
    REQUIRE(m3(2, 0) == 1.0);
    REQUIRE(m3(0, 2) == -1.0);

    Eigen::MatrixXd m4 = canonical_cycle(4);
    REQUIRE(m4(3, 0) == -1.0);
    REQUIRE(m4(0, 3) == 1.0);

    for (int len : {2, 3, 4, 5, 6}) {
        Eigen::MatrixXd m = canonical_cycle(len);
        REQUIRE((m + m.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("pair json round trip uses 1-based labels") {
    auto pairs = enumerate_maximal_pairs(3);
    for (const auto& p : pairs) {
        nlohmann::json j = p;
        REQUIRE(j.at("n") == 3);
        for (int v : j.at("tau_abar").get<std::vector<int>>()) {
            REQUIRE(v >= 1);
            REQUIRE(v <= 3);
        }
        auto back = j.get<PermutationPair>();
        REQUIRE(back.tau_abar == p.tau_abar);
        REQUIRE(back.cycle_total() == 4);
    }
}
