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

#include <msyk/model.hpp>

using namespace msyk;

TEST_CASE("validate accepts physical parameters") {
    ModelParams p{1.0, 0.5, 4, 0.3, 8, 2};
    REQUIRE_NOTHROW(validate(p));
    REQUIRE(validate(p).get().N == 8);
}

TEST_CASE("validate names the failing field") {
    ModelParams p;

    p = ModelParams{};
    p.q = 6;
    REQUIRE_THROWS_WITH(validate(p), Catch::Matchers::ContainsSubstring("q"));

    p = ModelParams{};
    p.N = 7;
    REQUIRE_THROWS_WITH(validate(p), Catch::Matchers::ContainsSubstring("N"));

    p = ModelParams{};
    p.mu = -1.0;
    REQUIRE_THROWS_WITH(validate(p), Catch::Matchers::ContainsSubstring("mu"));

    p = ModelParams{};
    p.J = 0.0;
    p.U = 0.0;
    REQUIRE_THROWS(validate(p));

    p = ModelParams{};
    p.L = 0;
    REQUIRE_THROWS_WITH(validate(p), Catch::Matchers::ContainsSubstring("L"));
}

TEST_CASE("replica config validation") {
    REQUIRE_NOTHROW(validate(ReplicaConfig{1.0, 0.0}));
    REQUIRE_THROWS(validate(ReplicaConfig{0.0, 1.0}));
    REQUIRE_THROWS(validate(ReplicaConfig{2.0, -1.0}));
}

TEST_CASE("saddle angle") {
    REQUIRE(saddle_angle(1.0, 0.0).theta == Catch::Approx(0.0));
    REQUIRE(saddle_angle(0.0, 1.0).theta == Catch::Approx(M_PI / 2));
    REQUIRE(saddle_angle(1.0, 1.0).theta == Catch::Approx(M_PI / 4));
    REQUIRE_THROWS(saddle_angle(0.0, 0.0));
}

TEST_CASE("json round trip") {
    ModelParams p{2.0, 0.25, 8, 0.7, 10, 3};
    nlohmann::json j = p;
    auto back = j.get<ModelParams>();
    REQUIRE(back.J == p.J);
    REQUIRE(back.U == p.U);
    REQUIRE(back.q == p.q);
    REQUIRE(back.mu == p.mu);
    REQUIRE(back.N == p.N);
    REQUIRE(back.L == p.L);

    ReplicaConfig c{1.5, 3.0};
    nlohmann::json jc = c;
    auto cb = jc.get<ReplicaConfig>();
    REQUIRE(cb.n == c.n);
    REQUIRE(cb.T == c.T);
}
