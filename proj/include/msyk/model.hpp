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

#ifndef MSYK_MODEL_HPP
#define MSYK_MODEL_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace msyk {

/// Physical couplings and sizes of the monitored Brownian chain model.
/// Rates are plain nonnegative reals in units of inverse time.
struct ModelParams {
    double J = 1.0;   ///< onsite two-Majorana coupling rate
    double U = 0.0;   ///< nearest-neighbor q-Majorana coupling rate
    int q = 4;        ///< interaction order, multiple of 4
    double mu = 0.0;  ///< monitoring rate
    int N = 8;        ///< Majorana flavors per site per chain (even)
    int L = 2;        ///< number of sites
};

/// Replica count and total evolution time. Real-valued n supports the
/// analytic continuation to n -> 1.
struct ReplicaConfig {
    double n = 2.0;
    double T = 1.0;
};

/// The (Lambda, theta) parametrization of the large-scale solution,
/// with tan(theta) = mu / Lambda.
struct SaddleAngle {
    double lambda = 0.0;
    double theta = 0.0;
};

/// A ModelParams value that has passed validate(). Construct only through
/// validate() so a ValidatedParams in hand certifies the invariants.
class ValidatedParams {
  public:
    const ModelParams& get() const { return params_; }
    operator const ModelParams&() const { return params_; }

  private:
    explicit ValidatedParams(const ModelParams& p) : params_(p) {}
    friend ValidatedParams validate(const ModelParams&);
    ModelParams params_;
};

/// Checks every model invariant, throwing std::invalid_argument with the
/// failing field named in the message.
inline ValidatedParams validate(const ModelParams& p) {
    if (p.J < 0.0) throw std::invalid_argument("J must be >= 0, got " + std::to_string(p.J));
    if (p.U < 0.0) throw std::invalid_argument("U must be >= 0, got " + std::to_string(p.U));
    if (p.J + p.U <= 0.0) throw std::invalid_argument("J + U must be > 0");
    if (p.q <= 0 || p.q % 4 != 0)
        throw std::invalid_argument("q must be multiple of 4, got " + std::to_string(p.q));
    if (p.mu < 0.0) throw std::invalid_argument("mu must be >= 0, got " + std::to_string(p.mu));
    if (p.N <= 0 || p.N % 2 != 0)
        throw std::invalid_argument("N must be even and positive, got " + std::to_string(p.N));
    if (p.L < 1) throw std::invalid_argument("L must be >= 1, got " + std::to_string(p.L));
    return ValidatedParams(p);
}

inline ReplicaConfig validate(const ReplicaConfig& c) {
    if (c.n <= 0.0) throw std::invalid_argument("n must be > 0, got " + std::to_string(c.n));
    if (c.T < 0.0) throw std::invalid_argument("T must be >= 0, got " + std::to_string(c.T));
    return c;
}

/// theta = atan2(mu, lambda) in [0, pi/2]; both arguments zero is an error.
inline SaddleAngle saddle_angle(double lambda, double mu) {
    if (lambda < 0.0 || mu < 0.0)
        throw std::invalid_argument("saddle_angle: lambda and mu must be >= 0");
    if (lambda == 0.0 && mu == 0.0)
        throw std::invalid_argument("saddle_angle: lambda and mu cannot both be zero");
    return SaddleAngle{lambda, std::atan2(mu, lambda)};
}

inline void from_json(const nlohmann::json& j, ModelParams& p) {
    j.at("J").get_to(p.J);
    j.at("U").get_to(p.U);
    j.at("q").get_to(p.q);
    j.at("mu").get_to(p.mu);
    j.at("N").get_to(p.N);
    j.at("L").get_to(p.L);
}

inline void to_json(nlohmann::json& j, const ModelParams& p) {
    j = nlohmann::json{{"J", p.J}, {"U", p.U}, {"q", p.q},
                       {"mu", p.mu}, {"N", p.N}, {"L", p.L}};
}

inline void from_json(const nlohmann::json& j, ReplicaConfig& c) {
    j.at("n").get_to(c.n);
    j.at("T").get_to(c.T);
}

inline void to_json(nlohmann::json& j, const ReplicaConfig& c) {
    j = nlohmann::json{{"n", c.n}, {"T", c.T}};
}

}  // namespace msyk

#endif  // MSYK_MODEL_HPP
