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

#ifndef MSYK_PERMUTATIONS_HPP
#define MSYK_PERMUTATIONS_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace msyk {

/// A permutation of replica labels {1, ..., n}, stored 0-based internally.
/// image_[a] is the image of replica a.
class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        std::vector<char> seen(image_.size(), 0);
        for (int v : image_) {
            if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
                throw std::invalid_argument("Permutation: not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    /// The cyclic shift a -> a + 1 (mod n).
    static Permutation cyclic_shift(int n) {
        std::vector<int> img(n);
        for (int a = 0; a < n; ++a) img[a] = (a + 1) % n;
        return Permutation(std::move(img));
    }

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int a) const { return image_.at(a); }
    const std::vector<int>& image() const { return image_; }

    bool operator==(const Permutation& o) const { return image_ == o.image_; }
    bool operator<(const Permutation& o) const { return image_ < o.image_; }

    Permutation inverse() const {
        std::vector<int> inv(image_.size());
        for (int a = 0; a < size(); ++a) inv[image_[a]] = a;
        return Permutation(std::move(inv));
    }

  private:
    std::vector<int> image_;
};

/// (p * q)(a) = p(q(a)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(p.size());
    for (int a = 0; a < p.size(); ++a) img[a] = p(q(a));
    return Permutation(std::move(img));
}

/// Cycles of a permutation in canonical order: longer cycles first, ties
/// broken by smallest element; each cycle rotated to start at its smallest
/// element. Elements are 0-based.
class CycleDecomposition {
  public:
    explicit CycleDecomposition(const Permutation& p) : n_(p.size()) {
        std::vector<char> seen(n_, 0);
        for (int a = 0; a < n_; ++a) {
            if (seen[a]) continue;
            std::vector<int> cyc;
            int b = a;
            while (!seen[b]) {
                seen[b] = 1;
                cyc.push_back(b);
                b = p(b);
            }
            cycles_.push_back(std::move(cyc));
        }
        std::sort(cycles_.begin(), cycles_.end(), [](const auto& x, const auto& y) {
            if (x.size() != y.size()) return x.size() > y.size();
            return x.front() < y.front();
        });
    }

    int size() const { return n_; }
    int count() const { return static_cast<int>(cycles_.size()); }
    const std::vector<std::vector<int>>& cycles() const { return cycles_; }

    /// Rebuilds the permutation the cycles came from.
    Permutation reconstruct() const {
        std::vector<int> img(n_);
        for (const auto& cyc : cycles_)
            for (std::size_t i = 0; i < cyc.size(); ++i)
                img[cyc[i]] = cyc[(i + 1) % cyc.size()];
        return Permutation(std::move(img));
    }

  private:
    int n_;
    std::vector<std::vector<int>> cycles_;
};

inline int cycle_count(const Permutation& p) { return CycleDecomposition(p).count(); }

/// A saddle of the replica sum, fixed by tau_Abar; tau_A = eps * tau_Abar
/// with eps the cyclic shift.
struct PermutationPair {
    int n = 0;
    Permutation tau_abar;

    Permutation tau_a() const {
        return compose(Permutation::cyclic_shift(n), tau_abar);
    }

    /// Total number of cycles across both factors.
    int cycle_total() const {
        return cycle_count(tau_a()) + cycle_count(tau_abar);
    }
};

/// m_cyc(tau_Abar) = cycles(eps * tau_Abar) + cycles(tau_Abar).
inline int pair_cycle_count(const Permutation& tau_abar) {
    PermutationPair p{tau_abar.size(), tau_abar};
    return p.cycle_total();
}

/// All pairs attaining the maximal cycle count n + 1, found by exhaustive
/// search over S_n. Intended for n <= 8.
inline std::vector<PermutationPair> enumerate_maximal_pairs(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("enumerate_maximal_pairs: n must be in [1, 8]");
    std::vector<PermutationPair> out;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
        Permutation tau(img);
        if (pair_cycle_count(tau) == n + 1) out.push_back(PermutationPair{n, tau});
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.tau_abar < b.tau_abar; });
    return out;
}

/// The n-th Catalan number, exact.
inline boost::multiprecision::cpp_int catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
    boost::multiprecision::cpp_int c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

/// The canonical signed adjacency matrix of a single cycle of the given
/// length: +1 above the diagonal, -1 below, wrap entry +1 for odd length
/// and carrying an extra minus sign for even length. Length 2 is the
/// degenerate [[0, 1], [-1, 0]] block.
inline Eigen::MatrixXd canonical_cycle(int len) {
    if (len < 1) throw std::invalid_argument("canonical_cycle: len must be >= 1");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(len, len);
    if (len == 1) return m;
    if (len == 2) {
        m(0, 1) = 1.0;
        m(1, 0) = -1.0;
        return m;
    }
    for (int i = 0; i + 1 < len; ++i) {
        m(i, i + 1) = 1.0;
        m(i + 1, i) = -1.0;
    }
    double wrap = (len % 2 == 0) ? -1.0 : 1.0;
    m(len - 1, 0) = wrap;
    m(0, len - 1) = -wrap;
    return m;
}

/// JSON uses 1-based replica labels.
inline nlohmann::json cycles_to_json(const CycleDecomposition& d) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& cyc : d.cycles()) {
        nlohmann::json c = nlohmann::json::array();
        for (int v : cyc) c.push_back(v + 1);
        arr.push_back(c);
    }
    return arr;
}

inline void to_json(nlohmann::json& j, const PermutationPair& p) {
    nlohmann::json img = nlohmann::json::array();
    for (int a = 0; a < p.n; ++a) img.push_back(p.tau_abar(a) + 1);
    j = nlohmann::json{{"n", p.n},
                       {"tau_abar", img},
                       {"cycles_A", cycles_to_json(CycleDecomposition(p.tau_a()))},
                       {"cycles_Abar", cycles_to_json(CycleDecomposition(p.tau_abar))}};
}

inline void from_json(const nlohmann::json& j, PermutationPair& p) {
    p.n = j.at("n").get<int>();
    std::vector<int> img = j.at("tau_abar").get<std::vector<int>>();
    for (int& v : img) v -= 1;
    p.tau_abar = Permutation(std::move(img));
    if (p.tau_abar.size() != p.n)
        throw std::invalid_argument("PermutationPair: tau_abar length != n");
}

}  // namespace msyk

#endif  // MSYK_PERMUTATIONS_HPP
