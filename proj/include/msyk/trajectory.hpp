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

#ifndef MSYK_TRAJECTORY_HPP
#define MSYK_TRAJECTORY_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <msyk/fock.hpp>
#include <msyk/model.hpp>

namespace msyk {

enum class InitialState { ParityProduct, Epr };

struct SimConfig {
    ModelParams params;
    double dt = 0.05;
    int steps = 100;
    int n_traj = 100;
    std::uint64_t seed = 1;
    InitialState initial_state = InitialState::ParityProduct;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based stream: a fresh engine keyed by (seed, trajectory, step,
/// tag), so any event can be regenerated without replaying the run.
inline std::mt19937_64 keyed_engine(std::uint64_t seed, std::uint64_t traj,
                                    std::uint64_t step, std::uint64_t tag) {
    std::uint64_t k = splitmix64(seed);
    k = splitmix64(k ^ (0x100000001b3ULL * traj));
    k = splitmix64(k ^ (0x9e3779b9ULL * step));
    k = splitmix64(k ^ tag);
    return std::mt19937_64(k);
}

struct TrajectoryRecord {
    std::vector<std::uint8_t> outcomes;  ///< one bit per measurement event
    double log_weight = 0.0;             ///< log Born probability of the record
    std::vector<double> entropy;         ///< half-cut entropy after each step
};

/// Exact two-chain register at desk scale: L sites, N Majorana flavors per
/// site per chain, Jordan-Wigner encoded with psi_{x,L,i} = gamma_{2m} and
/// psi_{x,R,i} = gamma_{2m+1} for mode m = x N + i, so every monitored
/// parity is diagonal in the Fock basis.
class SimRegister {
  public:
    explicit SimRegister(const ModelParams& params)
        : p_(validate(params).get()), alg_(2 * p_.N * p_.L) {
        if (p_.q != 4)
            throw std::invalid_argument("SimRegister: only q = 4 is implemented");
        build_parities();
        build_terms();
    }

    const ModelParams& params() const { return p_; }
    const MajoranaAlgebra& algebra() const { return alg_; }
    int dim() const { return alg_.dim(); }
    int modes() const { return p_.N * p_.L; }
    int events_per_step() const { return modes(); }

    VectorXc make_initial(InitialState which) const {
        VectorXc psi = VectorXc::Zero(dim());
        if (which == InitialState::ParityProduct) {
            psi(0) = 1.0;
            return psi;
        }
        // maximal entanglement between the low and high halves of the
        // mode register, as a Fock-diagonal pairing
        int h = modes() / 2;
        if (h == 0) throw std::invalid_argument("make_initial: Epr needs >= 2 modes");
        double amp = 1.0 / std::sqrt(static_cast<double>(1 << h));
        for (int b = 0; b < (1 << h); ++b) psi(b + (b << h)) = amp;
        return psi;
    }

    /// Gaussian couplings of one Brownian step, in the fixed term order
    /// (all J terms, then all U terms).
    std::vector<double> sample_couplings(std::uint64_t seed, int traj,
                                         int step, double dt) const {
        std::vector<double> g(terms_.size());
        std::normal_distribution<double> gauss(0.0, 1.0);
        auto eng = keyed_engine(seed, traj, step, 0xC0FFEE);
        double sd_j = std::sqrt(4.0 * p_.J / (p_.N * dt));
        double sd_u = std::sqrt(16.0 * p_.U
                                / (static_cast<double>(p_.N) * p_.N * p_.N * dt));
        for (std::size_t k = 0; k < terms_.size(); ++k)
            g[k] = (k < n_j_terms_ ? sd_j : sd_u) * gauss(eng);
        return g;
    }

    /// Dense step Hamiltonian, mainly for tests and small registers.
    MatrixXc step_hamiltonian(std::uint64_t seed, int traj, int step,
                              double dt) const {
        auto g = sample_couplings(seed, traj, step, dt);
        MatrixXc h = MatrixXc::Zero(dim(), dim());
        for (std::size_t k = 0; k < terms_.size(); ++k) h += g[k] * MatrixXc(terms_[k]);
        return h;
    }

    /// psi <- exp(-i H dt) psi with H applied term by term; Taylor series
    /// on the vector, converged to machine precision.
    void apply_step_unitary(VectorXc& psi, std::uint64_t seed, int traj, int step,
                            double dt) const {
        auto g = sample_couplings(seed, traj, step, dt);
        VectorXc term = psi;
        VectorXc out = psi;
        const std::complex<double> mi(0.0, -1.0);
        for (int k = 1; k <= 120; ++k) {
            VectorXc hterm = VectorXc::Zero(dim());
            for (std::size_t j = 0; j < terms_.size(); ++j)
                hterm += g[j] * (terms_[j] * term);
            term = (mi * dt / static_cast<double>(k)) * hterm;
            out += term;
            if (term.norm() < 1e-15) break;
        }
        psi = out;
    }

    /// Weak parity measurement of one mode with Kraus pair
    /// K1 = P_minus + sqrt(1 - s^2) P_plus, K2 = s P_plus, s^2 = mu dt.
    /// Samples the outcome by the Born rule, applies the Kraus operator in
    /// place, renormalizes, and returns (outcome, log probability).
    std::pair<int, double> measure_mode(VectorXc& psi, int mode, double s2,
                                        std::mt19937_64& eng) const {
        const Eigen::VectorXd& par = parity_[mode];
        double p_plus = 0.0;
        for (int i = 0; i < dim(); ++i)
            if (par(i) > 0.0) p_plus += std::norm(psi(i));
        double p2 = s2 * p_plus;
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        int outcome = (unif(eng) < p2) ? 1 : 0;
        double prob;
        if (outcome == 1) {
            for (int i = 0; i < dim(); ++i)
                if (par(i) < 0.0) psi(i) = 0.0;
            prob = p2;
        } else {
            double damp = std::sqrt(1.0 - s2);
            for (int i = 0; i < dim(); ++i)
                if (par(i) > 0.0) psi(i) *= damp;
            prob = 1.0 - p2;
        }
        psi /= psi.norm();
        return {outcome, std::log(prob)};
    }

    /// Applies one fixed outcome instead of sampling; returns its log
    /// probability. Used by the exhaustive branch enumeration.
    double force_outcome(VectorXc& psi, int mode, double s2, int outcome) const {
        const Eigen::VectorXd& par = parity_[mode];
        double p_plus = 0.0;
        for (int i = 0; i < dim(); ++i)
            if (par(i) > 0.0) p_plus += std::norm(psi(i));
        double p2 = s2 * p_plus;
        if (outcome == 1) {
            if (p2 <= 0.0) return -std::numeric_limits<double>::infinity();
            for (int i = 0; i < dim(); ++i)
                if (par(i) < 0.0) psi(i) = 0.0;
            psi /= psi.norm();
            return std::log(p2);
        }
        double damp = std::sqrt(1.0 - s2);
        for (int i = 0; i < dim(); ++i)
            if (par(i) > 0.0) psi(i) *= damp;
        psi /= psi.norm();
        return std::log(1.0 - p2);
    }

    /// Expectation of the total fermion parity of one site (both chains).
    double site_parity_expectation(const VectorXc& psi, int x) const {
        Eigen::VectorXd par = Eigen::VectorXd::Ones(dim());
        for (int i = 0; i < p_.N; ++i)
            par = par.cwiseProduct(parity_[x * p_.N + i]);
        double v = 0.0;
        for (int i = 0; i < dim(); ++i) v += par(i) * std::norm(psi(i));
        return v;
    }

    /// Von Neumann entropy of the half cut. For L >= 2 the cut separates
    /// the first L/2 sites (Schmidt decomposition on the contiguous mode
    /// split); for L = 1 it separates the two chains of the single site,
    /// through the Majorana-monomial reduced density matrix.
    double half_cut_entropy(const VectorXc& psi) const {
        if (p_.L >= 2) {
            int ha = p_.N * (p_.L / 2);
            int da = 1 << ha, db = dim() / da;
            MatrixXc m(da, db);
            for (int b = 0; b < db; ++b)
                for (int a = 0; a < da; ++a) m(a, b) = psi(a + (b << ha));
            Eigen::JacobiSVD<MatrixXc> svd(m);
            double s = 0.0;
            for (int i = 0; i < svd.singularValues().size(); ++i) {
                double lam = svd.singularValues()(i);
                lam *= lam;
                if (lam > 1e-14) s -= lam * std::log(lam);
            }
            return s;
        }
        MatrixXc rho_a = chain_cut_density(psi);
        Eigen::SelfAdjointEigenSolver<MatrixXc> es(rho_a);
        double s = 0.0;
        for (int i = 0; i < es.eigenvalues().size(); ++i) {
            double lam = es.eigenvalues()(i);
            if (lam > 1e-14) s -= lam * std::log(lam);
        }
        return s;
    }

    /// Reduced density matrix of the left chain of a single-site register.
    MatrixXc chain_cut_density(const VectorXc& psi) const {
        if (p_.L != 1 || p_.N > 8)
            throw std::invalid_argument("chain_cut_density: needs L = 1, N <= 8");
        std::vector<int> subset;
        for (int i = 0; i < p_.N; ++i) subset.push_back(2 * i);
        MatrixXc rho = psi * psi.adjoint();
        return reduced_density_majorana(alg_, rho, subset);
    }

  private:
    void build_parities() {
        // parity of mode m is 2 i gamma_{2m} gamma_{2m+1}, diagonal in the
        // JW basis: +1 on occupied, -1 on empty (or the reverse; only the
        // pairing matters and it is fixed here once).
        parity_.resize(modes());
        const std::complex<double> I(0.0, 1.0);
        for (int m = 0; m < modes(); ++m) {
            MatrixXc op = 2.0 * I * MatrixXc(alg_.gamma(2 * m) * alg_.gamma(2 * m + 1));
            Eigen::VectorXd diag(dim());
            for (int i = 0; i < dim(); ++i) diag(i) = op(i, i).real();
            for (int i = 0; i < dim(); ++i) {
                if (std::abs(std::abs(diag(i)) - 1.0) > 1e-12)
                    throw std::runtime_error("build_parities: parity not diagonal");
            }
            parity_[m] = diag;
        }
    }

    int maj(int x, int chain, int i) const { return 2 * (x * p_.N + i) + chain; }

    void build_terms() {
        const std::complex<double> I(0.0, 1.0);
        // onsite quadratic terms i psi_i psi_j, per site and chain
        for (int x = 0; x < p_.L; ++x)
            for (int c = 0; c < 2; ++c)
                for (int i = 0; i < p_.N; ++i)
                    for (int j = i + 1; j < p_.N; ++j)
                        terms_.push_back(
                            (I * SparseC(alg_.gamma(maj(x, c, i)) * alg_.gamma(maj(x, c, j))))
                                .pruned());
        n_j_terms_ = terms_.size();
        if (p_.U > 0.0 && p_.L >= 1) {
            int bonds = (p_.L == 1) ? 0 : p_.L;  // periodic ring, no self bond
            for (int b = 0; b < bonds; ++b) {
                int x = b, y = (b + 1) % p_.L;
                for (int c = 0; c < 2; ++c)
                    for (int i1 = 0; i1 < p_.N; ++i1)
                        for (int i2 = i1 + 1; i2 < p_.N; ++i2)
                            for (int j1 = 0; j1 < p_.N; ++j1)
                                for (int j2 = j1 + 1; j2 < p_.N; ++j2)
                                    terms_.push_back(
                                        (-SparseC(SparseC(alg_.gamma(maj(x, c, i1))
                                                          * alg_.gamma(maj(x, c, i2)))
                                                  * SparseC(alg_.gamma(maj(y, c, j1))
                                                            * alg_.gamma(maj(y, c, j2)))))
                                            .pruned());
            }
        }
    }

    ModelParams p_;
    MajoranaAlgebra alg_;
    std::vector<Eigen::VectorXd> parity_;
    std::vector<SparseC> terms_;
    std::size_t n_j_terms_ = 0;
};

/// One quantum trajectory: alternating Brownian unitary steps and a weak
/// parity measurement of every mode, recording outcomes, the log Born
/// weight, and the half-cut entropy after each step.
inline TrajectoryRecord run_trajectory(const SimRegister& reg, const SimConfig& cfg,
                                       int traj) {
    double s2 = cfg.params.mu * cfg.dt;
    if (s2 < 0.0 || s2 >= 1.0)
        throw std::invalid_argument("run_trajectory: need mu dt in [0, 1)");
    VectorXc psi = reg.make_initial(cfg.initial_state);
    TrajectoryRecord rec;
    rec.outcomes.reserve(static_cast<std::size_t>(cfg.steps) * reg.events_per_step());
    for (int step = 0; step < cfg.steps; ++step) {
        reg.apply_step_unitary(psi, cfg.seed, traj, step, cfg.dt);
        auto eng = keyed_engine(cfg.seed, traj, step, 0xB0B);
        for (int m = 0; m < reg.modes(); ++m) {
            auto [outcome, logp] = reg.measure_mode(psi, m, s2, eng);
            rec.outcomes.push_back(static_cast<std::uint8_t>(outcome));
            rec.log_weight += logp;
        }
        rec.entropy.push_back(reg.half_cut_entropy(psi));
    }
    return rec;
}

struct EntropyCurve {
    std::vector<double> t;
    std::vector<double> mean;
    std::vector<double> stderr_;
};

/// Trajectory-averaged entropy curve with a batch-means standard error
/// (10 batches over the trajectory index).
inline EntropyCurve estimate_entropy_curve(const SimRegister& reg,
                                           const SimConfig& cfg) {
    EntropyCurve curve;
    curve.t.resize(cfg.steps);
    for (int s = 0; s < cfg.steps; ++s) curve.t[s] = (s + 1) * cfg.dt;
    std::vector<std::vector<double>> samples(cfg.steps);
    for (int traj = 0; traj < cfg.n_traj; ++traj) {
        TrajectoryRecord rec = run_trajectory(reg, cfg, traj);
        for (int s = 0; s < cfg.steps; ++s) samples[s].push_back(rec.entropy[s]);
    }
    int nb = std::min(10, cfg.n_traj);
    curve.mean.resize(cfg.steps);
    curve.stderr_.resize(cfg.steps);
    for (int s = 0; s < cfg.steps; ++s) {
        double mean = 0.0;
        for (double v : samples[s]) mean += v;
        mean /= cfg.n_traj;
        curve.mean[s] = mean;
        std::vector<double> bm(nb, 0.0);
        std::vector<int> bc(nb, 0);
        for (int i = 0; i < cfg.n_traj; ++i) {
            int b = i % nb;
            bm[b] += samples[s][i];
            bc[b] += 1;
        }
        double var = 0.0;
        for (int b = 0; b < nb; ++b) {
            double d = bm[b] / bc[b] - mean;
            var += d * d;
        }
        curve.stderr_[s] = std::sqrt(var / (nb * std::max(1, nb - 1)));
    }
    return curve;
}

struct Branch {
    std::vector<std::uint8_t> outcomes;
    double log_weight = 0.0;
    VectorXc state;
};

/// Exhaustive enumeration of every measurement record over the given
/// number of steps (2^{steps * modes} branches); feasible only for the
/// smallest registers. Unitaries are the same ones run_trajectory draws
/// for traj index 0.
inline std::vector<Branch> enumerate_branches(const SimRegister& reg,
                                              const SimConfig& cfg) {
    double s2 = cfg.params.mu * cfg.dt;
    int events = cfg.steps * reg.events_per_step();
    if (events > 12) throw std::invalid_argument("enumerate_branches: too many events");
    std::vector<Branch> done;
    std::vector<Branch> frontier(1);
    frontier[0].state = reg.make_initial(cfg.initial_state);
    for (int step = 0; step < cfg.steps; ++step) {
        for (auto& br : frontier)
            reg.apply_step_unitary(br.state, cfg.seed, 0, step, cfg.dt);
        for (int m = 0; m < reg.modes(); ++m) {
            std::vector<Branch> next;
            next.reserve(2 * frontier.size());
            for (const auto& br : frontier) {
                for (int outcome : {0, 1}) {
                    Branch nb = br;
                    double logp = reg.force_outcome(nb.state, m, s2, outcome);
                    if (!std::isfinite(logp)) continue;
                    nb.log_weight += logp;
                    nb.outcomes.push_back(static_cast<std::uint8_t>(outcome));
                    next.push_back(std::move(nb));
                }
            }
            frontier = std::move(next);
        }
    }
    return frontier;
}

}  // namespace msyk

#endif  // MSYK_TRAJECTORY_HPP
