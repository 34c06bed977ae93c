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

#ifndef MSYK_FOCK_HPP
#define MSYK_FOCK_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <msyk/permutations.hpp>

namespace msyk {

using SparseC = Eigen::SparseMatrix<std::complex<double>>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

/// Jordan-Wigner Majorana operators gamma_0, ..., gamma_{2p-1} on p
/// fermion modes, normalized so gamma^2 = 1/2. Dimensions are capped at
/// 2^10 (20 Majoranas), enough for every desk-scale oracle here.
class MajoranaAlgebra {
  public:
    explicit MajoranaAlgebra(int n_majorana) : n_(n_majorana) {
        if (n_ < 2 || n_ % 2 != 0)
            throw std::invalid_argument("MajoranaAlgebra: count must be even and >= 2");
        if (n_ > 20)
            throw std::invalid_argument("MajoranaAlgebra: at most 20 Majoranas supported");
        int p = n_ / 2;
        dim_ = 1 << p;
        const std::complex<double> I(0.0, 1.0);
        const double r = 1.0 / std::sqrt(2.0);
        gammas_.reserve(n_);
        for (int a = 0; a < n_; ++a) {
            int mode = a / 2;
            bool odd = a % 2;
            std::vector<Eigen::Triplet<std::complex<double>>> trip;
            trip.reserve(dim_);
            for (int s = 0; s < dim_; ++s) {
                // Z string on modes < mode, then X or Y on `mode`.
                int parity = 0;
                for (int b = 0; b < mode; ++b) parity ^= (s >> b) & 1;
                double string = parity ? -1.0 : 1.0;
                int t = s ^ (1 << mode);
                std::complex<double> val;
                if (!odd) {
                    val = string * r;
                } else {
                    val = ((s >> mode) & 1) ? I * string * r : -I * string * r;
                }
                trip.emplace_back(t, s, val);
            }
            SparseC g(dim_, dim_);
            g.setFromTriplets(trip.begin(), trip.end());
            gammas_.push_back(std::move(g));
        }
    }

    int count() const { return n_; }
    int dim() const { return dim_; }
    const SparseC& gamma(int a) const { return gammas_.at(a); }

  private:
    int n_;
    int dim_;
    std::vector<SparseC> gammas_;
};

/// The EPR-type state annihilated by every d_j = (gamma_j + i gamma_{p+j})
/// / sqrt(2) for j < p, where the algebra holds 2p Majoranas split into a
/// psi block (first p) and a chi block (last p). Computed as the zero mode
/// of sum_j d_j^dagger d_j, with the phase fixed so the largest component
/// is real positive.
inline VectorXc epr_state(const MajoranaAlgebra& alg) {
    int p = alg.count() / 2;
    const std::complex<double> I(0.0, 1.0);
    MatrixXc number = MatrixXc::Zero(alg.dim(), alg.dim());
    for (int j = 0; j < p; ++j) {
        MatrixXc d = (MatrixXc(alg.gamma(j)) + I * MatrixXc(alg.gamma(p + j)))
                     / std::sqrt(2.0);
        number += d.adjoint() * d;
    }
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(number);
    if (es.eigenvalues()(0) > 1e-9)
        throw std::runtime_error("epr_state: no null vector found");
    VectorXc v = es.eigenvectors().col(0);
    int imax = 0;
    for (int i = 1; i < v.size(); ++i)
        if (std::abs(v(i)) > std::abs(v(imax))) imax = i;
    v *= std::abs(v(imax)) / v(imax);
    return v;
}

/// Quadratic Majorana Hamiltonian H = (i/2) gamma^T B gamma for a real
/// antisymmetric B; Hermitian by construction.
inline MatrixXc quadratic_hamiltonian(const MajoranaAlgebra& alg,
                                      const Eigen::MatrixXd& b) {
    if (b.rows() != alg.count() || b.cols() != alg.count())
        throw std::invalid_argument("quadratic_hamiltonian: size mismatch");
    const std::complex<double> I(0.0, 1.0);
    MatrixXc h = MatrixXc::Zero(alg.dim(), alg.dim());
    for (int i = 0; i < alg.count(); ++i)
        for (int j = 0; j < alg.count(); ++j)
            if (b(i, j) != 0.0)
                h += 0.5 * I * b(i, j) * MatrixXc(alg.gamma(i) * alg.gamma(j));
    return h;
}

/// Signed permutation matrix of the length-len standard cycle, with entry
/// +1 at (alpha, alpha + 1) and a wrap entry of +1 for odd length, -1 for
/// even, matching the canonical cycle sign convention.
inline Eigen::MatrixXd cycle_permutation_matrix(int len) {
    if (len < 1) throw std::invalid_argument("cycle_permutation_matrix: len must be >= 1");
    Eigen::MatrixXd tau = Eigen::MatrixXd::Zero(len, len);
    for (int a = 0; a + 1 < len; ++a) tau(a, a + 1) = 1.0;
    tau(len - 1, 0) += (len % 2 == 0) ? -1.0 : 1.0;
    return tau;
}

/// Single-cycle coupling matrix in the psi-then-chi Majorana ordering,
/// built from the signed cycle permutation matrix tau of the given length.
/// chains = 1: B = Lambda [[0, -tau^T], [tau, 0]] with Lambda = scale
/// (theta ignored). chains = 2 doubles each slot into an (L, R) pair and
/// adds the monitoring block, with Lambda = scale cos(theta) on the
/// inter-replica hops and mu = scale sin(theta) on the onsite L-R pairs.
inline Eigen::MatrixXd cycle_coupling_matrix(int len, double theta, double scale,
                                             int chains) {
    Eigen::MatrixXd tau = cycle_permutation_matrix(len);
    if (chains == 1) {
        int p = len;
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(2 * p, 2 * p);
        b.block(0, p, p, p) = -scale * tau.transpose();
        b.block(p, 0, p, p) = scale * tau;
        return b;
    }
    if (chains != 2)
        throw std::invalid_argument("cycle_coupling_matrix: chains must be 1 or 2");
    double lambda = scale * std::cos(theta);
    double mu = scale * std::sin(theta);
    int p = 2 * len;
    // psi block: modes (alpha, c) at index 2*alpha + c, c = 0 (L), 1 (R);
    // chi block mirrors it at offset p.
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(2 * p, 2 * p);
    for (int a = 0; a < len; ++a) {
        for (int bt = 0; bt < len; ++bt) {
            if (tau(a, bt) == 0.0) continue;
            for (int c = 0; c < 2; ++c) {
                int i = 2 * a + c, j = 2 * bt + c;
                b(p + i, j) += lambda * tau(a, bt);
                b(j, p + i) -= lambda * tau(a, bt);
            }
        }
        // monitoring couples the L and R chains of one replica, on both
        // the psi and chi contours with opposite signs.
        int iL = 2 * a, iR = 2 * a + 1;
        b(iL, iR) += mu;
        b(iR, iL) -= mu;
        b(p + iL, p + iR) -= mu;
        b(p + iR, p + iL) += mu;
    }
    return b;
}

/// Exact finite-T transition amplitude <EPR| e^{T H} |EPR> for the
/// single-cycle Hamiltonian, via full diagonalization of the Hermitian
/// i-free form.
inline double oracle_cycle_amplitude(int len, double theta, double scale, double T,
                                     int chains) {
    Eigen::MatrixXd b = cycle_coupling_matrix(len, theta, scale, chains);
    MajoranaAlgebra alg(static_cast<int>(b.rows()));
    MatrixXc h = quadratic_hamiltonian(alg, b);
    // H is anti-Hermitian-free: (1/2) gamma B gamma with real antisymmetric
    // B is Hermitian up to the i in gamma products; symmetrize to be safe.
    MatrixXc hsym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(hsym);
    VectorXc epr = epr_state(alg);
    VectorXc proj = es.eigenvectors().adjoint() * epr;
    double amp = 0.0;
    for (int s = 0; s < proj.size(); ++s)
        amp += std::norm(proj(s)) * std::exp(T * es.eigenvalues()(s));
    return amp;
}

/// Leading late-time behavior extracted from the same diagonalization:
/// growth_rate is the largest eigenvalue carrying nonzero EPR overlap and
/// coefficient the summed overlap weight at that eigenvalue.
struct StrippedAmplitude {
    double growth_rate = 0.0;
    double coefficient = 0.0;
};

inline StrippedAmplitude oracle_stripped_amplitude(int len, double theta,
                                                   double scale, int chains) {
    Eigen::MatrixXd b = cycle_coupling_matrix(len, theta, scale, chains);
    MajoranaAlgebra alg(static_cast<int>(b.rows()));
    MatrixXc h = quadratic_hamiltonian(alg, b);
    MatrixXc hsym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(hsym);
    VectorXc epr = epr_state(alg);
    VectorXc proj = es.eigenvectors().adjoint() * epr;
    double emax = -1e300;
    for (int s = 0; s < proj.size(); ++s)
        if (std::norm(proj(s)) > 1e-18 && es.eigenvalues()(s) > emax)
            emax = es.eigenvalues()(s);
    double coeff = 0.0;
    for (int s = 0; s < proj.size(); ++s)
        if (es.eigenvalues()(s) > emax - 1e-9 * std::max(1.0, std::abs(emax)))
            coeff += std::norm(proj(s));
    return {emax, coeff};
}

/// The operator implementing a cyclic replica permutation on n replicas of
/// N Majorana flavors: a product of two-Majorana rotations
/// exp((pi/2) gamma^{(alpha)}_i gamma^{(alpha+1)}_i) applied for alpha =
/// n-2, ..., 0, each expanded as cos(pi/4) + 2 sin(pi/4) gamma gamma.
/// Modes are replica-major: flavor i of replica alpha sits at alpha*N + i.
/// If n*N is odd the algebra is padded with one spectator Majorana.
inline MatrixXc cyclic_permutation_operator(const MajoranaAlgebra& alg, int n, int N) {
    if (n * N > alg.count())
        throw std::invalid_argument("cyclic_permutation_operator: algebra too small");
    MatrixXc op = MatrixXc::Identity(alg.dim(), alg.dim());
    const double c = std::cos(M_PI / 4.0), s = std::sin(M_PI / 4.0);
    for (int alpha = n - 2; alpha >= 0; --alpha) {
        for (int i = 0; i < N; ++i) {
            int a = alpha * N + i;
            int bidx = (alpha + 1) * N + i;
            MatrixXc rot = c * MatrixXc::Identity(alg.dim(), alg.dim())
                         + 2.0 * s * MatrixXc(alg.gamma(a) * alg.gamma(bidx));
            op = rot * op;
        }
    }
    return op;
}

/// Renyi data of a density matrix restricted to the span of monomials in a
/// Majorana subset: returns tr(rho_A^n) by exact reduced-density-matrix
/// reconstruction. The subset is given as Majorana indices of the algebra;
/// at most 8 are supported. rho must act on the full algebra dimension.
inline Eigen::MatrixXcd reduced_density_majorana(const MajoranaAlgebra& alg,
                                                 const MatrixXc& rho,
                                                 const std::vector<int>& subset) {
    int kappa = static_cast<int>(subset.size());
    if (kappa < 2 || kappa % 2 != 0 || kappa > 8)
        throw std::invalid_argument("reduced_density_majorana: subset size must be even, in [2, 8]");
    MajoranaAlgebra local(kappa);
    int dloc = local.dim();
    MatrixXc rho_a = MatrixXc::Zero(dloc, dloc);
    const std::complex<double> I(0.0, 1.0);
    for (int mask = 0; mask < (1 << kappa); ++mask) {
        // Hermitian monomial h = i^{|S|(|S|-1)/2} prod_j sqrt(2) gamma_j.
        int sz = __builtin_popcount(static_cast<unsigned>(mask));
        MatrixXc h_full = MatrixXc::Identity(alg.dim(), alg.dim());
        MatrixXc h_loc = MatrixXc::Identity(dloc, dloc);
        for (int j = 0; j < kappa; ++j) {
            if (!(mask >> j & 1)) continue;
            h_full = h_full * (std::sqrt(2.0) * MatrixXc(alg.gamma(subset[j])));
            h_loc = h_loc * (std::sqrt(2.0) * MatrixXc(local.gamma(j)));
        }
        std::complex<double> phase = std::pow(I, (sz * (sz - 1) / 2) % 4);
        h_full *= phase;
        h_loc *= phase;
        std::complex<double> ev = (rho * h_full).trace();
        rho_a += (ev.real() / dloc) * h_loc.adjoint();
    }
    return rho_a;
}

}  // namespace msyk

#endif  // MSYK_FOCK_HPP
