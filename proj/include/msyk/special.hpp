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

#ifndef MSYK_SPECIAL_HPP
#define MSYK_SPECIAL_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace msyk {

/// Chebyshev function of the first kind T_x(a) for real (not necessarily
/// integer) order x, defined on a >= -1.
inline double chebyshev_T(double x, double a) {
    if (a > 1.0) return std::cosh(x * std::acosh(a));
    if (a >= -1.0) return std::cos(x * std::acos(a));
    throw std::domain_error("chebyshev_T: argument must be >= -1");
}

/// 2F1(x, -x; 1/2; z) for z <= 1/2, via the Chebyshev identity
/// 2F1(x, -x; 1/2; z) = T_x(1 - 2z).
inline double hyp2f1_spectral(double x, double z) {
    if (z > 0.5 + 1e-15) throw std::domain_error("hyp2f1_spectral: z must be <= 1/2");
    return chebyshev_T(x, 1.0 - 2.0 * z);
}

struct JacobiElliptic {
    double sn;
    double cn;
    double dn;
};

/// Jacobi elliptic functions. For parameter m in [0, 1] they are computed
/// by the arithmetic-geometric mean with back-recursion of the amplitude;
/// m > 1 is folded back with the reciprocal-modulus transformation
/// sn(u, m) = sn(sqrt(m) u, 1/m) / sqrt(m), cn <-> dn swapped.
inline JacobiElliptic jacobi_elliptic(double u, double m) {
    if (m < 0.0) throw std::domain_error("jacobi_elliptic: m must be >= 0");
    if (m > 1.0) {
        JacobiElliptic r = jacobi_elliptic(std::sqrt(m) * u, 1.0 / m);
        return {r.sn / std::sqrt(m), r.dn, r.cn};
    }
    if (m < 1e-14) return {std::sin(u), std::cos(u), 1.0};
    if (m > 1.0 - 1e-14) {
        double sech = 1.0 / std::cosh(u);
        return {std::tanh(u), sech, sech};
    }

    constexpr int kMaxIter = 32;
    double a[kMaxIter], c[kMaxIter];
    a[0] = 1.0;
    double b = std::sqrt(1.0 - m);
    c[0] = std::sqrt(m);
    int nstep = 0;
    for (int i = 1; i < kMaxIter; ++i) {
        a[i] = 0.5 * (a[i - 1] + b);
        c[i] = 0.5 * (a[i - 1] - b);
        b = std::sqrt(a[i - 1] * b);
        nstep = i;
        if (std::abs(c[i]) < 1e-16 * a[i]) break;
    }
    double phi = std::ldexp(a[nstep] * u, nstep);
    for (int i = nstep; i > 0; --i)
        phi = 0.5 * (phi + std::asin(std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0)));
    double sn = std::sin(phi);
    double cn = std::cos(phi);
    double dn = std::sqrt(1.0 - m * sn * sn);
    return {sn, cn, dn};
}

inline std::pair<double, double> jacobi_sn_dn(double u, double m) {
    JacobiElliptic r = jacobi_elliptic(u, m);
    return {r.sn, r.dn};
}

/// Pfaffian of a real antisymmetric matrix by Parlett-Reid tridiagonal
/// reduction with partial pivoting. Returns exactly 0 when a pivot column
/// vanishes (odd-rank degeneracy).
inline double pfaffian(Eigen::MatrixXd a) {
    const auto n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("pfaffian: matrix must be square");
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: dimension must be even");
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if (((a + a.transpose()).cwiseAbs().maxCoeff()) > 1e-12 * scale)
        throw std::invalid_argument("pfaffian: matrix must be antisymmetric");
    if (n == 0) return 1.0;

    double pf = 1.0;
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        Eigen::Index piv = k + 1;
        double best = std::abs(a(k, k + 1));
        for (Eigen::Index i = k + 2; i < n; ++i) {
            if (std::abs(a(k, i)) > best) {
                best = std::abs(a(k, i));
                piv = i;
            }
        }
        if (best < 1e-13 * scale) return 0.0;
        if (piv != k + 1) {
            a.row(piv).swap(a.row(k + 1));
            a.col(piv).swap(a.col(k + 1));
            pf = -pf;
        }
        pf *= a(k, k + 1);
        if (k + 2 < n) {
            double inv = 1.0 / a(k, k + 1);
            Eigen::VectorXd tau = a.col(k).segment(k + 2, n - k - 2) * inv;
            auto block = a.block(k + 2, k + 2, n - k - 2, n - k - 2);
            block += tau * a.row(k + 1).segment(k + 2, n - k - 2)
                   + a.col(k + 1).segment(k + 2, n - k - 2) * tau.transpose();
        }
    }
    return pf;
}

/// Both sides of prod_k (2a + 2 cos k) = 2 (T_n(a) + 1), the product
/// running over the parity-matched momentum grid: k = 2 pi j / n for odd
/// n, k = (2j - 1) pi / n for even n.
struct TrigProduct {
    double lhs;
    double rhs;
};

inline TrigProduct trig_product_identity(int n, double a) {
    if (n < 1) throw std::invalid_argument("trig_product_identity: n must be >= 1");
    double lhs = 1.0;
    for (int j = 1; j <= n; ++j) {
        double k = (n % 2 == 0) ? (2.0 * j - 1.0) * M_PI / n : 2.0 * M_PI * j / n;
        lhs *= 2.0 * a + 2.0 * std::cos(k);
    }
    double rhs = 2.0 * (chebyshev_T(static_cast<double>(n), a) + 1.0);
    return {lhs, rhs};
}

}  // namespace msyk

#endif  // MSYK_SPECIAL_HPP
