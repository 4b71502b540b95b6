#pragma once

// Complete elliptic integrals of the first and second kind,
//
//   K(k) = \int_0^{pi/2} dA / sqrt(1 - k^2 sin^2 A)
//   E(k) = \int_0^{pi/2} sqrt(1 - k^2 sin^2 A) dA
//
// evaluated by the arithmetic-geometric mean, plus the modulus pair used by
// the resonantly driven cavity: k = sqrt(1 - e^{-8 tau}), k~ = e^{-4 tau}.

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casimir_kerr {

// Modulus and complementary modulus carried together: once k~ drops below
// ~1e-8 the modulus k itself rounds to 1 in double precision, so k alone
// cannot represent the large-tau regime.
struct EllipticModulus {
    double k;       // in [0, 1)
    double k_comp;  // k~ = sqrt(1 - k^2), in (0, 1]
};

inline EllipticModulus modulus_from_tau(double tau) {
    if (!(tau >= 0.0))
        throw std::domain_error("modulus_from_tau: tau must be >= 0");
    return EllipticModulus{std::sqrt(-std::expm1(-8.0 * tau)), std::exp(-4.0 * tau)};
}

namespace detail {

inline constexpr double agm_rel_tol = 1e-15;
inline constexpr int agm_max_iter = 64;
// Below this complementary modulus, switch K and E to the logarithmic
// asymptotics; avoids degenerate AGM(1, ~0) while k~*K stays accurate.
inline constexpr double k_comp_asymptotic = 1e-8;

struct KePair {
    double K;
    double E;
};

// a_{n+1} = (a_n+b_n)/2, b_{n+1} = sqrt(a_n b_n), c_{n+1} = (a_n-b_n)/2;
// K = pi/(2 a_N), E = K (1 - sum_n 2^{n-1} c_n^2).
inline KePair agm_elliptic(double k, double k_comp) {
    double a = 1.0;
    double b = k_comp;
    double c_sum = 0.5 * k * k;
    double pow2 = 0.5;
    for (int n = 1; n <= agm_max_iter; ++n) {
        const double c = 0.5 * (a - b);
        const double a_next = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = a_next;
        pow2 *= 2.0;
        c_sum += pow2 * c * c;
        if (std::abs(c) <= agm_rel_tol * a)
            break;
    }
    const double K = std::numbers::pi / (2.0 * a);
    return KePair{K, K * (1.0 - c_sum)};
}

// K = ln(4/k~) + (k~^2/4)(ln(4/k~) - 1) + O(k~^4 ln),
// E = 1 + (k~^2/2)(ln(4/k~) - 1/2) + O(k~^4 ln); exact to double precision
// for k~ <= 1e-8.
inline KePair asymptotic_near_one(double k_comp) {
    const double L = std::log(4.0 / k_comp);
    const double kc2 = k_comp * k_comp;
    return KePair{L + 0.25 * kc2 * (L - 1.0), 1.0 + 0.5 * kc2 * (L - 0.5)};
}

}  // namespace detail

inline double ellip_k(const EllipticModulus& m) {
    if (m.k_comp <= 0.0)
        throw std::domain_error("ellip_k: diverges at k = 1");
    if (m.k_comp < detail::k_comp_asymptotic)
        return detail::asymptotic_near_one(m.k_comp).K;
    return detail::agm_elliptic(m.k, m.k_comp).K;
}

inline double ellip_e(const EllipticModulus& m) {
    if (m.k_comp == 0.0)
        return 1.0;  // E(1) = integral of |cos|
    if (m.k_comp < detail::k_comp_asymptotic)
        return detail::asymptotic_near_one(m.k_comp).E;
    return detail::agm_elliptic(m.k, m.k_comp).E;
}

inline double ellip_k(double k) {
    if (!(k >= 0.0) || k >= 1.0)
        throw std::domain_error("ellip_k: k must be in [0, 1)");
    return ellip_k(EllipticModulus{k, std::sqrt((1.0 - k) * (1.0 + k))});
}

inline double ellip_e(double k) {
    if (!(k >= 0.0) || k > 1.0)
        throw std::domain_error("ellip_e: k must be in [0, 1]");
    return ellip_e(EllipticModulus{k, std::sqrt((1.0 - k) * (1.0 + k))});
}

}  // namespace casimir_kerr
