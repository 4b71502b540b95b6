#pragma once

// Bogoliubov coefficients xi_1^{(n)}(tau), eta_1^{(n)}(tau) for a cavity whose
// wall oscillates at twice the fundamental, L(t) = L0 [1 + eps sin(2 w1 t)],
// produced two independent ways:
//
//   * the n = 1 closed forms through the complete elliptic integrals,
//         xi_1^{(1)}  =  (2/pi) (E + k~ K) / (1 + k~)
//         eta_1^{(1)} = -(2/pi) (E - k~ K) / (1 - k~)
//   * RK4 integration of the coupled slow-time recursion
//         xi'_1 = -eta_1 - xi_3,          eta'_1 = -xi_1 - eta_3,
//         xi'_n = n (xi_{n-2} - xi_{n+2}),  n >= 3   (same for eta),
//     truncated by xi_{n_max+2} = eta_{n_max+2} = 0.
//
// Only odd n are populated; the excitation spreads outward from n = 1.

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "casimir_kerr/elliptic.hpp"
#include "casimir_kerr/types.hpp"

namespace casimir_kerr {

// Wall motion in natural units (c = 1): fundamental w1 = pi/L0, modulation
// depth eps.  The slow-time description assumes eps << 1; depths above 0.01
// are flagged, depths above 0.1 rejected.
struct WallMotion {
    double L0;
    double eps;

    WallMotion(double length, double depth) : L0(length), eps(depth) {
        if (!(L0 > 0.0))
            throw std::invalid_argument("WallMotion: L0 must be > 0");
        if (!(eps > 0.0) || eps > 0.1)
            throw std::invalid_argument("WallMotion: eps must be in (0, 0.1]");
    }

    double omega1() const { return std::numbers::pi / L0; }
    bool depth_warning() const { return eps > 0.01; }
};

// tau = (1/2) eps w1 t
inline double slow_time(double t, const WallMotion& wall) {
    return 0.5 * wall.eps * wall.omega1() * t;
}

inline double lab_time(double tau, const WallMotion& wall) {
    return 2.0 * tau / (wall.eps * wall.omega1());
}

struct XiEta {
    double xi;
    double eta;
};

// eta has a removable 0/0 at tau = 0; below the switch point it is evaluated
// from its Taylor series  eta = -tau + (5/6) tau^3 - (53/60) tau^5 + O(tau^7).
inline constexpr double eta_series_switch = 1e-3;

inline XiEta closed_form_xi1_eta1(double tau) {
    if (!(tau >= 0.0))
        throw std::domain_error("closed_form_xi1_eta1: tau must be >= 0");
    const EllipticModulus m = modulus_from_tau(tau);
    const double K = ellip_k(m);
    const double E = ellip_e(m);
    XiEta out;
    out.xi = (2.0 / std::numbers::pi) * (E + m.k_comp * K) / (1.0 + m.k_comp);
    if (tau < eta_series_switch) {
        const double t2 = tau * tau;
        out.eta = -tau * (1.0 - t2 * (5.0 / 6.0 - t2 * (53.0 / 60.0)));
    } else {
        // 1 - k~ via expm1 keeps the denominator exact for small tau
        out.eta = -(2.0 / std::numbers::pi) * (E - m.k_comp * K) / (-std::expm1(-4.0 * tau));
    }
    return out;
}

// Coefficients for one slow-time instant, indexed by odd n in [1, n_max].
// Values are stored complex (the general mode expansion admits complex
// coefficients) but remain real for this wall law.
struct CoefficientTable {
    double tau = 0.0;
    int n_max = 0;
    std::vector<ComplexAmplitude> xi;   // index i <-> n = 2i + 1
    std::vector<ComplexAmplitude> eta;

    CoefficientTable() = default;
    CoefficientTable(double tau_, int n_max_)
        : tau(tau_), n_max(n_max_),
          xi((n_max_ + 1) / 2, ComplexAmplitude{0.0, 0.0}),
          eta((n_max_ + 1) / 2, ComplexAmplitude{0.0, 0.0}) {}

    std::size_t index_of(int n) const {
        if (n < 1 || n > n_max || n % 2 == 0)
            throw std::out_of_range("CoefficientTable: need odd n in [1, n_max]");
        return static_cast<std::size_t>((n - 1) / 2);
    }
    ComplexAmplitude xi_at(int n) const { return xi[index_of(n)]; }
    ComplexAmplitude eta_at(int n) const { return eta[index_of(n)]; }
};

// Time derivative of the truncated system; usable on any table, so oracles
// can form exact RHS derivatives without finite differences.
inline void recursion_rhs(std::span<const ComplexAmplitude> xi,
                          std::span<const ComplexAmplitude> eta,
                          std::span<ComplexAmplitude> dxi,
                          std::span<ComplexAmplitude> deta) {
    const std::size_t m = xi.size();
    dxi[0] = -eta[0] - (m > 1 ? xi[1] : ComplexAmplitude{});
    deta[0] = -xi[0] - (m > 1 ? eta[1] : ComplexAmplitude{});
    for (std::size_t i = 1; i < m; ++i) {
        const double n = static_cast<double>(2 * i + 1);
        const ComplexAmplitude xp = (i + 1 < m) ? xi[i + 1] : ComplexAmplitude{};
        const ComplexAmplitude ep = (i + 1 < m) ? eta[i + 1] : ComplexAmplitude{};
        dxi[i] = n * (xi[i - 1] - xp);
        deta[i] = n * (eta[i - 1] - ep);
    }
}

namespace detail {

inline void rk4_step(std::vector<ComplexAmplitude>& xi, std::vector<ComplexAmplitude>& eta,
                     double h, std::vector<ComplexAmplitude>* work) {
    const std::size_t m = xi.size();
    // work layout: k1x k1e k2x k2e k3x k3e k4x k4e tx te
    auto w = [&](int j) { return std::span<ComplexAmplitude>(work[j]); };
    recursion_rhs(xi, eta, w(0), w(1));
    for (std::size_t i = 0; i < m; ++i) {
        work[8][i] = xi[i] + 0.5 * h * work[0][i];
        work[9][i] = eta[i] + 0.5 * h * work[1][i];
    }
    recursion_rhs(work[8], work[9], w(2), w(3));
    for (std::size_t i = 0; i < m; ++i) {
        work[8][i] = xi[i] + 0.5 * h * work[2][i];
        work[9][i] = eta[i] + 0.5 * h * work[3][i];
    }
    recursion_rhs(work[8], work[9], w(4), w(5));
    for (std::size_t i = 0; i < m; ++i) {
        work[8][i] = xi[i] + h * work[4][i];
        work[9][i] = eta[i] + h * work[5][i];
    }
    recursion_rhs(work[8], work[9], w(6), w(7));
    const double h6 = h / 6.0;
    for (std::size_t i = 0; i < m; ++i) {
        xi[i] += h6 * (work[0][i] + 2.0 * work[2][i] + 2.0 * work[4][i] + work[6][i]);
        eta[i] += h6 * (work[1][i] + 2.0 * work[3][i] + 2.0 * work[5][i] + work[7][i]);
    }
}

}  // namespace detail

// Integrates from the tau = 0 initial condition (xi_1 = 1, all else 0) and
// returns one table per requested sample time.  Sample times must be
// nondecreasing and >= 0; they need not be commensurate with dtau (the last
// step into a sample is shortened).
inline std::vector<CoefficientTable> integrate_recursion_at(std::span<const double> sample_taus,
                                                            int n_max, double dtau) {
    if (n_max < 5 || n_max % 2 == 0)
        throw std::invalid_argument("integrate_recursion: n_max must be odd and >= 5");
    if (!(dtau > 0.0))
        throw std::invalid_argument("integrate_recursion: dtau must be > 0");
    if (dtau >= 0.01)
        throw std::invalid_argument("integrate_recursion: dtau >= 0.01 rejected (stability)");
    for (std::size_t i = 0; i < sample_taus.size(); ++i) {
        if (!(sample_taus[i] >= 0.0) || (i > 0 && sample_taus[i] < sample_taus[i - 1]))
            throw std::invalid_argument("integrate_recursion: samples must be nondecreasing and >= 0");
    }

    const std::size_t m = static_cast<std::size_t>((n_max + 1) / 2);
    std::vector<ComplexAmplitude> xi(m), eta(m);
    xi[0] = 1.0;

    std::vector<ComplexAmplitude> work[10];
    for (auto& v : work) v.resize(m);

    std::vector<CoefficientTable> out;
    out.reserve(sample_taus.size());
    double t = 0.0;
    for (double target : sample_taus) {
        while (target - t > 0.5 * dtau) {
            const double h = (target - t > 1.5 * dtau) ? dtau : (target - t);
            detail::rk4_step(xi, eta, h, work);
            t += h;
        }
        t = target;  // absorb accumulated rounding; step error is O(dtau^5)
        CoefficientTable table(t, n_max);
        table.xi = xi;
        table.eta = eta;
        out.push_back(std::move(table));
    }
    return out;
}

// Uniform sampling of [0, tau_end] with n_samples points (tau = 0 included).
inline std::vector<CoefficientTable> integrate_recursion(double tau_end, int n_max, double dtau,
                                                         int n_samples = 2) {
    if (!(tau_end > 0.0))
        throw std::invalid_argument("integrate_recursion: tau_end must be > 0");
    if (n_samples < 2)
        throw std::invalid_argument("integrate_recursion: n_samples must be >= 2");
    std::vector<double> taus(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i)
        taus[static_cast<std::size_t>(i)] = tau_end * static_cast<double>(i) / (n_samples - 1);
    return integrate_recursion_at(taus, n_max, dtau);
}

// alpha_n1 = sqrt(1/n) xi_1^{(n)},  beta_n1 = sqrt(1/n) eta_1^{(n)}.
// Only the principal mode m = 1 is supported.
struct BogoliubovPair {
    ComplexAmplitude alpha;
    ComplexAmplitude beta;
};

inline BogoliubovPair bogoliubov_coeffs(const CoefficientTable& table, int n, int m = 1) {
    if (m != 1)
        throw std::invalid_argument("bogoliubov_coeffs: unsupported mode (m = 1 only)");
    const double w = 1.0 / std::sqrt(static_cast<double>(n));
    return BogoliubovPair{w * table.xi_at(n), w * table.eta_at(n)};
}

}  // namespace casimir_kerr
