#pragma once

// Photon generation rate in the principal cavity mode, driven by squeezed
// coherent / coherent / (squeezed) vacuum fields.  The canonical closed form
// is evaluated through xi_1^{(1)}, eta_1^{(1)}:
//
//   dN/dtau = (-2 eta xi) [mu^2|a|^2 - 2 mu Re(nu* a^2) + |nu|^2 |a|^2 + |nu|^2]
//           + 2 Re(-eta^2 - xi^2) Re[mu^2 a^2 - 2 mu nu |a|^2 - mu nu + nu^2 a*^2]
//           + (-2 eta xi) [|a|^2 (mu^2 + |nu|^2) - 2 mu Re(nu* a^2) + mu^2]
//
// which reduces for mu = 1, nu = 0 to the coherent-drive rate
//   dN/dtau = -4 eta xi |a|^2 - 2 eta xi + 2 Re(-eta^2 - xi^2) Re(a^2).

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "casimir_kerr/mode_coupling.hpp"
#include "casimir_kerr/quantum_states.hpp"
#include "casimir_kerr/types.hpp"

namespace casimir_kerr {

namespace detail {

struct RateBrackets {
    double b1;  // multiplies -2 eta xi
    double b2;  // multiplies 2 Re(-eta^2 - xi^2)
    double b3;  // multiplies -2 eta xi
};

inline RateBrackets rate_brackets(const SqueezedCoherentParams& p) {
    const auto [mu, nu] = mu_nu(p);
    const ComplexAmplitude a = p.alpha;
    const ComplexAmplitude ac = std::conj(a);
    const double a2 = std::norm(a);
    const double nu2 = std::norm(nu);
    RateBrackets b;
    b.b1 = mu * mu * a2 - 2.0 * mu * std::real(std::conj(nu) * a * a) + nu2 * a2 + nu2;
    b.b2 = std::real(mu * mu * a * a - 2.0 * mu * nu * a2 - mu * nu + nu * nu * ac * ac);
    b.b3 = a2 * (mu * mu + nu2) - 2.0 * mu * std::real(std::conj(nu) * a * a) + mu * mu;
    return b;
}

}  // namespace detail

inline double rate_squeezed(double tau, const SqueezedCoherentParams& p) {
    const XiEta c = closed_form_xi1_eta1(tau);
    const detail::RateBrackets b = detail::rate_brackets(p);
    const double pref = -2.0 * c.eta * c.xi;
    return pref * b.b1 + 2.0 * (-c.eta * c.eta - c.xi * c.xi) * b.b2 + pref * b.b3;
}

inline double rate_coherent(double tau, ComplexAmplitude alpha) {
    const XiEta c = closed_form_xi1_eta1(tau);
    const double a2 = std::norm(alpha);
    return -4.0 * c.eta * c.xi * a2 - 2.0 * c.eta * c.xi
         + 2.0 * (-c.eta * c.eta - c.xi * c.xi) * std::real(alpha * alpha);
}

// dN/dtau at tau -> 0 (xi -> 1, eta -> 0):
//   -2 Re(mu^2 a^2 - 2 mu nu |a|^2 - mu nu + nu^2 a*^2)
inline double rate_limit_tau0(const SqueezedCoherentParams& p) {
    return -2.0 * detail::rate_brackets(p).b2;
}

struct RateCurve {
    SqueezedCoherentParams driving;
    std::string label;
    std::vector<std::pair<double, double>> samples;  // (tau, dN/dtau); fig 2 uses (|zeta|, rate)
};

// N(tau) by composite Simpson of the closed-form rate, N(0) = 0 (photons
// created relative to the initial state; the rate, not the occupancy, is the
// primary object).  Each output step is a Simpson panel with midpoint.
inline std::vector<std::pair<double, double>> cumulative_photons(const SqueezedCoherentParams& p,
                                                                 double tau_end, int n_samples) {
    if (!(tau_end > 0.0))
        throw std::invalid_argument("cumulative_photons: tau_end must be > 0");
    if (n_samples < 2)
        throw std::invalid_argument("cumulative_photons: n_samples must be >= 2");
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(n_samples));
    const double h = tau_end / (n_samples - 1);
    double acc = 0.0;
    double f_left = rate_squeezed(0.0, p);
    out.emplace_back(0.0, 0.0);
    for (int i = 1; i < n_samples; ++i) {
        const double t1 = i * h;
        const double f_mid = rate_squeezed(t1 - 0.5 * h, p);
        const double f_right = rate_squeezed(t1, p);
        acc += (h / 6.0) * (f_left + 4.0 * f_mid + f_right);
        out.emplace_back(t1, acc);
        f_left = f_right;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Figure sweeps
// ---------------------------------------------------------------------------

struct FigureConfig {
    int figure = 1;                                    // 1..4
    double tau_max = 1.0;
    int samples = 201;
    double intensity = 7.0;                            // target <n> for matched states
    std::vector<double> zeta_values{0.8, 1.0, 1.2, 1.5};
    double zeta_phase = 0.0;
    double alpha_phase = 0.0;                          // real alpha throughout
    std::vector<double> limit_alphas{0.2, 0.8, 2.0, std::sqrt(7.0)};  // fig 2
    double limit_zeta_max = 2.0;                       // fig 2 x-range
    int limit_points = 100;
};

namespace detail {

inline std::string format_zeta(double z) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", z);
    return buf;
}

inline RateCurve sampled_curve(const SqueezedCoherentParams& p, std::string label,
                               double tau_max, int samples) {
    if (samples < 2 || !(tau_max > 0.0))
        throw std::invalid_argument("figure_sweep: need samples >= 2 and tau_max > 0");
    RateCurve c{p, std::move(label), {}};
    c.samples.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double tau = tau_max * static_cast<double>(i) / (samples - 1);
        c.samples.emplace_back(tau, rate_squeezed(tau, p));
    }
    return c;
}

}  // namespace detail

// Fig 1: coherent |a|^2 = intensity plus intensity-matched squeezed states.
// Fig 2: tau -> 0 limit rate versus |zeta| for fixed real alphas.
// Fig 3: fixed shared real alpha = sqrt(intensity), no matching.
// Fig 4: vacuum and squeezed vacua.
inline std::vector<RateCurve> figure_sweep(const FigureConfig& cfg) {
    std::vector<RateCurve> curves;
    switch (cfg.figure) {
        case 1: {
            const SqueezedCoherentParams coh{std::polar(std::sqrt(cfg.intensity), cfg.alpha_phase), 0.0, 0.0};
            curves.push_back(detail::sampled_curve(
                coh, "coherent |alpha|^2=" + detail::format_short(cfg.intensity), cfg.tau_max, cfg.samples));
            for (double z : cfg.zeta_values) {
                const SqueezedCoherentParams p =
                    match_intensity(z, cfg.zeta_phase, cfg.alpha_phase, cfg.intensity);
                curves.push_back(detail::sampled_curve(
                    p, "squeezed |zeta|=" + detail::format_short(z) + " matched <n>=" +
                       detail::format_short(cfg.intensity), cfg.tau_max, cfg.samples));
            }
            break;
        }
        case 2: {
            for (double a : cfg.limit_alphas) {
                RateCurve c;
                c.driving = SqueezedCoherentParams{std::polar(a, cfg.alpha_phase), 0.0, cfg.zeta_phase};
                c.label = "limit-rate x=zeta alpha=" + detail::format_short(a);
                c.samples.reserve(static_cast<std::size_t>(cfg.limit_points));
                for (int i = 0; i < cfg.limit_points; ++i) {
                    const double z = cfg.limit_zeta_max * static_cast<double>(i) / (cfg.limit_points - 1);
                    const SqueezedCoherentParams p{std::polar(a, cfg.alpha_phase), z, cfg.zeta_phase};
                    c.samples.emplace_back(z, rate_limit_tau0(p));
                }
                curves.push_back(std::move(c));
            }
            break;
        }
        case 3: {
            const double a = std::sqrt(cfg.intensity);
            const SqueezedCoherentParams coh{std::polar(a, cfg.alpha_phase), 0.0, 0.0};
            curves.push_back(detail::sampled_curve(
                coh, "coherent alpha=" + detail::format_short(a), cfg.tau_max, cfg.samples));
            for (double z : cfg.zeta_values) {
                const SqueezedCoherentParams p{std::polar(a, cfg.alpha_phase), z, cfg.zeta_phase};
                curves.push_back(detail::sampled_curve(
                    p, "squeezed |zeta|=" + detail::format_short(z) + " alpha=" + detail::format_short(a),
                    cfg.tau_max, cfg.samples));
            }
            break;
        }
        case 4: {
            const SqueezedCoherentParams vac{ComplexAmplitude{0.0, 0.0}, 0.0, 0.0};
            curves.push_back(detail::sampled_curve(vac, "vacuum", cfg.tau_max, cfg.samples));
            for (double z : cfg.zeta_values) {
                const SqueezedCoherentParams p{ComplexAmplitude{0.0, 0.0}, z, cfg.zeta_phase};
                curves.push_back(detail::sampled_curve(
                    p, "squeezed vacuum |zeta|=" + detail::format_short(z), cfg.tau_max, cfg.samples));
            }
            break;
        }
        default:
            throw std::invalid_argument("figure_sweep: figure must be 1..4");
    }
    return curves;
}

}  // namespace casimir_kerr
