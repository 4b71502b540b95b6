#pragma once

// Three-photon absorption in a Kerr-like medium.  Quantum rate for a field
// state with creation moment <b'^3>:
//
//   R3 = | (i F* d_ln)(i F* d_nm)(i F* d_mg) (f_l - f_g) <b'^3>
//          / [(w_ln - w + i g)(w_lm - 2w + i g)] |^2  *  2 pi rho(w_lg - 3w)
//
// (the hbar^3 of the dipole legs cancels the hbar^3 of the denominator, so
// only the reduced per-leg coupling F*d enters).  The semi-classical rate is
// the same expression with (i hbar F* alpha*) -> E; its denominators carry
// the same +i gamma regularization, otherwise they diverge on resonance.
// rho is the unit-area Lorentzian density of final states.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "casimir_kerr/quantum_states.hpp"
#include "casimir_kerr/types.hpp"

namespace casimir_kerr {

inline constexpr double hbar_si = 1.054571817e-34;  // J s

// Equal-spacing three-step ladder g -> m -> n -> l: w_ln = w_nm = w_mg = w_lg/3.
struct AtomicLadder {
    double omega_lg;          // g -> l transition (rad/s)
    double gamma;             // common phenomenological decay (rad/s)
    double f_l = 0.0;         // upper-level population
    double f_g = 1.0;         // ground-level population
    bool equal_ladder = true;

    AtomicLadder(double omega_lg_, double gamma_, double f_l_ = 0.0, double f_g_ = 1.0,
                 bool equal_ladder_ = true)
        : omega_lg(omega_lg_), gamma(gamma_), f_l(f_l_), f_g(f_g_), equal_ladder(equal_ladder_) {
        if (!(omega_lg > 0.0))
            throw std::invalid_argument("AtomicLadder: omega_lg must be > 0");
        if (!(gamma > 0.0))
            throw std::invalid_argument("AtomicLadder: gamma must be > 0");
        if (f_l < 0.0 || f_l > 1.0 || f_g < 0.0 || f_g > 1.0)
            throw std::invalid_argument("AtomicLadder: populations must be in [0, 1]");
        if (!equal_ladder)
            throw std::invalid_argument("AtomicLadder: only the equal-spacing ladder is supported");
    }

    double omega_ln() const { return omega_lg / 3.0; }
    double omega_lm() const { return 2.0 * omega_lg / 3.0; }
};

// Dipole matrix elements per leg (C m) and carrier-photon interaction
// strength F; only the products F*d enter any rate.
struct CouplingSet {
    double d_ln;
    double d_nm;
    double d_mg;
    double F = 1.0;

    CouplingSet(double d_ln_, double d_nm_, double d_mg_, double F_ = 1.0)
        : d_ln(d_ln_), d_nm(d_nm_), d_mg(d_mg_), F(F_) {
        if (!(d_ln > 0.0) || !(d_nm > 0.0) || !(d_mg > 0.0) || !(F > 0.0))
            throw std::invalid_argument("CouplingSet: all magnitudes must be > 0");
    }
};

// rho(delta) = (1/pi) gamma / (delta^2 + gamma^2), unit area in delta.
inline double lorentzian_density(double delta, double gamma) {
    if (!(gamma > 0.0))
        throw std::domain_error("lorentzian_density: gamma must be > 0");
    return gamma / (std::numbers::pi * (delta * delta + gamma * gamma));
}

inline double rate_three_photon_quantum(double omega, const AtomicLadder& ladder,
                                        const CouplingSet& coupling, ComplexAmplitude moment3) {
    const ComplexAmplitude leg_ln{0.0, coupling.F * coupling.d_ln};
    const ComplexAmplitude leg_nm{0.0, coupling.F * coupling.d_nm};
    const ComplexAmplitude leg_mg{0.0, coupling.F * coupling.d_mg};
    const ComplexAmplitude d1{ladder.omega_ln() - omega, ladder.gamma};
    const ComplexAmplitude d2{ladder.omega_lm() - 2.0 * omega, ladder.gamma};
    const ComplexAmplitude amp = leg_ln * leg_nm * leg_mg * (ladder.f_l - ladder.f_g) * moment3 / (d1 * d2);
    return std::norm(amp) * 2.0 * std::numbers::pi *
           lorentzian_density(ladder.omega_lg - 3.0 * omega, ladder.gamma);
}

inline double rate_three_photon_semiclassical(double omega, const AtomicLadder& ladder,
                                              const CouplingSet& dipoles, ComplexAmplitude e_amplitude) {
    const ComplexAmplitude d1{ladder.omega_ln() - omega, ladder.gamma};
    const ComplexAmplitude d2{ladder.omega_lm() - 2.0 * omega, ladder.gamma};
    const ComplexAmplitude amp = (dipoles.d_ln * e_amplitude / hbar_si) *
                                 (dipoles.d_nm * e_amplitude / hbar_si) *
                                 (dipoles.d_mg * e_amplitude / hbar_si) / (d1 * d2);
    return std::norm(amp) * 2.0 * std::numbers::pi *
           lorentzian_density(ladder.omega_lg - 3.0 * omega, ladder.gamma);
}

struct AbsorptionSpectrum {
    std::string state_label;
    std::vector<std::pair<double, double>> samples;  // (omega, rate)
    double normalization = 1.0;                      // global max used for R3/R3_max

    double peak_rate() const {
        double m = 0.0;
        for (const auto& [w, r] : samples) m = std::max(m, r);
        return m;
    }
    double peak_omega() const {
        double m = -1.0, wm = 0.0;
        for (const auto& [w, r] : samples)
            if (r > m) { m = r; wm = w; }
        return wm;
    }
};

struct Figure5Config {
    double intensity = 7.0;
    std::vector<double> zeta_values{0.8, 1.0, 1.2, 1.5};
    double zeta_phase = 0.0;
    double alpha_phase = 0.0;
    double omega_lg = 3.0 * 2.0 * std::numbers::pi * 1e14;  // rad/s (placeholder scale)
    double gamma = 2.0 * std::numbers::pi * 1e13;           // rad/s
    double dipole = 8e-30;                                  // C m, all three legs
    double interaction_strength = 1.0;
    int points = 1001;        // forced odd so the resonance lands on the grid
    double span_gammas = 10.0;
};

// Quantum spectra over w_lg/3 +- span*gamma for the coherent state and the
// intensity-matched squeezed set, all normalized by the global maximum.
inline std::vector<AbsorptionSpectrum> figure5_sweep(const Figure5Config& cfg) {
    const AtomicLadder ladder{cfg.omega_lg, cfg.gamma};
    const CouplingSet coupling{cfg.dipole, cfg.dipole, cfg.dipole, cfg.interaction_strength};
    const int points = (cfg.points % 2 == 0) ? cfg.points + 1 : cfg.points;
    if (points < 3)
        throw std::invalid_argument("figure5_sweep: need at least 3 grid points");

    std::vector<std::pair<std::string, ComplexAmplitude>> states;
    {
        const ComplexAmplitude a = std::polar(std::sqrt(cfg.intensity), cfg.alpha_phase);
        states.emplace_back("coherent |alpha|^2=" + detail::format_short(cfg.intensity),
                            creation_moment3(SqueezedCoherentParams{a, 0.0, 0.0}));
        for (double z : cfg.zeta_values) {
            const SqueezedCoherentParams p =
                match_intensity(z, cfg.zeta_phase, cfg.alpha_phase, cfg.intensity);
            states.emplace_back("squeezed |zeta|=" + detail::format_short(z) + " matched <n>=" +
                                detail::format_short(cfg.intensity), creation_moment3(p));
        }
    }

    const double w0 = cfg.omega_lg / 3.0;
    const double half_span = cfg.span_gammas * cfg.gamma;
    std::vector<AbsorptionSpectrum> spectra;
    spectra.reserve(states.size());
    double global_max = 0.0;
    for (const auto& [label, m3] : states) {
        AbsorptionSpectrum s;
        s.state_label = label;
        s.samples.reserve(static_cast<std::size_t>(points));
        for (int i = 0; i < points; ++i) {
            const double w = w0 + half_span * (2.0 * i / (points - 1) - 1.0);
            s.samples.emplace_back(w, rate_three_photon_quantum(w, ladder, coupling, m3));
        }
        global_max = std::max(global_max, s.peak_rate());
        spectra.push_back(std::move(s));
    }
    for (auto& s : spectra)
        s.normalization = global_max;
    return spectra;
}

}  // namespace casimir_kerr
