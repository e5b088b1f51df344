#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "noonsi/accum.hpp"
#include "noonsi/errors.hpp"
#include "noonsi/grid.hpp"
#include "noonsi/matrix.hpp"
#include "noonsi/sellmeier.hpp"
#include "noonsi/units.hpp"

namespace noonsi {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Source parameter sets
// ---------------------------------------------------------------------------

enum class PumpSpectralModel { GaussianTransformLimited };

/// Pulsed pump description. The duration is the intensity FWHM; the
/// spectral width follows from the Gaussian time-bandwidth product.
struct PumpSpec {
    double center_wavelength_nm = 792.0;
    double pulse_duration_ps = 2.0;
    PumpSpectralModel spectral_model = PumpSpectralModel::GaussianTransformLimited;

    void validate() const {
        if (!(center_wavelength_nm > 0.0))
            throw ConfigError("pump center_wavelength_nm must be > 0");
        if (!(pulse_duration_ps > 0.0))
            throw ConfigError("pump pulse_duration_ps must be > 0");
        const double s = sigma_rad_per_ps();
        if (!(s > 0.0) || !std::isfinite(s))
            throw ConfigError("pump bandwidth not positive and finite");
    }

    /// RMS width of the pump *intensity* spectrum, rad/ps.
    double sigma_rad_per_ps() const { return pump_sigma_from_duration(pulse_duration_ps); }

    /// Pump carrier angular frequency (= center of omega_s + omega_i).
    double sum_center_rad_per_ps() const {
        return angular_frequency_from_wavelength(center_wavelength_nm);
    }

    /// Degenerate signal/idler frequency (half the pump carrier).
    double degenerate_rad_per_ps() const { return 0.5 * sum_center_rad_per_ps(); }
};

enum class DispersionSource { LinearizedGroupVelocity, SellmeierTable };

/// Nonlinear crystal description for the phase-matched JSA builder.
///
/// The linearized source expands the wavevector mismatch to first order
/// around degeneracy using the supplied inverse group velocities; the
/// poling period then enters only through the implied quasi-phase-matching
/// condition Delta k = 0 at the degenerate point. The Sellmeier source
/// evaluates the full mismatch, including the -2*pi/poling term, from a
/// user-provided coefficient table.
struct CrystalSpec {
    double length_mm = 30.0;
    double poling_period_um = 46.1;
    DispersionSource dispersion_source = DispersionSource::LinearizedGroupVelocity;
    double inverse_gv_pump_ps_per_mm = 0.0;
    double inverse_gv_signal_ps_per_mm = 0.0;
    double inverse_gv_idler_ps_per_mm = 0.0;
    bool gvm_check = false;
    double gvm_tolerance_ps_per_mm = 1e-2;
    std::string sellmeier_path;

    void validate() const {
        if (!(length_mm > 0.0)) throw ConfigError("crystal length_mm must be > 0");
        if (!(poling_period_um > 0.0)) throw ConfigError("crystal poling_period_um must be > 0");
        if (dispersion_source == DispersionSource::LinearizedGroupVelocity) {
            for (double g : {inverse_gv_pump_ps_per_mm, inverse_gv_signal_ps_per_mm,
                             inverse_gv_idler_ps_per_mm})
                if (!std::isfinite(g))
                    throw ConfigError("crystal inverse group velocities must be finite");
            if (gvm_check) {
                const double mean =
                    0.5 * (inverse_gv_signal_ps_per_mm + inverse_gv_idler_ps_per_mm);
                if (std::abs(inverse_gv_pump_ps_per_mm - mean) > gvm_tolerance_ps_per_mm)
                    throw ConfigError(
                        "type-II group-velocity-matching violated: |1/v_p - (1/v_s + 1/v_i)/2| = " +
                        std::to_string(std::abs(inverse_gv_pump_ps_per_mm - mean)) +
                        " ps/mm exceeds tolerance");
            }
        }
    }
};

// ---------------------------------------------------------------------------
// JsaGrid
// ---------------------------------------------------------------------------

/// Discretized complex joint spectral amplitude f(omega_s, omega_i).
/// When `normalized` is set, sum |f|^2 * dws * dwi = 1 within 1e-9.
struct JsaGrid {
    FrequencyGrid grid;
    Matrix<Complex> amplitude;
    bool normalized = false;

    void validate() const {
        grid.validate();
        if (amplitude.rows() != grid.signal.size() || amplitude.cols() != grid.idler.size())
            throw ContractError("jsa amplitude shape does not match grid");
        for (const Complex& z : amplitude.values())
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw NumericError("jsa amplitude contains non-finite values");
    }
};

/// sum |f|^2 dws dwi, compensated, fixed row-major order.
inline double total_power(const JsaGrid& jsa) {
    KahanSum acc;
    for (const Complex& z : jsa.amplitude.values()) acc.add(std::norm(z));
    return acc.value() * jsa.grid.cell_area();
}

/// Rescale so the squared amplitude integrates to one.
inline JsaGrid normalize(const JsaGrid& jsa) {
    const double power = total_power(jsa);
    if (!(power > 0.0))
        throw NumericError("normalize: amplitude has zero total power (degenerate input)");
    JsaGrid out = jsa;
    const double scale = 1.0 / std::sqrt(power);
    for (Complex& z : out.amplitude.values()) z *= scale;
    out.normalized = true;
    return out;
}

/// f <- (f + f^T)/2 followed by renormalization. Requires a square grid
/// with identical axes; the output is exactly exchange symmetric.
inline JsaGrid symmetrize(const JsaGrid& jsa) {
    if (jsa.amplitude.rows() != jsa.amplitude.cols() || !jsa.grid.square_symmetric())
        throw ContractError("symmetrize requires a square grid with identical axes");
    JsaGrid out = jsa;
    const std::size_t n = jsa.amplitude.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Complex avg = 0.5 * (jsa.amplitude(i, j) + jsa.amplitude(j, i));
            out.amplitude(i, j) = avg;
            out.amplitude(j, i) = avg;
        }
    return normalize(out);
}

/// Largest |f(s,i)| - |f(i,s)| residual relative to max |f|.
inline double exchange_asymmetry(const JsaGrid& jsa) {
    if (jsa.amplitude.rows() != jsa.amplitude.cols()) return 1.0;
    double max_mag = 0.0, max_res = 0.0;
    const std::size_t n = jsa.amplitude.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double m = std::abs(jsa.amplitude(i, j));
            max_mag = std::max(max_mag, m);
            max_res = std::max(max_res, std::abs(m - std::abs(jsa.amplitude(j, i))));
        }
    return max_mag > 0.0 ? max_res / max_mag : 0.0;
}

inline bool is_exchange_symmetric(const JsaGrid& jsa, double tol = 1e-9) {
    return jsa.grid.square_symmetric() && exchange_asymmetry(jsa) <= tol;
}

/// Multiply by the unimodular sum-frequency phase exp(i (ws+wi) tau).
/// Leaves |f| and therefore normalization untouched.
inline JsaGrid apply_sum_frequency_phase(const JsaGrid& jsa, double tau_ps) {
    JsaGrid out = jsa;
    for (std::size_t i = 0; i < out.amplitude.rows(); ++i)
        for (std::size_t j = 0; j < out.amplitude.cols(); ++j) {
            const double phase = (jsa.grid.signal[i] + jsa.grid.idler[j]) * tau_ps;
            out.amplitude(i, j) *= Complex(std::cos(phase), std::sin(phase));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Phenomenological two-dimensional Gaussian amplitude centered at the
/// degenerate frequency. The intensity ellipse has principal axes rotated
/// by `correlation_angle_rad` from the (omega_s, omega_i) coordinate axes:
/// RMS width `signal_bandwidth` along the rotated first axis and the pump
/// intensity RMS width along the second. Angle 0 gives a separable JSA;
/// +pi/4 puts the first axis along the sum-frequency direction and yields
/// an exchange-symmetric amplitude.
inline JsaGrid build_gaussian_jsa(const PumpSpec& pump, double signal_bandwidth_rad_per_ps,
                                  double correlation_angle_rad, const FrequencyGrid& grid) {
    pump.validate();
    grid.validate();
    if (!(signal_bandwidth_rad_per_ps > 0.0))
        throw ConfigError("build_gaussian_jsa: signal bandwidth must be > 0");

    const double sigma_a = signal_bandwidth_rad_per_ps;
    const double sigma_b = pump.sigma_rad_per_ps();
    const double coarse = std::max(grid.signal.spacing(), grid.idler.spacing());
    if (kFwhmPerSigma * std::min(sigma_a, sigma_b) < 8.0 * coarse)
        throw NumericError("build_gaussian_jsa: grid too coarse to resolve the ellipse "
                           "(fewer than 8 samples per FWHM)");

    const double w0 = pump.degenerate_rad_per_ps();
    const double ca = std::cos(correlation_angle_rad);
    const double sa = std::sin(correlation_angle_rad);

    JsaGrid jsa;
    jsa.grid = grid;
    jsa.amplitude = Matrix<Complex>(grid.signal.size(), grid.idler.size());
    for (std::size_t i = 0; i < grid.signal.size(); ++i) {
        const double ns = grid.signal[i] - w0;
        for (std::size_t j = 0; j < grid.idler.size(); ++j) {
            const double ni = grid.idler[j] - w0;
            const double u = ns * ca + ni * sa;
            const double v = -ns * sa + ni * ca;
            jsa.amplitude(i, j) =
                std::exp(-u * u / (4.0 * sigma_a * sigma_a) - v * v / (4.0 * sigma_b * sigma_b));
        }
    }
    return normalize(jsa);
}

namespace detail {

inline double linearized_mismatch(const CrystalSpec& c, double nu_s, double nu_i) {
    // First-order expansion around degeneracy; QPM makes the constant
    // term vanish by construction.
    return c.inverse_gv_pump_ps_per_mm * (nu_s + nu_i) -
           c.inverse_gv_signal_ps_per_mm * nu_s - c.inverse_gv_idler_ps_per_mm * nu_i;
}

} // namespace detail

/// Physical JSA: pump envelope alpha(ws+wi) times the phase-matching
/// amplitude sinc(Delta k * L / 2), with Delta k from either the
/// linearized group-velocity expansion or a Sellmeier table (which
/// includes the quasi-phase-matching term -2*pi/poling_period).
inline JsaGrid build_phasematched_jsa(const PumpSpec& pump, const CrystalSpec& crystal,
                                      const FrequencyGrid& grid) {
    pump.validate();
    crystal.validate();
    grid.validate();

    const double w_deg = pump.degenerate_rad_per_ps();
    const double w_sum0 = pump.sum_center_rad_per_ps();
    const double sigma_p = pump.sigma_rad_per_ps();
    const double half_length = 0.5 * crystal.length_mm;

    SellmeierTable table;
    const bool use_sellmeier = crystal.dispersion_source == DispersionSource::SellmeierTable;
    if (use_sellmeier) {
        if (crystal.sellmeier_path.empty())
            throw ConfigError("phasematched jsa: sellmeier table requested but no path given");
        table = SellmeierTable::load(crystal.sellmeier_path);
    }
    const double qpm = use_sellmeier ? kTwoPi / (crystal.poling_period_um * 1e-3) : 0.0;

    JsaGrid jsa;
    jsa.grid = grid;
    jsa.amplitude = Matrix<Complex>(grid.signal.size(), grid.idler.size());
    for (std::size_t i = 0; i < grid.signal.size(); ++i) {
        const double ws = grid.signal[i];
        for (std::size_t j = 0; j < grid.idler.size(); ++j) {
            const double wi = grid.idler[j];
            const double nu_plus = ws + wi - w_sum0;
            const double envelope = std::exp(-nu_plus * nu_plus / (4.0 * sigma_p * sigma_p));
            double dk;
            if (use_sellmeier) {
                dk = table.pump.wavenumber(ws + wi) - table.signal.wavenumber(ws) -
                     table.idler.wavenumber(wi) - qpm;
            } else {
                dk = detail::linearized_mismatch(crystal, ws - w_deg, wi - w_deg);
            }
            if (!std::isfinite(dk))
                throw NumericError("phasematched jsa: non-finite Delta k on grid");
            jsa.amplitude(i, j) = envelope * sinc(dk * half_length);
        }
    }
    return normalize(jsa);
}

// ---------------------------------------------------------------------------
// Marginals along omega_s +/- omega_i
// ---------------------------------------------------------------------------

/// |f|^2 mass regrouped onto the 2N-1 distinct values of a +/- combination
/// of the two axes. Requires equal axis spacing. Weights carry the full
/// quadrature measure, so sum(weights) = total power.
struct FrequencyMarginal {
    std::vector<double> frequency;
    std::vector<double> weight;
};

inline FrequencyMarginal sum_marginal(const JsaGrid& jsa) {
    if (!jsa.grid.equal_spacing())
        throw ContractError("sum_marginal requires equal signal/idler spacing");
    const std::size_t ns = jsa.grid.signal.size(), ni = jsa.grid.idler.size();
    FrequencyMarginal m;
    m.frequency.resize(ns + ni - 1);
    m.weight.assign(ns + ni - 1, 0.0);
    const double base = jsa.grid.signal.front() + jsa.grid.idler.front();
    const double step = jsa.grid.signal.spacing();
    for (std::size_t k = 0; k < m.frequency.size(); ++k)
        m.frequency[k] = base + step * static_cast<double>(k);
    const double area = jsa.grid.cell_area();
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < ni; ++j)
            m.weight[i + j] += std::norm(jsa.amplitude(i, j)) * area;
    return m;
}

inline FrequencyMarginal difference_marginal(const JsaGrid& jsa) {
    if (!jsa.grid.equal_spacing())
        throw ContractError("difference_marginal requires equal signal/idler spacing");
    const std::size_t ns = jsa.grid.signal.size(), ni = jsa.grid.idler.size();
    FrequencyMarginal m;
    m.frequency.resize(ns + ni - 1);
    m.weight.assign(ns + ni - 1, 0.0);
    const double base = jsa.grid.signal.front() - jsa.grid.idler.back();
    const double step = jsa.grid.signal.spacing();
    for (std::size_t k = 0; k < m.frequency.size(); ++k)
        m.frequency[k] = base + step * static_cast<double>(k);
    const double area = jsa.grid.cell_area();
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < ni; ++j)
            m.weight[i + (ni - 1 - j)] += std::norm(jsa.amplitude(i, j)) * area;
    return m;
}

/// Intensity-weighted mean of omega_s + omega_i.
inline double mean_sum_frequency(const JsaGrid& jsa) {
    KahanSum num, den;
    for (std::size_t i = 0; i < jsa.amplitude.rows(); ++i)
        for (std::size_t j = 0; j < jsa.amplitude.cols(); ++j) {
            const double w = std::norm(jsa.amplitude(i, j));
            num.add(w * (jsa.grid.signal[i] + jsa.grid.idler[j]));
            den.add(w);
        }
    if (!(den.value() > 0.0)) throw NumericError("mean_sum_frequency: zero total power");
    return num.value() / den.value();
}

/// Fine-fringe period 2*pi / mean sum frequency, ps.
inline double fringe_period(const JsaGrid& jsa) { return kTwoPi / mean_sum_frequency(jsa); }

} // namespace noonsi
