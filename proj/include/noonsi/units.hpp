#pragma once

#include <cmath>

// Unit conventions used throughout the library:
//   time              ps
//   length            nm (wavelengths), mm (crystal), um (poling)
//   angular frequency rad/ps
//   dispersion        ps/nm ; inverse group velocity ps/mm

namespace noonsi {

inline constexpr double kSpeedOfLightNmPerPs = 299792.458;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// 2 sqrt(2 ln 2): ratio of a Gaussian's FWHM to its standard deviation.
inline const double kFwhmPerSigma = 2.0 * std::sqrt(2.0 * std::log(2.0));

inline double angular_frequency_from_wavelength(double lambda_nm) {
    return kTwoPi * kSpeedOfLightNmPerPs / lambda_nm;
}

inline double wavelength_from_angular_frequency(double omega_rad_per_ps) {
    return kTwoPi * kSpeedOfLightNmPerPs / omega_rad_per_ps;
}

/// RMS angular-frequency width of the *intensity* spectrum of a
/// transform-limited Gaussian pulse with the given intensity-FWHM duration.
/// FWHM(omega) = 4 ln 2 / FWHM(t), sigma = FWHM / (2 sqrt(2 ln 2)).
inline double pump_sigma_from_duration(double duration_fwhm_ps) {
    const double fwhm_omega = 4.0 * std::log(2.0) / duration_fwhm_ps;
    return fwhm_omega / kFwhmPerSigma;
}

inline double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

} // namespace noonsi
