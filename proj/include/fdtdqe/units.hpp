#pragma once

// Natural units: hbar = c = eps0 = mu0 = 1 with lengths in meters.
// Frequencies and rates therefore carry units of rad/m (angular frequency
// divided by the physical speed of light), and time is measured as c*t in
// meters. A vacuum wavelength of lambda meters corresponds to omega = 2*pi/lambda.

#include <complex>
#include <numbers>

namespace fdtdqe {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEps0 = 1.0;
inline constexpr double kMu0 = 1.0;
inline constexpr double kHbar = 1.0;
inline constexpr double kC = 1.0;

inline constexpr double kNanometer = 1e-9;

constexpr double nm_to_m(double nm) { return nm * kNanometer; }
constexpr double m_to_nm(double m) { return m / kNanometer; }

constexpr double omega_from_wavelength(double lambda_m) { return 2.0 * kPi / lambda_m; }
constexpr double wavelength_from_omega(double omega) { return 2.0 * kPi / omega; }

}  // namespace fdtdqe
