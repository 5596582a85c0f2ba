#pragma once

/// \file constants.hpp
/// Versioned physical constants and unit conversions used across the library.
/// All couplings are reported in kHz; lengths in nm; energies in eV.

namespace dmap {

inline constexpr const char* kConstantsVersion = "2024-codata-1";

// e^2 / (4 pi eps0), in eV nm.
inline constexpr double kCoulombEvNm = 1.4399645;

// Planck constants, SI.
inline constexpr double kHbarJS = 1.054571817e-34;
inline constexpr double kPlanckJS = 6.62607015e-34;

// Gyromagnetic ratios, rad s^-1 T^-1 (magnitudes).
inline constexpr double kGammaElectron = 1.76085963023e11;
inline constexpr double kGammaSi29 = 5.3190e7;

// mu0 / (4 pi), T^2 m^3 / J.
inline constexpr double kMu0Over4Pi = 1.0e-7;

// Conventional lattice constant of Si, nm.
inline constexpr double kSiLatticeConstantNm = 0.543;

// 1 MV/m expressed in V/nm.
inline constexpr double kMvPerMInVPerNm = 1.0e-3;

/// Gyromagnetic ratios and unit factors entering the hyperfine tensor.
struct PhysicalConstants {
    double gamma_nuclear = kGammaSi29;    ///< probe nucleus, rad s^-1 T^-1
    double gamma_electron = kGammaElectron;
    double hbar_js = kHbarJS;
    double planck_js = kPlanckJS;

    /// Contact prefactor: beta_kHz = contact_prefactor_khz_nm3() * |psi|^2 [nm^-3].
    double contact_prefactor_khz_nm3() const {
        constexpr double pi = 3.14159265358979323846;
        const double joule_m3 =
            kMu0Over4Pi * (8.0 * pi / 3.0) * gamma_nuclear * gamma_electron * hbar_js * hbar_js;
        // J m^3 -> kHz nm^3: divide by h, 1 m^3 = 1e27 nm^3, 1 Hz = 1e-3 kHz.
        return joule_m3 / planck_js * 1.0e27 * 1.0e-3;
    }

    /// Dipolar prefactor: B_kHz = dipolar_prefactor_khz_nm3() * sum_m p_m (3 r_i r_j - r^2 d_ij)/r^5 [nm^-3].
    double dipolar_prefactor_khz_nm3() const {
        const double joule_m3 = kMu0Over4Pi * gamma_nuclear * gamma_electron * hbar_js * hbar_js;
        return joule_m3 / planck_js * 1.0e27 * 1.0e-3;
    }

    static PhysicalConstants si29_probe() { return {}; }
};

} // namespace dmap
