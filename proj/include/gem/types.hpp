#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gem/errors.hpp"

namespace gem {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Dynamics modules run in dimensionless units: gamma = 1 sets the time
// unit, the cell length L = 1 the length unit. Spectroscopy operations
// accept physical units (Hz, Torr, K, cm) and state conversions explicitly.
enum class UnitMode { dimensionless, physical };

enum class LevelScheme { two_level, three_level_adiabatic, three_level_full };

enum class CouplingDirection { forward, backward };

enum class PulseShape { gaussian, double_gaussian, ramp, train };

std::string to_string(LevelScheme s);
std::string to_string(CouplingDirection d);
std::string to_string(PulseShape s);

// Atomic ensemble constants. All rates in units of gamma unless the config
// declares physical units. n_eff is the effective linear density N = gN/c
// (units 1/length), so g * n_eff has units rate/length and beta = gN/eta
// is dimensionless.
struct EnsembleParams {
    double gamma = 1.0;    // excited-state linewidth
    double gamma0 = 0.0;   // ground-state decoherence
    double delta1 = 0.0;   // one-photon detuning
    double g = 1.0;        // atom-light coupling rate
    double n_eff = 1.0;    // effective linear atomic density
    double omega_ref = 0.0; // reference coupling Rabi frequency
    LevelScheme scheme = LevelScheme::two_level;
    bool stark_compensation = true;   // cancel the ac-Stark offset of the Raman line
    double adiabatic_ratio_min = 20.0; // enforce |delta1| >= ratio * gamma in adiabatic mode

    bool three_level() const { return scheme != LevelScheme::two_level; }

    // Spin-field coupling rate kappa: g (two-level) or g*Omega/Delta (Raman).
    double coupling_rate(double omega) const;
    // Field-slaving density N': n_eff (two-level) or n_eff*Omega/Delta.
    double slaving_density(double omega) const;
    // Effective gN entering beta and the group velocity: gN or gN*(Omega/Delta)^2.
    double effective_gn(double omega) const;

    void validate() const;
};

// beta = gN/|eta|, the effective optical depth per unit gradient.
double derived_beta(const EnsembleParams& params, double eta);

// Resonant optical depth g^2 N L / (gamma c) = g * n_eff * L / gamma.
double resonant_od(const EnsembleParams& params, double length);

// ac-Stark shift Omega^2/Delta of the two-photon resonance.
double ac_stark_shift(const EnsembleParams& params, double omega);

struct GradientSegment {
    double t_start = 0.0;
    double t_end = 0.0;
    double eta = 0.0; // gradient slope; delta(z,t) = eta(t) * z, z in [0, L]
};

// Piecewise-constant gradient program. Segments must tile [0, T] with no
// gaps or overlaps; switches are instantaneous.
struct GradientProfile {
    std::vector<GradientSegment> segments;

    double eta_at(double t) const;
    void validate(double t_total) const;
};

struct CouplingSegment {
    double t_start = 0.0;
    double t_end = 0.0;
    double omega = 0.0;
    CouplingDirection direction = CouplingDirection::forward;
};

// Coupling-field program for the three-level schemes. Omega >= 0 per
// segment; at most one direction is active at a time.
struct CouplingProfile {
    std::vector<CouplingSegment> segments;

    // Returns (omega, direction) at time t; (0, forward) in gaps.
    std::pair<double, CouplingDirection> at(double t) const;
    double max_omega() const;
    bool has_backward() const;
    void validate(double t_total) const;
};

// Input probe envelope at the z = 0 boundary. The carrier two-photon
// offset shifts the pulse spectrum into the gradient band (the band is
// one-sided, [0, eta*L], so a centered pulse needs offset ~ eta*L/2).
struct PulseSpec {
    PulseShape shape = PulseShape::gaussian;
    std::vector<double> centers;
    std::vector<double> widths;
    std::vector<Complex> amplitudes;
    double carrier_offset = 0.0;

    Complex amplitude_at(double t) const;
    // Total input energy, integral of |E_in|^2 dt (computed at construction
    // time by validate(), cached here).
    double energy() const { return energy_; }
    // Full width of the band holding 99% of the pulse energy, centered on
    // the carrier offset (angular rate units).
    double bandwidth99() const;
    size_t count() const { return centers.size(); }

    void validate();

private:
    double energy_ = 0.0;
};

struct SimulationGrid {
    int nz = 512;
    int nt = 2001;
    double length = 1.0;
    double t_total = 20.0;
    int history_stride = 4;

    double dz() const { return length / (nz - 1); }
    double dt() const { return t_total / (nt - 1); }
    // Spacing of the discrete Fourier dual of the z grid, ~2*pi/L.
    double dk() const { return 2.0 * kPi / (nz * dz()); }

    void validate() const;
};

} // namespace gem
