#include "gem/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gem {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

std::string to_string(LevelScheme s) {
    switch (s) {
    case LevelScheme::two_level: return "two_level";
    case LevelScheme::three_level_adiabatic: return "three_level_adiabatic";
    case LevelScheme::three_level_full: return "three_level_full";
    }
    return "?";
}

std::string to_string(CouplingDirection d) {
    return d == CouplingDirection::forward ? "forward" : "backward";
}

std::string to_string(PulseShape s) {
    switch (s) {
    case PulseShape::gaussian: return "gaussian";
    case PulseShape::double_gaussian: return "double_gaussian";
    case PulseShape::ramp: return "ramp";
    case PulseShape::train: return "train";
    }
    return "?";
}

double EnsembleParams::coupling_rate(double omega) const {
    if (!three_level())
        return g;
    return g * omega / delta1;
}

double EnsembleParams::slaving_density(double omega) const {
    if (!three_level())
        return n_eff;
    return n_eff * omega / delta1;
}

double EnsembleParams::effective_gn(double omega) const {
    if (!three_level())
        return g * n_eff;
    double ratio = omega / delta1;
    return g * n_eff * ratio * ratio;
}

void EnsembleParams::validate() const {
    if (gamma <= 0.0)
        throw ConfigError("ensemble.gamma must be > 0, got " + fmt(gamma));
    if (gamma0 < 0.0)
        throw ConfigError("ensemble.gamma0 must be >= 0, got " + fmt(gamma0));
    if (n_eff < 0.0)
        throw ConfigError("ensemble.N_eff must be >= 0, got " + fmt(n_eff));
    if (scheme == LevelScheme::three_level_adiabatic) {
        if (std::abs(delta1) < adiabatic_ratio_min * gamma)
            throw ConfigError("ensemble.delta1: adiabatic scheme requires |delta1| >= " +
                              fmt(adiabatic_ratio_min) + "*gamma = " +
                              fmt(adiabatic_ratio_min * gamma) + ", got " + fmt(std::abs(delta1)));
    }
    if (three_level() && delta1 == 0.0)
        throw ConfigError("ensemble.delta1 must be nonzero for three-level schemes");
    if (three_level() && omega_ref < 0.0)
        throw ConfigError("ensemble.omega_ref must be >= 0, got " + fmt(omega_ref));
}

double derived_beta(const EnsembleParams& params, double eta) {
    if (eta == 0.0)
        throw NumericsError("beta undefined for eta = 0 (infinite effective OD)");
    return params.effective_gn(params.omega_ref) / std::abs(eta);
}

double resonant_od(const EnsembleParams& params, double length) {
    return params.g * params.n_eff * length / params.gamma;
}

double ac_stark_shift(const EnsembleParams& params, double omega) {
    if (!params.three_level())
        return 0.0;
    return omega * omega / params.delta1;
}

namespace {

// Segments must tile [0, t_total]; boundaries matched to within a small
// absolute slack so hand-written configs round-trip.
constexpr double kTileTol = 1e-9;

template <typename Seg>
void check_tiling(const std::vector<Seg>& segs, double t_total, const std::string& what) {
    if (segs.empty())
        throw ConfigError(what + ": at least one segment required");
    double cursor = 0.0;
    for (size_t i = 0; i < segs.size(); ++i) {
        const auto& s = segs[i];
        if (s.t_end <= s.t_start)
            throw ConfigError(what + ": segment " + std::to_string(i) + " has t_end <= t_start");
        if (s.t_start > cursor + kTileTol)
            throw ConfigError(what + ": gap between t=" + fmt(cursor) + " and t=" + fmt(s.t_start));
        if (s.t_start < cursor - kTileTol)
            throw ConfigError(what + ": segments overlap on [" + fmt(s.t_start) + ", " +
                              fmt(std::min(cursor, s.t_end)) + "]");
        cursor = s.t_end;
    }
    if (std::abs(cursor - t_total) > kTileTol)
        throw ConfigError(what + ": segments end at t=" + fmt(cursor) + " but grid.t_total=" +
                          fmt(t_total));
}

} // namespace

double GradientProfile::eta_at(double t) const {
    for (const auto& s : segments)
        if (t >= s.t_start && t < s.t_end)
            return s.eta;
    if (!segments.empty() && t >= segments.back().t_end)
        return segments.back().eta;
    return 0.0;
}

void GradientProfile::validate(double t_total) const {
    check_tiling(segments, t_total, "gradient.segments");
}

std::pair<double, CouplingDirection> CouplingProfile::at(double t) const {
    for (const auto& s : segments)
        if (t >= s.t_start && t < s.t_end)
            return {s.omega, s.direction};
    if (!segments.empty() && t >= segments.back().t_end)
        return {segments.back().omega, segments.back().direction};
    return {0.0, CouplingDirection::forward};
}

double CouplingProfile::max_omega() const {
    double m = 0.0;
    for (const auto& s : segments)
        m = std::max(m, s.omega);
    return m;
}

bool CouplingProfile::has_backward() const {
    return std::any_of(segments.begin(), segments.end(), [](const CouplingSegment& s) {
        return s.direction == CouplingDirection::backward && s.omega > 0.0;
    });
}

void CouplingProfile::validate(double t_total) const {
    check_tiling(segments, t_total, "coupling.segments");
    for (size_t i = 0; i < segments.size(); ++i)
        if (segments[i].omega < 0.0)
            throw ConfigError("coupling.segments[" + std::to_string(i) + "].omega must be >= 0");
}

Complex PulseSpec::amplitude_at(double t) const {
    Complex env{0.0, 0.0};
    for (size_t i = 0; i < centers.size(); ++i) {
        double c = centers[i];
        double w = widths[i];
        if (shape == PulseShape::ramp) {
            // Linear rise over [c-w, c+w] with a sharp cutoff at the end.
            double u = t - (c - w);
            if (u >= 0.0 && t <= c + w)
                env += amplitudes[i] * (u / (2.0 * w));
        } else {
            double x = (t - c) / w;
            env += amplitudes[i] * std::exp(-0.5 * x * x);
        }
    }
    // Carrier at the two-photon offset places the spectrum inside the band.
    return env * std::exp(Complex(0.0, -carrier_offset * t));
}

double PulseSpec::bandwidth99() const {
    // Direct discrete spectrum of the carrier-free envelope; full width of
    // the contiguous band (grown outward from the spectral centroid) that
    // holds 99% of the energy.
    if (centers.empty())
        return 0.0;
    double wmin = *std::min_element(widths.begin(), widths.end());
    double t_lo = *std::min_element(centers.begin(), centers.end()) - 8.0 * wmin;
    double t_hi = *std::max_element(centers.begin(), centers.end()) + 8.0 * wmin;
    const int n = 4096;
    const int nf = 1024;
    double dt = (t_hi - t_lo) / n;
    double f_max = std::min(kPi / dt, 40.0 / wmin);
    std::vector<Complex> samples(n);
    for (int j = 0; j < n; ++j) {
        double t = t_lo + j * dt;
        samples[j] = amplitude_at(t) * std::exp(Complex(0.0, carrier_offset * t));
    }
    std::vector<double> power(nf, 0.0);
    double total = 0.0;
    for (int m = 0; m < nf; ++m) {
        double k = -f_max + (2.0 * f_max * m) / nf;
        Complex acc{0.0, 0.0};
        Complex ph = std::exp(Complex(0.0, -k * dt));
        Complex rot{1.0, 0.0};
        for (int j = 0; j < n; ++j) {
            acc += samples[j] * rot;
            rot *= ph;
        }
        power[m] = std::norm(acc);
        total += power[m];
    }
    if (total <= 0.0)
        return 0.0;
    double centroid = 0.0;
    for (int m = 0; m < nf; ++m)
        centroid += m * power[m];
    int lo = static_cast<int>(centroid / total);
    int hi = lo;
    double acc = power[lo];
    double target = 0.99 * total;
    while (acc < target && (lo > 0 || hi < nf - 1)) {
        double pl = lo > 0 ? power[lo - 1] : -1.0;
        double ph = hi < nf - 1 ? power[hi + 1] : -1.0;
        if (pl >= ph)
            acc += power[--lo];
        else
            acc += power[++hi];
    }
    return (hi - lo + 1) * (2.0 * f_max / nf);
}

void PulseSpec::validate() {
    size_t n = centers.size();
    if (n == 0)
        throw ConfigError("pulse: at least one component required");
    if (widths.size() != n || amplitudes.size() != n)
        throw ConfigError("pulse: centers, widths and amplitudes must have equal lengths");
    for (size_t i = 0; i < n; ++i)
        if (widths[i] <= 0.0)
            throw ConfigError("pulse.widths[" + std::to_string(i) + "] must be > 0");
    if (shape == PulseShape::gaussian && n != 1)
        throw ConfigError("pulse: shape 'gaussian' takes exactly one component");
    if (shape == PulseShape::double_gaussian && n != 2)
        throw ConfigError("pulse: shape 'double_gaussian' takes exactly two components");
    if (shape == PulseShape::ramp && n != 1)
        throw ConfigError("pulse: shape 'ramp' takes exactly one component");
    if (shape == PulseShape::train) {
        for (size_t i = 1; i < n; ++i) {
            if (centers[i] <= centers[i - 1])
                throw ConfigError("pulse.centers must be strictly time-ordered in a train");
        }
    }
    // Input energy by composite trapezoid over the support; cached.
    double wmin = *std::min_element(widths.begin(), widths.end());
    double t_lo = *std::min_element(centers.begin(), centers.end()) - 8.0 * wmin;
    double t_hi = *std::max_element(centers.begin(), centers.end()) + 8.0 * wmin;
    const int n_samp = 1 << 15;
    double dt = (t_hi - t_lo) / n_samp;
    double e = 0.0;
    double prev = std::norm(amplitude_at(t_lo));
    for (int j = 1; j <= n_samp; ++j) {
        double cur = std::norm(amplitude_at(t_lo + j * dt));
        e += 0.5 * (prev + cur) * dt;
        prev = cur;
    }
    if (!std::isfinite(e) || e <= 0.0)
        throw ConfigError("pulse: input energy must be finite and positive");
    energy_ = e;
}

void SimulationGrid::validate() const {
    if (nz < 128)
        throw ConfigError("grid.Nz must be >= 128, got " + std::to_string(nz));
    if (nt < 2)
        throw ConfigError("grid.Nt must be >= 2");
    if (length <= 0.0)
        throw ConfigError("grid.L must be > 0");
    if (t_total <= 0.0)
        throw ConfigError("grid.T_total must be > 0");
    if (history_stride < 1)
        throw ConfigError("grid.history_stride must be >= 1");
}

} // namespace gem
