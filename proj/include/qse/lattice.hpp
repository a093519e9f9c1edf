#pragma once
#include <complex>
#include <functional>
#include <iosfwd>
#include <map>

#include "qse/models.hpp"

namespace qse {

using cplx = std::complex<double>;

// One time slice of the space-discretized equation, stored as a 1-jet:
// values plus the time-derivative slice. On a solution the jet equals
// L(values) with L = (1 - B)^2 / (2 m z^2), B the backward site shift.
// Periodic rings use site indices 0..n-1 with wraparound; open windows carry
// absolute site indices lo..lo+n-1, x_j = j * spacing.
struct SpaceField {
    double spacing = 0;
    double mass = 0;
    double time = 0;
    long lo = 0;
    bool periodic = true;
    std::vector<cplx> values;
    std::vector<cplx> dt_values;

    int size() const { return static_cast<int>(values.size()); }
    double x_at(int i) const { return static_cast<double>(lo + i) * spacing; }
};

SpaceField make_constant_ring(int n, double z, double m, cplx value = 1.0);
// discrete plane wave exp(i theta j), theta = 2 pi k / n, jet on the exact rate
SpaceField make_mode_ring(int n, int k, double z, double m);
// uniform noise in [-1,1]^2, jet = 0 (deliberately not a solution slice)
SpaceField make_noise_ring(int n, double z, double m, unsigned long seed);
// samples f on an open window of absolute sites lo..hi (f gets x), jet = L f
// using samples of f just left of the window
SpaceField make_sampled_window(long lo, long hi, double z, double m, const std::function<cplx(double)>& f);
SpaceField make_constant_window(long lo, long hi, double z, double m, cplx value = 1.0);

// relative sup-norm deviation of the jet from L(values); 0 for fields
// too small to carry the stencil
double space_residual(const SpaceField& f);

// exact per-mode integration of d/dt phi = L phi over dt >= 0 (periodic only)
SpaceField space_evolve(const SpaceField& f, double dt);

// growth rate of the mode exp(i theta j): (1 - e^{-i theta})^2 / (2 m z^2)
cplx space_mode_rate(double theta, double z, double m);

struct NumericParams {
    Rational z, m, a;
};

// applies the realized generator to a solution slice; dt powers are eliminated
// through L, so the result is exact on solutions of the lattice equation.
// Throws NotASolution when the input residual exceeds tol, UnsupportedOperator
// for x-multiplication on rings / bare dx on open windows / any time shift.
SpaceField apply_generator(const SpaceField& f, GeneratorName g, const GeneratorTable& table,
                           const NumericParams& p, double tol = 1e-12);

struct HierarchyLevel {
    std::string label;
    SpaceField field;
    double residual = 0;
};

// seed, g1 seed, g2 g1 seed, ... with residuals recorded per level
std::vector<HierarchyLevel> hierarchy_generate(const SpaceField& seed,
                                               const std::vector<GeneratorName>& gens,
                                               const GeneratorTable& table, const NumericParams& p,
                                               double tol = 1e-12);

// Fourier data for the time-discretized equation: amplitudes per integer mode
// of a period-L ring, plus the previous level at time - 2z for the residual.
struct SpectralField {
    double step = 0;   // z
    double mass = 0;
    double period = 0;
    double time = 0;
    std::map<int, cplx> modes;
    std::map<int, cplx> prev;  // empty until the first step

    double kappa(int k) const;
};

SpectralField make_spectral(double z, double m, double period, std::map<int, cplx> amps);

// advances time by 2z: amp <- amp / (1 + (z/m) kappa^2)
SpectralField time_step(const SpectralField& f);

// relative sup-norm of -kappa^2 A - (m/z)(A - A_prev); 0 before the first step
double time_residual(const SpectralField& f);

// decay/growth rate of the plane wave with wavenumber k under each model's flow
cplx dispersion_rate(ModelKind model, double k, double z, double m);

void write_field_csv(const SpaceField& f, std::ostream& out);
void write_spectral_csv(const SpectralField& f, std::ostream& out);

} // namespace qse
