#include "qse/lattice.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

namespace qse {

namespace {

constexpr double kTiny = 1e-300;

std::vector<cplx> dft(const std::vector<cplx>& v, bool inverse) {
    const std::size_t n = v.size();
    std::vector<cplx> out(n, cplx(0));
    const double sgn = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc(0);
        for (std::size_t j = 0; j < n; ++j) {
            double ang = sgn * 2.0 * std::numbers::pi * static_cast<double>(k * j % n) / static_cast<double>(n);
            acc += v[j] * std::polar(1.0, ang);
        }
        out[k] = inverse ? acc / static_cast<double>(n) : acc;
    }
    return out;
}

// jet slice L(values) on a ring, L = (1 - B)^2 / (2 m z^2)
std::vector<cplx> ring_L(const std::vector<cplx>& v, double z, double m) {
    const int n = static_cast<int>(v.size());
    std::vector<cplx> out(v.size());
    const double w = 1.0 / (2.0 * m * z * z);
    for (int j = 0; j < n; ++j) {
        const cplx& a = v[static_cast<std::size_t>(j)];
        const cplx& b = v[static_cast<std::size_t>((j - 1 + n) % n)];
        const cplx& c = v[static_cast<std::size_t>((j - 2 + 2 * n) % n)];
        out[static_cast<std::size_t>(j)] = w * (a - 2.0 * b + c);
    }
    return out;
}

} // namespace

SpaceField make_constant_ring(int n, double z, double m, cplx value) {
    if (n < 4) throw InvalidStep("ring needs at least 4 sites");
    SpaceField f;
    f.spacing = z;
    f.mass = m;
    f.periodic = true;
    f.values.assign(static_cast<std::size_t>(n), value);
    f.dt_values.assign(static_cast<std::size_t>(n), cplx(0));
    return f;
}

SpaceField make_mode_ring(int n, int k, double z, double m) {
    if (n < 4) throw InvalidStep("ring needs at least 4 sites");
    SpaceField f;
    f.spacing = z;
    f.mass = m;
    f.periodic = true;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    const cplx rate = space_mode_rate(theta, z, m);
    f.values.resize(static_cast<std::size_t>(n));
    f.dt_values.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        cplx v = std::polar(1.0, theta * static_cast<double>(j));
        f.values[static_cast<std::size_t>(j)] = v;
        f.dt_values[static_cast<std::size_t>(j)] = rate * v;
    }
    return f;
}

SpaceField make_noise_ring(int n, double z, double m, unsigned long seed) {
    if (n < 4) throw InvalidStep("ring needs at least 4 sites");
    SpaceField f;
    f.spacing = z;
    f.mass = m;
    f.periodic = true;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    f.values.resize(static_cast<std::size_t>(n));
    f.dt_values.assign(static_cast<std::size_t>(n), cplx(0));
    for (auto& v : f.values) v = cplx(u(rng), u(rng));
    return f;
}

SpaceField make_sampled_window(long lo, long hi, double z, double m, const std::function<cplx(double)>& f) {
    if (hi - lo < 3) throw InvalidStep("window needs at least 4 sites");
    SpaceField out;
    out.spacing = z;
    out.mass = m;
    out.periodic = false;
    out.lo = lo;
    const long n = hi - lo + 1;
    std::vector<cplx> ext(static_cast<std::size_t>(n) + 2);  // sites lo-2 .. hi
    for (long j = 0; j < n + 2; ++j) ext[static_cast<std::size_t>(j)] = f(static_cast<double>(lo - 2 + j) * z);
    out.values.assign(ext.begin() + 2, ext.end());
    out.dt_values.resize(static_cast<std::size_t>(n));
    const double w = 1.0 / (2.0 * m * z * z);
    for (long j = 0; j < n; ++j)
        out.dt_values[static_cast<std::size_t>(j)] =
            w * (ext[static_cast<std::size_t>(j + 2)] - 2.0 * ext[static_cast<std::size_t>(j + 1)] + ext[static_cast<std::size_t>(j)]);
    return out;
}

SpaceField make_constant_window(long lo, long hi, double z, double m, cplx value) {
    if (hi - lo < 3) throw InvalidStep("window needs at least 4 sites");
    SpaceField f;
    f.spacing = z;
    f.mass = m;
    f.periodic = false;
    f.lo = lo;
    f.values.assign(static_cast<std::size_t>(hi - lo + 1), value);
    f.dt_values.assign(static_cast<std::size_t>(hi - lo + 1), cplx(0));
    return f;
}

double space_residual(const SpaceField& f) {
    const int n = f.size();
    const double w = 1.0 / (2.0 * f.mass * f.spacing * f.spacing);
    double num = 0, den = 0;
    auto probe = [&](int j, const cplx& a, const cplx& b, const cplx& c) {
        cplx lv = w * (a - 2.0 * b + c);
        num = std::max(num, std::abs(f.dt_values[static_cast<std::size_t>(j)] - lv));
        den = std::max({den, std::abs(lv), std::abs(f.dt_values[static_cast<std::size_t>(j)])});
    };
    if (f.periodic) {
        for (int j = 0; j < n; ++j)
            probe(j, f.values[static_cast<std::size_t>(j)],
                  f.values[static_cast<std::size_t>((j - 1 + n) % n)],
                  f.values[static_cast<std::size_t>((j - 2 + 2 * n) % n)]);
    } else {
        for (int j = 2; j < n; ++j)
            probe(j, f.values[static_cast<std::size_t>(j)],
                  f.values[static_cast<std::size_t>(j - 1)],
                  f.values[static_cast<std::size_t>(j - 2)]);
    }
    if (den < kTiny) return num > kTiny ? 1.0 : 0.0;
    return num / den;
}

cplx space_mode_rate(double theta, double z, double m) {
    cplx d = 1.0 - std::polar(1.0, -theta);
    return d * d / (2.0 * m * z * z);
}

SpaceField space_evolve(const SpaceField& f, double dt) {
    if (dt < 0) throw InvalidStep("negative evolution time");
    if (!f.periodic) throw UnsupportedOperator("exact evolution needs a periodic ring");
    const int n = f.size();
    std::vector<cplx> hat = dft(f.values, false);
    for (int k = 0; k < n; ++k) {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        hat[static_cast<std::size_t>(k)] *= std::exp(dt * space_mode_rate(theta, f.spacing, f.mass));
    }
    SpaceField out = f;
    out.time = f.time + dt;
    out.values = dft(hat, true);
    out.dt_values = ring_L(out.values, f.spacing, f.mass);
    return out;
}

namespace {

// one summand of the realized generator after parameter binding:
// x^xe t^te dx^de, followed by a site-offset stencil from dt-elimination + Sx
struct BoundTerm {
    unsigned xe = 0, te = 0, de = 0;
    std::vector<std::pair<long, double>> stencil;  // (site offset, weight)
};

std::vector<BoundTerm> bind_terms(const OpElement& op, const NumericParams& p, bool allow_x, bool allow_dx) {
    ParamBindings b;
    b.z = p.z;
    b.m = p.m;
    b.a = p.a;
    OpElement bound = op.eval(b);
    // weight of L^delta expanded: (2 m z^2)^-delta (1 - B)^(2 delta)
    const Rational inv2mz2 = (Rational(2) * p.m * p.z * p.z).pow(-1);
    std::vector<BoundTerm> out;
    for (const auto& [mono, coeff] : bound.terms()) {
        const auto& e = mono.copies[0];
        if (e.ts != 0) throw UnsupportedOperator("time shift on a single time slice");
        if (!allow_x && e.x != 0) throw UnsupportedOperator("x multiplication is not periodic");
        if (!allow_dx && e.dx != 0) throw UnsupportedOperator("bare dx has no exact stencil on an open window");
        BoundTerm bt;
        bt.xe = e.x;
        bt.te = e.t;
        bt.de = e.dx;
        const Rational base = coeff.as_rational() * inv2mz2.pow(static_cast<long>(e.dt));
        // (1 - B)^(2 dt): binomial weights at offsets -u
        const unsigned order = 2 * e.dt;
        std::vector<Rational> binom{Rational(1)};
        for (unsigned i = 0; i < order; ++i) {
            std::vector<Rational> next(binom.size() + 1, Rational(0));
            for (std::size_t j = 0; j < binom.size(); ++j) {
                next[j] += binom[j];
                next[j + 1] += binom[j];
            }
            binom = std::move(next);
        }
        for (unsigned u = 0; u <= order; ++u) {
            Rational w = base * binom[u];
            if (u % 2 == 1) w = -w;
            bt.stencil.emplace_back(static_cast<long>(e.sx) - static_cast<long>(u), w.to_double());
        }
        out.push_back(std::move(bt));
    }
    return out;
}

} // namespace

SpaceField apply_generator(const SpaceField& f, GeneratorName g, const GeneratorTable& table,
                           const NumericParams& p, double tol) {
    const double res = space_residual(f);
    if (res > tol)
        throw NotASolution("input residual " + std::to_string(res) + " exceeds tolerance");

    const OpElement& img = table.image(g);
    const int n = f.size();

    if (f.periodic) {
        auto terms = bind_terms(img, p, /*allow_x=*/false, /*allow_dx=*/true);
        std::vector<cplx> vhat = dft(f.values, false);
        std::vector<cplx> dhat = dft(f.dt_values, false);
        std::vector<cplx> out_v(static_cast<std::size_t>(n), cplx(0));
        std::vector<cplx> out_d(static_cast<std::size_t>(n), cplx(0));
        for (int k = 0; k < n; ++k) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            const int alias = 2 * k > n ? k - n : k;
            const cplx ik = cplx(0, 2.0 * std::numbers::pi * static_cast<double>(alias)
                                        / (static_cast<double>(n) * f.spacing));
            for (const auto& bt : terms) {
                cplx sym(0);
                for (const auto& [off, w] : bt.stencil)
                    sym += w * std::polar(1.0, theta * static_cast<double>(off));
                cplx fac = sym;
                for (unsigned i = 0; i < bt.de; ++i) fac *= ik;
                double tb = bt.te == 0 ? 1.0 : std::pow(f.time, static_cast<double>(bt.te));
                cplx v = fac * tb * vhat[static_cast<std::size_t>(k)];
                cplx d = fac * tb * dhat[static_cast<std::size_t>(k)];
                if (bt.te > 0)
                    d += fac * static_cast<double>(bt.te)
                         * std::pow(f.time, static_cast<double>(bt.te - 1)) * vhat[static_cast<std::size_t>(k)];
                out_v[static_cast<std::size_t>(k)] += v;
                out_d[static_cast<std::size_t>(k)] += d;
            }
        }
        SpaceField out = f;
        out.values = dft(out_v, true);
        out.dt_values = dft(out_d, true);
        return out;
    }

    auto terms = bind_terms(img, p, /*allow_x=*/true, /*allow_dx=*/false);
    long min_off = 0, max_off = 0;
    for (const auto& bt : terms)
        for (const auto& [off, w] : bt.stencil) {
            min_off = std::min(min_off, off);
            max_off = std::max(max_off, off);
        }
    const long out_lo = f.lo + std::max(0L, -min_off);
    const long out_hi = f.lo + n - 1 - std::max(0L, max_off);
    if (out_hi - out_lo < 3)
        throw IndexOutOfRange("window too small for the stencil of " + to_string(g));

    SpaceField out;
    out.spacing = f.spacing;
    out.mass = f.mass;
    out.time = f.time;
    out.periodic = false;
    out.lo = out_lo;
    const std::size_t m = static_cast<std::size_t>(out_hi - out_lo + 1);
    out.values.assign(m, cplx(0));
    out.dt_values.assign(m, cplx(0));
    for (long j = out_lo; j <= out_hi; ++j) {
        const double xj = static_cast<double>(j) * f.spacing;
        const std::size_t oi = static_cast<std::size_t>(j - out_lo);
        for (const auto& bt : terms) {
            cplx sv(0), sd(0);
            for (const auto& [off, w] : bt.stencil) {
                const std::size_t ii = static_cast<std::size_t>(j + off - f.lo);
                sv += w * f.values[ii];
                sd += w * f.dt_values[ii];
            }
            const double xa = bt.xe == 0 ? 1.0 : std::pow(xj, static_cast<double>(bt.xe));
            const double tb = bt.te == 0 ? 1.0 : std::pow(f.time, static_cast<double>(bt.te));
            out.values[oi] += xa * tb * sv;
            out.dt_values[oi] += xa * tb * sd;
            if (bt.te > 0)
                out.dt_values[oi] += xa * static_cast<double>(bt.te)
                                     * std::pow(f.time, static_cast<double>(bt.te - 1)) * sv;
        }
    }
    return out;
}

std::vector<HierarchyLevel> hierarchy_generate(const SpaceField& seed,
                                               const std::vector<GeneratorName>& gens,
                                               const GeneratorTable& table, const NumericParams& p,
                                               double tol) {
    std::vector<HierarchyLevel> levels;
    levels.push_back({"seed", seed, space_residual(seed)});
    std::string label = "seed";
    for (GeneratorName g : gens) {
        label = to_string(g) + " " + label;
        SpaceField next = apply_generator(levels.back().field, g, table, p, tol);
        double r = space_residual(next);
        levels.push_back({label, std::move(next), r});
    }
    return levels;
}

double SpectralField::kappa(int k) const {
    return 2.0 * std::numbers::pi * static_cast<double>(k) / period;
}

SpectralField make_spectral(double z, double m, double period, std::map<int, cplx> amps) {
    if (z <= 0 || m <= 0 || period <= 0) throw InvalidStep("step, mass and period must be positive");
    SpectralField f;
    f.step = z;
    f.mass = m;
    f.period = period;
    f.modes = std::move(amps);
    return f;
}

SpectralField time_step(const SpectralField& f) {
    if (f.step <= 0 || f.mass <= 0) throw InvalidStep("field is not initialized");
    SpectralField out = f;
    out.prev = f.modes;
    out.time = f.time + 2.0 * f.step;
    for (auto& [k, amp] : out.modes) {
        double kap = f.kappa(k);
        amp /= 1.0 + (f.step / f.mass) * kap * kap;
    }
    return out;
}

double time_residual(const SpectralField& f) {
    if (f.prev.empty()) return 0.0;
    double num = 0, den = 0;
    for (const auto& [k, amp] : f.modes) {
        double kap = f.kappa(k);
        auto it = f.prev.find(k);
        cplx prev = it == f.prev.end() ? cplx(0) : it->second;
        cplx r = -kap * kap * amp - (f.mass / f.step) * (amp - prev);
        num = std::max(num, std::abs(r));
        den = std::max({den, std::abs(kap * kap * amp), std::abs((f.mass / f.step) * (amp - prev))});
    }
    if (den < kTiny) return num > kTiny ? 1.0 : 0.0;
    return num / den;
}

cplx dispersion_rate(ModelKind model, double k, double z, double m) {
    switch (model) {
        case ModelKind::Classical:
            return cplx(-k * k / (2.0 * m), 0);
        case ModelKind::Space:
            return space_mode_rate(k * z, z, m);
        case ModelKind::Time:
            return cplx(-std::log(1.0 + z * k * k / m) / (2.0 * z), 0);
    }
    throw Error("unknown model");
}

void write_field_csv(const SpaceField& f, std::ostream& out) {
    out << "index,x,re,im\n";
    for (int j = 0; j < f.size(); ++j) {
        const cplx& v = f.values[static_cast<std::size_t>(j)];
        out << (f.lo + j) << "," << f.x_at(j) << "," << v.real() << "," << v.imag() << "\n";
    }
}

void write_spectral_csv(const SpectralField& f, std::ostream& out) {
    out << "k,kappa,re,im\n";
    for (const auto& [k, v] : f.modes)
        out << k << "," << f.kappa(k) << "," << v.real() << "," << v.imag() << "\n";
}

} // namespace qse
