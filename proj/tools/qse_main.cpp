#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qse/lattice.hpp"
#include "qse/parser.hpp"
#include "qse/verify.hpp"

namespace {

using namespace qse;

// accepts "p", "p/q" or a plain decimal like "-0.25"
Rational parse_rational_arg(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational::from_string(s);
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
    if (head.empty()) head = "0";
    Rational num = Rational::from_string(head);
    Rational den(1);
    for (char c : tail) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw SyntaxError("bad decimal literal", dot);
        num = num * Rational(10) + Rational(static_cast<long>(c - '0'));
        den *= Rational(10);
    }
    Rational r = num / den;
    return neg ? -r : r;
}

int emit_report(const Report& rep, const std::string& out, const std::string& format) {
    if (format == "json") {
        std::string body = to_json_string(rep);
        if (out.empty()) {
            std::cout << body << "\n";
        } else {
            std::ofstream f(out);
            f << body << "\n";
        }
    } else {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!out.empty()) {
            file.open(out);
            os = &file;
        }
        for (const auto& c : rep.checks) {
            *os << (c.passed ? "[PASS] " : "[FAIL] ") << to_string(c.model) << " " << c.check_kind
                << " " << c.subject;
            if (!c.passed) *os << "  residual: " << c.residual;
            *os << "\n";
        }
        std::size_t failed = 0;
        for (const auto& c : rep.checks) failed += c.passed ? 0 : 1;
        *os << rep.checks.size() << " checks, " << failed << " failed\n";
    }
    return rep.all_passed() ? 0 : 2;
}

cplx parse_amp(const std::string& s) {
    // "re" or "re:im"
    auto colon = s.find(':');
    if (colon == std::string::npos) return cplx(std::stod(s), 0);
    return cplx(std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1)));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine and lattice solvers for the deformed Schrodinger models"};
    app.require_subcommand(1);

    std::string model_name = "space", a_str = "-1/2", z_str = "1/4", m_str = "1";
    std::string out_path, format = "text", suite = "all", expr_src, seed_spec = "constant", gens_spec;
    int order = 6, nsites = 64, steps = 8;
    long lo = -40, hi = 40;
    double dt = 0.1, period = 6.283185307179586, kmin = 0.0, kmax = 8.0;
    int samples = 33;
    bool symbolic_a = false;

    auto add_model_opts = [&](CLI::App* cmd) {
        cmd->add_option("--model", model_name, "classical, space or time")->capture_default_str();
        cmd->add_option("--a", a_str, "rational binding for a")->capture_default_str();
        cmd->add_flag("--symbolic-a", symbolic_a, "keep a symbolic");
        cmd->add_option("--z", z_str, "deformation / lattice step (rational)")->capture_default_str();
        cmd->add_option("--m", m_str, "mass parameter (rational)")->capture_default_str();
        cmd->add_option("--out", out_path, "write output to this file");
        cmd->add_option("--format", format, "text or json")->capture_default_str();
    };

    CLI::App* verify = app.add_subcommand("verify", "run symbolic verification suites");
    add_model_opts(verify);
    verify->add_option("--suite", suite,
                       "relations, centrality, symmetry, abstract, hopf, coassoc, series, classical-limit or all")
        ->capture_default_str();
    verify->add_option("--order", order, "series truncation order")->capture_default_str();

    CLI::App* expand = app.add_subcommand("expand", "z-series expansion of an expression");
    expand->add_option("--expr", expr_src, "expression in the element grammar")->required();
    expand->add_option("--order", order, "truncation order")->capture_default_str();
    expand->add_option("--out", out_path, "write output to this file");

    CLI::App* solve = app.add_subcommand("solve", "evolve a discretized field and report residuals");
    add_model_opts(solve);
    solve->add_option("--n", nsites, "ring size (space model)")->capture_default_str();
    solve->add_option("--steps", steps, "number of evolution steps")->capture_default_str();
    solve->add_option("--dt", dt, "step length (space model)")->capture_default_str();
    solve->add_option("--period", period, "spatial period (time model)")->capture_default_str();
    solve->add_option("--seed", seed_spec,
                      "constant | mode:k | noise:seed | modes:k=amp[,k=amp...]")
        ->capture_default_str();

    CLI::App* hierarchy = app.add_subcommand("hierarchy", "apply symmetry generators to a solution slice");
    add_model_opts(hierarchy);
    hierarchy->add_option("--gens", gens_spec, "comma list, e.g. K,C,K")->required();
    hierarchy->add_option("--lo", lo, "left window site")->capture_default_str();
    hierarchy->add_option("--hi", hi, "right window site")->capture_default_str();

    CLI::App* dispersion = app.add_subcommand("dispersion", "mode rate of each model's lattice flow");
    add_model_opts(dispersion);
    dispersion->add_option("--kmin", kmin, "first wavenumber")->capture_default_str();
    dispersion->add_option("--kmax", kmax, "last wavenumber")->capture_default_str();
    dispersion->add_option("--samples", samples, "sample count")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        auto kind = model_from_string(model_name);
        if (!kind && !app.got_subcommand(expand)) {
            std::cerr << "unknown model '" << model_name << "'\n";
            return 1;
        }

        if (app.got_subcommand(verify)) {
            std::optional<Rational> a_bind;
            if (!symbolic_a) a_bind = parse_rational_arg(a_str);
            Model mo = build_model(*kind, a_bind);
            auto rep = run_suite(mo, suite, order);
            if (!rep) {
                std::cerr << "unknown suite '" << suite << "'\n";
                return 1;
            }
            return emit_report(*rep, out_path, format);
        }

        if (app.got_subcommand(expand)) {
            OpElement el;
            try {
                el = parse_element(expr_src);
            } catch (const SyntaxError& e) {
                std::cerr << "syntax error: " << e.what() << "\n";
                return 1;
            }
            SeriesElement se = series_expand(el, order);
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                os = &file;
            }
            *os << se.str() << "\n";
            return 0;
        }

        const Rational zr = parse_rational_arg(z_str);
        const Rational mr = parse_rational_arg(m_str);
        const Rational ar = symbolic_a ? Rational(-1, 2) : parse_rational_arg(a_str);
        const double zd = zr.to_double(), md = mr.to_double();

        if (app.got_subcommand(dispersion)) {
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                os = &file;
            }
            *os << "k,re_rate,im_rate\n";
            for (int i = 0; i < samples; ++i) {
                double k = samples == 1 ? kmin : kmin + (kmax - kmin) * i / (samples - 1);
                cplx w = dispersion_rate(*kind, k, zd, md);
                *os << k << "," << w.real() << "," << w.imag() << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(solve)) {
            nlohmann::json manifest;
            manifest["schema"] = 1;
            manifest["model"] = to_string(*kind);
            manifest["z"] = zr.str();
            manifest["m"] = mr.str();
            if (*kind == ModelKind::Time) {
                std::map<int, cplx> amps;
                if (seed_spec.rfind("modes:", 0) == 0) {
                    std::stringstream ss(seed_spec.substr(6));
                    std::string item;
                    while (std::getline(ss, item, ',')) {
                        auto eq = item.find('=');
                        if (eq == std::string::npos) amps[std::stoi(item)] = cplx(1, 0);
                        else amps[std::stoi(item.substr(0, eq))] = parse_amp(item.substr(eq + 1));
                    }
                } else {
                    amps[1] = cplx(1, 0);
                }
                SpectralField f = make_spectral(zd, md, period, std::move(amps));
                for (int i = 0; i < steps; ++i) f = time_step(f);
                double res = time_residual(f);
                manifest["steps"] = steps;
                manifest["t"] = f.time;
                manifest["residual"] = res;
                if (!out_path.empty()) {
                    std::ofstream csv(out_path + ".csv");
                    write_spectral_csv(f, csv);
                    std::ofstream mf(out_path + ".json");
                    mf << manifest.dump(2) << "\n";
                } else {
                    std::cout << manifest.dump(2) << "\n";
                }
                return res <= 1e-12 ? 0 : 2;
            }
            SpaceField f = [&] {
                if (seed_spec.rfind("mode:", 0) == 0)
                    return make_mode_ring(nsites, std::stoi(seed_spec.substr(5)), zd, md);
                if (seed_spec.rfind("noise:", 0) == 0)
                    return make_noise_ring(nsites, zd, md, std::stoul(seed_spec.substr(6)));
                return make_constant_ring(nsites, zd, md);
            }();
            for (int i = 0; i < steps; ++i) f = space_evolve(f, dt);
            double res = space_residual(f);
            manifest["steps"] = steps;
            manifest["t"] = f.time;
            manifest["residual"] = res;
            if (!out_path.empty()) {
                std::ofstream csv(out_path + ".csv");
                write_field_csv(f, csv);
                std::ofstream mf(out_path + ".json");
                mf << manifest.dump(2) << "\n";
            } else {
                std::cout << manifest.dump(2) << "\n";
            }
            return res <= 1e-12 ? 0 : 2;
        }

        if (app.got_subcommand(hierarchy)) {
            if (*kind != ModelKind::Space) {
                std::cerr << "hierarchy generation runs on the space model\n";
                return 1;
            }
            Model mo = build_model(*kind, ar);
            std::vector<GeneratorName> gens;
            std::stringstream ss(gens_spec);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item == "K") gens.push_back(GeneratorName::K);
                else if (item == "C") gens.push_back(GeneratorName::C);
                else if (item == "D") gens.push_back(GeneratorName::D);
                else if (item == "H") gens.push_back(GeneratorName::H);
                else if (item == "P") gens.push_back(GeneratorName::P);
                else if (item == "M") gens.push_back(GeneratorName::M);
                else {
                    std::cerr << "unknown generator '" << item << "'\n";
                    return 1;
                }
            }
            SpaceField seed = make_constant_window(lo, hi, zr.to_double(), mr.to_double());
            NumericParams np{zr, mr, ar};
            auto levels = hierarchy_generate(seed, gens, mo.table, np);
            bool ok = true;
            nlohmann::json jlevels = nlohmann::json::array();
            for (const auto& lv : levels) {
                ok = ok && lv.residual <= 1e-12;
                std::cout << (lv.residual <= 1e-12 ? "[PASS] " : "[FAIL] ") << lv.label
                          << "  residual " << lv.residual << "  sites " << lv.field.size() << "\n";
                nlohmann::json jl;
                jl["label"] = lv.label;
                jl["residual"] = lv.residual;
                jl["sites"] = lv.field.size();
                jlevels.push_back(std::move(jl));
            }
            if (!out_path.empty()) {
                nlohmann::json manifest;
                manifest["schema"] = 1;
                manifest["model"] = to_string(*kind);
                manifest["z"] = zr.str();
                manifest["m"] = mr.str();
                manifest["a"] = ar.str();
                manifest["levels"] = std::move(jlevels);
                std::ofstream mf(out_path);
                mf << manifest.dump(2) << "\n";
            }
            return ok ? 0 : 2;
        }
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
