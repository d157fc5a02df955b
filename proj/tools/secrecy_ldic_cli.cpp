// Command-line front end: parameter sweeps, exhaustive verification runs and
// bound tables for the deterministic and Gaussian models.
//
// Exit codes: 0 success, 2 invalid input, 3 consistency violation.

#include "secrecy_ldic/reports.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>

using namespace secrecy_ldic;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitInconsistent = 3;

const std::map<std::string, Model> kModels{{"sldic", Model::sldic}, {"gsic", Model::gsic}};
const std::map<std::string, Format> kFormats{{"csv", Format::csv}, {"json", Format::json}};

// Flag values as given on the command line; unset flags leave the config untouched.
struct SweepFlags {
    std::string config;
    std::optional<Model> model;
    std::optional<Format> format;
    std::optional<std::string> out;
    std::optional<int> m, C, grid_points;
    std::optional<double> P, h_d, C_G, alpha_min, alpha_max, alpha_step;
    bool verify = false;
};

template <typename T>
void apply_override(T& target, const std::optional<T>& flag) {
    if (flag) target = *flag;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy rates of the two-user interference channel with transmitter cooperation"};
    app.require_subcommand(1);

    // ---------------------------------------------------------------- sweep
    SweepFlags sf;
    auto* sweep = app.add_subcommand("sweep", "Inner and outer bounds over an alpha grid");
    sweep->add_option("--config", sf.config, "key = value file; flags override its values");
    sweep->add_option("--model", sf.model, "sldic or gsic")->transform(CLI::CheckedTransformer(kModels));
    sweep->add_option("--format", sf.format, "csv or json")->transform(CLI::CheckedTransformer(kFormats));
    sweep->add_option("--out", sf.out, "output file (default: standard output)");
    sweep->add_option("--m", sf.m, "direct-link levels (sldic)");
    sweep->add_option("--C", sf.C, "cooperative bits per channel use (sldic)");
    sweep->add_option("--P", sf.P, "transmit power, linear (gsic)");
    sweep->add_option("--h_d", sf.h_d, "direct gain (gsic)");
    sweep->add_option("--C_G", sf.C_G, "cooperative link rate in bits (gsic)");
    sweep->add_option("--alpha-min", sf.alpha_min, "smallest alpha");
    sweep->add_option("--alpha-max", sf.alpha_max, "largest alpha");
    sweep->add_option("--alpha-step", sf.alpha_step, "alpha step (gsic; sldic steps n by one)");
    sweep->add_option("--grid-points", sf.grid_points, "optimizer grid points per axis (gsic)");
    sweep->add_flag("--verify", sf.verify, "run the exhaustive secrecy check on each row (sldic)");

    // --------------------------------------------------------------- verify
    int vm = 0, vn = 0, vC = 0, cap = 24;
    std::string v_model = "sldic", v_out;
    Format v_format = Format::csv;
    auto* verify = app.add_subcommand("verify", "Build the scheme for (m, n, C) and check it exhaustively");
    verify->add_option("--model", v_model, "only sldic is supported")->check(CLI::IsMember({"sldic"}));
    verify->add_option("--m", vm, "direct-link levels")->required();
    verify->add_option("--n", vn, "cross-link levels")->required();
    verify->add_option("--C", vC, "cooperative bits per channel use")->required();
    verify->add_option("--cap", cap, "largest enumeration exponent");
    verify->add_option("--format", v_format, "csv (plain text) or json")->transform(CLI::CheckedTransformer(kFormats));
    verify->add_option("--out", v_out, "output file (default: standard output)");

    // --------------------------------------------------------------- bounds
    Model b_model = Model::sldic;
    Format b_format = Format::csv;
    std::string b_out;
    int bm = 0, bn = 0, bC = 0;
    GsicParams bg{100.0, 1.0, 0.0, 0.0};
    std::optional<double> b_alpha;
    std::vector<double> high_snr;
    auto* bounds = app.add_subcommand("bounds", "Outer bounds at one operating point");
    bounds->add_option("--model", b_model, "sldic or gsic")->transform(CLI::CheckedTransformer(kModels));
    bounds->add_option("--format", b_format, "csv (plain text) or json")->transform(CLI::CheckedTransformer(kFormats));
    bounds->add_option("--out", b_out, "output file (default: standard output)");
    bounds->add_option("--m", bm, "direct-link levels (sldic)");
    bounds->add_option("--n", bn, "cross-link levels (sldic)");
    bounds->add_option("--C", bC, "cooperative bits (sldic)");
    bounds->add_option("--P", bg.P, "transmit power (gsic)");
    bounds->add_option("--h_d", bg.h_d, "direct gain (gsic)");
    bounds->add_option("--h_c", bg.h_c, "cross gain (gsic)");
    bounds->add_option("--alpha", b_alpha, "set h_c so that INR = SNR^alpha (gsic)");
    bounds->add_option("--C_G", bg.C_G, "cooperative link rate (gsic)");
    bounds->add_option("--high-snr", high_snr, "alpha values for the large-power correspondence check (gsic)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    auto with_output = [](const std::string& path, auto&& write) {
        if (path.empty()) {
            write(std::cout);
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + path + "'");
        write(out);
    };

    try {
        if (*sweep) {
            SweepSpec spec;
            if (!sf.config.empty()) {
                auto cfg = parse_config(sf.config);
                for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << "\n";
                spec = cfg.spec;
            }
            apply_override(spec.model, sf.model);
            apply_override(spec.format, sf.format);
            apply_override(spec.out, sf.out);
            apply_override(spec.m, sf.m);
            apply_override(spec.C, sf.C);
            apply_override(spec.grid_points, sf.grid_points);
            apply_override(spec.P, sf.P);
            apply_override(spec.h_d, sf.h_d);
            apply_override(spec.C_G, sf.C_G);
            apply_override(spec.alpha_min, sf.alpha_min);
            apply_override(spec.alpha_max, sf.alpha_max);
            apply_override(spec.alpha_step, sf.alpha_step);
            if (sf.verify) spec.verify = true;
            const auto rows = run_sweep(spec);
            if (!spec.out.empty()) std::cerr << rows.size() << " rows written to " << spec.out << "\n";
            return 0;
        }
        if (*verify) {
            OracleOptions opt;
            opt.symbol_cap = cap;
            const auto report = run_verify(vm, vn, vC, opt);
            with_output(v_out, [&](std::ostream& os) { print_verify(os, report, v_format); });
            return report.consistent() ? 0 : kExitInconsistent;
        }
        if (*bounds) {
            if (b_model == Model::sldic) {
                const LdicParams p(bm, bn, bC);
                with_output(b_out, [&](std::ostream& os) { print_sldic_bounds(os, p, b_format); });
                return 0;
            }
            if (b_alpha) bg.h_c = std::sqrt(std::pow(bg.h_d * bg.h_d * bg.P, *b_alpha) / bg.P);
            bg.validate();
            with_output(b_out, [&](std::ostream& os) {
                print_gsic_bounds(os, bg, b_format);
                for (double a : high_snr) {
                    const auto r = high_snr_agreement_check(a, bg.P);
                    os << "alpha " << a << ": thm5 " << r.thm5 << " vs " << r.thm5_reference << " (gap " << r.thm5_gap
                       << "), thm6 " << r.thm6 << " vs " << r.thm6_reference << " (gap " << r.thm6_gap << ")\n";
                }
            });
            return 0;
        }
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency violation: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return 0;
}
