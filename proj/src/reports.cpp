#include "secrecy_ldic/reports.hpp"

#include "secrecy_ldic/parallel.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace secrecy_ldic {

using nlohmann::ordered_json;

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string line_error(int line, const std::string& msg) { return "line " + std::to_string(line) + ": " + msg; }

int parse_int(const std::string& v, int line) {
    std::size_t used = 0;
    int out = 0;
    try {
        out = std::stoi(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size()) throw ParseError(line_error(line, "expected an integer, got '" + v + "'"));
    return out;
}

double parse_double(const std::string& v, int line) {
    std::size_t used = 0;
    double out = 0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size()) throw ParseError(line_error(line, "expected a number, got '" + v + "'"));
    return out;
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ParseError(line_error(line, "expected true/false, got '" + v + "'"));
}

}  // namespace

void SweepSpec::validate() const {
    if (alpha_max < alpha_min) throw DomainError("alpha range is empty");
    if (model == Model::sldic && (m <= 0 || C < 0)) throw DomainError("deterministic sweeps need m > 0 and C >= 0");
    if (model == Model::gsic) {
        if (!(alpha_step > 0.0)) throw DomainError("alpha_step must be positive");
        if (!(P > 0.0) || !(C_G >= 0.0)) throw DomainError("Gaussian sweeps need P > 0 and C_G >= 0");
        if (grid_points < 2) throw DomainError("grid_points must be at least 2");
    }
}

// ------------------------------------------------------------------ config

ConfigResult parse_config_text(const std::string& text, SweepSpec defaults) {
    ConfigResult r{defaults, {}};
    std::map<std::string, int> seen;
    std::istringstream in(text);
    std::string raw;
    for (int line = 1; std::getline(in, raw); ++line) {
        const auto hash = raw.find('#');
        const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ParseError(line_error(line, "expected 'key = value'"));
        const std::string key = trim(body.substr(0, eq)), value = trim(body.substr(eq + 1));
        if (key.empty() || value.empty()) throw ParseError(line_error(line, "expected 'key = value'"));
        if (auto it = seen.find(key); it != seen.end())
            r.warnings.push_back(line_error(line, "duplicate key '" + key + "' (first on line " +
                                                      std::to_string(it->second) + "); the later value wins"));
        seen[key] = line;

        auto& s = r.spec;
        if (key == "model") {
            if (value == "sldic") s.model = Model::sldic;
            else if (value == "gsic") s.model = Model::gsic;
            else throw ParseError(line_error(line, "model must be sldic or gsic"));
        } else if (key == "format") {
            if (value == "csv") s.format = Format::csv;
            else if (value == "json") s.format = Format::json;
            else throw ParseError(line_error(line, "format must be csv or json"));
        } else if (key == "m") s.m = parse_int(value, line);
        else if (key == "C") s.C = parse_int(value, line);
        else if (key == "P") s.P = parse_double(value, line);
        else if (key == "h_d") s.h_d = parse_double(value, line);
        else if (key == "C_G") s.C_G = parse_double(value, line);
        else if (key == "alpha_min") s.alpha_min = parse_double(value, line);
        else if (key == "alpha_max") s.alpha_max = parse_double(value, line);
        else if (key == "alpha_step") s.alpha_step = parse_double(value, line);
        else if (key == "verify") s.verify = parse_bool(value, line);
        else if (key == "grid_points") s.grid_points = parse_int(value, line);
        else if (key == "out") s.out = value;
        else throw ParseError(line_error(line, "unknown key '" + key + "'"));
    }
    return r;
}

ConfigResult parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

// ------------------------------------------------------------------- sweeps

namespace {

RateRow sldic_row(const SweepSpec& spec, int n) {
    RateRow row;
    row.model = Model::sldic;
    row.params = LdicParams(spec.m, n, spec.C);
    row.alpha_exact = row.params.alpha();
    row.alpha = to_double(*row.alpha_exact);
    row.inner_exact = achievable_rate(row.params);
    row.bounds = outer_min(row.params);
    row.inner = to_double(row.inner_exact);
    row.outer_min = to_double(row.bounds.minimum);
    row.inner_norm = row.inner / spec.m;
    row.outer_norm = row.outer_min / spec.m;
    if (spec.verify) {
        try {
            const auto plan = build_plan(row.params);
            const auto rep = verify_secrecy(plan, OracleOptions{24, 1});
            const bool ok = rep.secure && rep.decodable && counted_rate(plan) == row.inner_exact;
            row.verdict = ok ? "pass" : "fail";
        } catch (const ResourceError&) {
            row.verdict = "skipped";
        }
    }
    return row;
}

RateRow gsic_row(const SweepSpec& spec, double alpha) {
    RateRow row;
    row.model = Model::gsic;
    row.alpha = alpha;
    // INR = SNR^alpha with the direct gain held fixed.
    row.gsic = GsicParams{spec.P, spec.h_d, std::sqrt(std::pow(spec.h_d * spec.h_d * spec.P, alpha) / spec.P), spec.C_G};
    OptimizerOptions opt;
    opt.grid_points = spec.grid_points;
    opt.workers = 1;
    row.inner = optimize_symmetric_rate(row.gsic, opt).R_s;
    row.gsic_bounds = gsic_outer_min(row.gsic);
    row.outer_min = row.gsic_bounds.minimum;
    return row;
}

std::string opt_cell(const std::optional<Rational>& r) { return r ? to_decimal_string(*r) : ""; }

}  // namespace

std::vector<RateRow> sweep_rows(const SweepSpec& spec) {
    spec.validate();
    std::vector<RateRow> rows;
    if (spec.model == Model::sldic) {
        const int n_lo = static_cast<int>(std::ceil(spec.alpha_min * spec.m - 1e-9));
        const int n_hi = static_cast<int>(std::floor(spec.alpha_max * spec.m + 1e-9));
        const int lo = std::max(0, n_lo);
        if (n_hi < lo) return rows;
        rows.resize(static_cast<std::size_t>(n_hi - lo + 1));
        parallel_for(rows.size(), default_worker_count(),
                     [&](std::size_t i) { rows[i] = sldic_row(spec, lo + static_cast<int>(i)); });
    } else {
        const auto count = static_cast<std::size_t>(std::floor((spec.alpha_max - spec.alpha_min) / spec.alpha_step + 1e-9)) + 1;
        rows.resize(count);
        parallel_for(count, default_worker_count(), [&](std::size_t i) {
            const double alpha = std::round((spec.alpha_min + spec.alpha_step * static_cast<double>(i)) * 1e9) / 1e9;
            rows[i] = gsic_row(spec, alpha);
        });
    }
    return rows;
}

void write_rows(std::ostream& os, const SweepSpec& spec, const std::vector<RateRow>& rows) {
    const bool sldic = spec.model == Model::sldic;
    if (spec.format == Format::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            j["alpha"] = fixed6(r.alpha);
            if (sldic) {
                j["m"] = r.params.m;
                j["n"] = r.params.n;
                j["C"] = r.params.C;
                j["inner"] = to_decimal_string(r.inner_exact);
                j["outer_thm1"] = to_decimal_string(r.bounds.thm1);
                j["outer_thm2"] = opt_cell(r.bounds.thm2);
                j["outer_thm3"] = opt_cell(r.bounds.thm3);
                j["outer_thm4"] = opt_cell(r.bounds.thm4);
                j["outer_min"] = to_decimal_string(r.bounds.minimum);
                j["inner_norm"] = r.inner_norm ? fixed6(*r.inner_norm) : "";
                j["outer_norm"] = r.outer_norm ? fixed6(*r.outer_norm) : "";
                j["alpha_exact"] = r.alpha_exact ? to_exact_string(*r.alpha_exact) : "";
                j["inner_exact"] = to_exact_string(r.inner_exact);
                j["outer_min_exact"] = to_exact_string(r.bounds.minimum);
                if (r.verdict) j["verified"] = *r.verdict;
            } else {
                j["P"] = fixed6(r.gsic.P);
                j["h_d"] = fixed6(r.gsic.h_d);
                j["h_c"] = fixed6(r.gsic.h_c);
                j["C_G"] = fixed6(r.gsic.C_G);
                j["inner"] = fixed6(r.inner);
                j["outer_thm5"] = fixed6(r.gsic_bounds.thm5);
                j["outer_thm6"] = fixed6(r.gsic_bounds.thm6);
                j["outer_thm7"] = fixed6(r.gsic_bounds.thm7);
                j["outer_min"] = fixed6(r.outer_min);
                j["inner_norm"] = "";
                j["outer_norm"] = "";
            }
            arr.push_back(j);
        }
        os << arr.dump(2) << "\n";
        return;
    }
    if (sldic) {
        os << "alpha,m,n,C,inner,outer_thm1,outer_thm2,outer_thm3,outer_thm4,outer_min,inner_norm,outer_norm,"
              "alpha_exact,inner_exact,outer_min_exact";
        if (spec.verify) os << ",verified";
        os << "\n";
        for (const auto& r : rows) {
            os << fixed6(r.alpha) << ',' << r.params.m << ',' << r.params.n << ',' << r.params.C << ','
               << to_decimal_string(r.inner_exact) << ',' << to_decimal_string(r.bounds.thm1) << ','
               << opt_cell(r.bounds.thm2) << ',' << opt_cell(r.bounds.thm3) << ',' << opt_cell(r.bounds.thm4) << ','
               << to_decimal_string(r.bounds.minimum) << ',' << (r.inner_norm ? fixed6(*r.inner_norm) : "") << ','
               << (r.outer_norm ? fixed6(*r.outer_norm) : "") << ','
               << (r.alpha_exact ? to_exact_string(*r.alpha_exact) : "") << ',' << to_exact_string(r.inner_exact)
               << ',' << to_exact_string(r.bounds.minimum);
            if (spec.verify) os << ',' << r.verdict.value_or("");
            os << "\n";
        }
        return;
    }
    os << "alpha,P,h_d,h_c,C_G,inner,outer_thm5,outer_thm6,outer_thm7,outer_min,inner_norm,outer_norm\n";
    for (const auto& r : rows)
        os << fixed6(r.alpha) << ',' << fixed6(r.gsic.P) << ',' << fixed6(r.gsic.h_d) << ',' << fixed6(r.gsic.h_c)
           << ',' << fixed6(r.gsic.C_G) << ',' << fixed6(r.inner) << ',' << fixed6(r.gsic_bounds.thm5) << ','
           << fixed6(r.gsic_bounds.thm6) << ',' << fixed6(r.gsic_bounds.thm7) << ',' << fixed6(r.outer_min) << ",,\n";
}

std::vector<RateRow> run_sweep(const SweepSpec& spec) {
    auto rows = sweep_rows(spec);
    for (const auto& r : rows) {
        const bool violated = r.model == Model::sldic ? r.inner_exact > r.bounds.minimum : r.inner > r.outer_min + 1e-6;
        if (violated) {
            std::ostringstream msg;
            msg << "inner rate exceeds outer bound at alpha=" << fixed6(r.alpha);
            if (r.model == Model::sldic)
                msg << " (m,n,C)=(" << r.params.m << ',' << r.params.n << ',' << r.params.C << ")";
            msg << ": inner " << fixed6(r.inner) << " > outer " << fixed6(r.outer_min);
            throw ConsistencyError(msg.str());
        }
        if (r.verdict && *r.verdict == "fail")
            throw ConsistencyError("exhaustive verification failed at (m,n,C)=(" + std::to_string(r.params.m) + ',' +
                                   std::to_string(r.params.n) + ',' + std::to_string(r.params.C) + ")");
    }
    if (spec.out.empty()) {
        write_rows(std::cout, spec, rows);
    } else {
        std::ofstream out(spec.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + spec.out + "'");
        write_rows(out, spec, rows);
        if (!out) throw std::runtime_error("write to '" + spec.out + "' failed");
    }
    return rows;
}

// ------------------------------------------------------------------ verify

bool VerifyReport::consistent() const {
    return secrecy.secure && secrecy.decodable && counted == formula && formula <= bounds.minimum &&
           coop_usage <= params.C;
}

VerifyReport run_verify(int m, int n, int C, const OracleOptions& opt) {
    VerifyReport r;
    r.params = LdicParams(m, n, C);
    r.regime = (m == 0 && n == 0) ? "none" : to_string(classify_regime(r.params));
    const auto plan = build_plan(r.params);
    r.scheme = plan.scheme;
    r.slots = plan.slots.size();
    r.notes = plan.notes;
    r.coop_usage = plan.max_coop_usage();
    r.secrecy = verify_secrecy(plan, opt);
    r.counted = counted_rate(plan);
    r.formula = achievable_rate(r.params);
    r.bounds = outer_min(r.params);
    return r;
}

namespace {

ordered_json info_json(const InfoValue& v) {
    ordered_json j;
    j["bits"] = v.bits;
    j["exactly_zero"] = v.exactly_zero;
    j["exact"] = v.exact ? to_exact_string(*v.exact) : "";
    return j;
}

std::string info_text(const InfoValue& v) {
    if (v.exactly_zero) return "0 (exact)";
    return v.exact ? to_exact_string(*v.exact) : fixed6(v.bits);
}

}  // namespace

void print_verify(std::ostream& os, const VerifyReport& r, Format format) {
    if (format == Format::json) {
        ordered_json j;
        j["m"] = r.params.m;
        j["n"] = r.params.n;
        j["C"] = r.params.C;
        j["C_requested"] = r.params.C_requested;
        j["regime"] = r.regime;
        j["scheme"] = r.scheme;
        j["slots"] = r.slots;
        j["symbols"] = r.secrecy.symbol_count;
        j["slot_factorized"] = r.secrecy.slot_factorized;
        j["I_W1_Y2"] = info_json(r.secrecy.i_w1_y2);
        j["I_W2_Y1"] = info_json(r.secrecy.i_w2_y1);
        j["H_W1_given_Y1"] = info_json(r.secrecy.h_w1_given_y1);
        j["H_W2_given_Y2"] = info_json(r.secrecy.h_w2_given_y2);
        j["secure"] = r.secrecy.secure;
        j["decodable"] = r.secrecy.decodable;
        j["counted_rate"] = to_exact_string(r.counted);
        j["formula_rate"] = to_exact_string(r.formula);
        j["outer_min"] = to_exact_string(r.bounds.minimum);
        j["coop_usage"] = r.coop_usage;
        j["capacity"] = r.capacity();
        j["notes"] = r.notes;
        j["consistent"] = r.consistent();
        os << j.dump(2) << "\n";
        return;
    }
    os << "(m,n,C) = (" << r.params.m << "," << r.params.n << "," << r.params.C << ")";
    if (r.params.C_requested != r.params.C) os << "  [C clamped from " << r.params.C_requested << "]";
    os << "\nregime: " << r.regime << "  scheme: " << r.scheme << "  slots: " << r.slots
       << "  symbols: " << r.secrecy.symbol_count << (r.secrecy.slot_factorized ? " (per-slot enumeration)" : "")
       << "\n";
    os << "I(W1;Y2) = " << info_text(r.secrecy.i_w1_y2) << "   I(W2;Y1) = " << info_text(r.secrecy.i_w2_y1) << "\n";
    os << "H(W1|Y1) = " << info_text(r.secrecy.h_w1_given_y1) << "   H(W2|Y2) = " << info_text(r.secrecy.h_w2_given_y2)
       << "\n";
    os << "secure: " << (r.secrecy.secure ? "yes" : "NO") << "  decodable: " << (r.secrecy.decodable ? "yes" : "NO")
       << "\n";
    os << "rate: counted " << to_exact_string(r.counted) << ", formula " << to_exact_string(r.formula)
       << ", outer " << to_exact_string(r.bounds.minimum) << (r.capacity() ? "  [capacity]" : "") << "\n";
    os << "cooperative bits used per slot: " << r.coop_usage << " of " << r.params.C << "\n";
    for (const auto& note : r.notes) os << "note: " << note << "\n";
    os << (r.consistent() ? "OK" : "INCONSISTENT") << "\n";
}

void print_sldic_bounds(std::ostream& os, const LdicParams& p, Format format) {
    const auto b = outer_min(p);
    const Rational inner = achievable_rate(p);
    if (format == Format::json) {
        ordered_json j;
        j["m"] = p.m;
        j["n"] = p.n;
        j["C"] = p.C;
        j["thm1"] = to_exact_string(b.thm1);
        j["thm2"] = b.thm2 ? to_exact_string(*b.thm2) : "";
        j["thm3"] = b.thm3 ? to_exact_string(*b.thm3) : "";
        j["thm4"] = b.thm4 ? to_exact_string(*b.thm4) : "";
        j["consolidated"] = b.consolidated ? to_exact_string(b.consolidated->value) : "";
        j["consolidated_covered"] = b.consolidated ? b.consolidated->covered : false;
        j["outer_min"] = to_exact_string(b.minimum);
        j["rate_cap"] = to_exact_string(b.rate_cap);
        j["inner"] = to_exact_string(inner);
        os << j.dump(2) << "\n";
        return;
    }
    auto cell = [](const std::optional<Rational>& r) { return r ? to_exact_string(*r) : std::string("n/a"); };
    os << "(m,n,C) = (" << p.m << "," << p.n << "," << p.C << ")\n";
    os << "thm1 " << to_exact_string(b.thm1) << "  thm2 " << cell(b.thm2) << "  thm3 " << cell(b.thm3) << "  thm4 "
       << cell(b.thm4) << "\n";
    if (b.consolidated)
        os << "closed-form minimum " << to_exact_string(b.consolidated->value)
           << (b.consolidated->covered ? "" : " (between branch conditions; minimum of the individual bounds used)") << "\n";
    os << "outer_min " << to_exact_string(b.minimum) << "  inner " << to_exact_string(inner) << "  rate cap "
       << to_exact_string(b.rate_cap) << " (not enforced)\n";
}

void print_gsic_bounds(std::ostream& os, const GsicParams& g, Format format) {
    const auto t5 = outer_thm5(g), t6 = outer_thm6(g), t7 = outer_thm7(g);
    const auto b = gsic_outer_min(g);
    if (format == Format::json) {
        ordered_json j;
        j["P"] = g.P;
        j["h_d"] = g.h_d;
        j["h_c"] = g.h_c;
        j["C_G"] = g.C_G;
        j["thm5"] = {{"value", t5.value}, {"rho", t5.rho}};
        j["thm6"] = {{"value", t6.value}, {"rho", t6.rho}};
        j["thm7"] = {{"value", t7.value}, {"rho", t7.rho}};
        j["outer_min"] = b.minimum;
        os << j.dump(2) << "\n";
        return;
    }
    os << "P " << g.P << "  h_d " << g.h_d << "  h_c " << g.h_c << "  C_G " << g.C_G << "\n";
    os << "thm5 " << fixed6(t5.value) << " (rho " << fixed6(t5.rho) << ")\n";
    os << "thm6 " << fixed6(t6.value) << " (rho " << fixed6(t6.rho) << ")\n";
    os << "thm7 " << fixed6(t7.value) << " (rho " << fixed6(t7.rho) << ")\n";
    os << "outer_min " << fixed6(b.minimum) << "\n";
}

}  // namespace secrecy_ldic
