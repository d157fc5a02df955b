#pragma once

#include "secrecy_ldic/bounds.hpp"
#include "secrecy_ldic/gsic.hpp"
#include "secrecy_ldic/oracle.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace secrecy_ldic {

// Malformed configuration; the message carries the line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Model { sldic, gsic };
enum class Format { csv, json };

struct SweepSpec {
    Model model = Model::sldic;
    // Deterministic sweeps: m and C fixed, n runs over the integers with
    // alpha_min <= n/m <= alpha_max.
    int m = 24;
    int C = 0;
    // Gaussian sweeps: h_d, P and C_G fixed, alpha on a grid of alpha_step.
    double P = 100.0;
    double h_d = 1.0;
    double C_G = 0.0;
    double alpha_min = 0.0;
    double alpha_max = 4.0;
    double alpha_step = 0.05;
    bool verify = false;   // deterministic rows: run the exhaustive oracle where feasible
    int grid_points = 21;  // Gaussian optimizer grid per axis
    std::string out;       // empty: standard output
    Format format = Format::csv;

    void validate() const;
};

struct ConfigResult {
    SweepSpec spec;
    std::vector<std::string> warnings;
};

// Flat `key = value` file, `#` starts a comment, later duplicates win with a warning.
ConfigResult parse_config(const std::string& path);
ConfigResult parse_config_text(const std::string& text, SweepSpec defaults = {});

struct RateRow {
    Model model = Model::sldic;
    double alpha = 0.0;
    std::optional<Rational> alpha_exact;  // deterministic rows with m > 0
    // Deterministic channel.
    LdicParams params;
    Rational inner_exact;
    BoundSet bounds;
    // Gaussian channel.
    GsicParams gsic;
    GsicBoundSet gsic_bounds;
    // Both models, in bits.
    double inner = 0.0, outer_min = 0.0;
    std::optional<double> inner_norm, outer_norm;
    std::optional<std::string> verdict;  // "pass", "fail" or "skipped"
};

std::vector<RateRow> sweep_rows(const SweepSpec& spec);
void write_rows(std::ostream& os, const SweepSpec& spec, const std::vector<RateRow>& rows);

// Evaluates the grid, checks inner <= outer on every row (ConsistencyError naming the
// point otherwise) and writes the table to spec.out or standard output.
std::vector<RateRow> run_sweep(const SweepSpec& spec);

struct VerifyReport {
    LdicParams params;
    std::string regime;
    std::string scheme;
    std::size_t slots = 0;
    SecrecyReport secrecy;
    Rational counted, formula;
    BoundSet bounds;
    int coop_usage = 0;
    std::vector<std::string> notes;
    bool consistent() const;  // secure, decodable, counted == formula, inner <= outer, coop <= C
    bool capacity() const { return formula == bounds.minimum; }
};

VerifyReport run_verify(int m, int n, int C, const OracleOptions& opt = {});
void print_verify(std::ostream& os, const VerifyReport& r, Format format);

void print_sldic_bounds(std::ostream& os, const LdicParams& p, Format format);
void print_gsic_bounds(std::ostream& os, const GsicParams& g, Format format);

}  // namespace secrecy_ldic
