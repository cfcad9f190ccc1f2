// homfly — command-line interface to the braid-closure invariant toolkit.
//
// Subcommands
//   homfly <word> [--n N | --prime]          skein polynomial of the closure
//   labelings <word> [--all]                 labeling table (TSV by default)
//   composition <word> [--jaeger|--alexander]
//   euler-check <word> [--alexander|--homfly]
//   homology <word> [--cutoff N] [--reduce K]
//   fixtures
//
// Every subcommand accepts --json; tables also accept --tsv.  Output is
// deterministic byte-for-byte across runs.  Exit codes: 0 success (and all
// checks pass), 1 a verification check failed, 2 bad input, 3 internal
// error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homfly/braid.hpp"
#include "homfly/composition.hpp"
#include "homfly/cube.hpp"
#include "homfly/cycles.hpp"
#include "homfly/diagram.hpp"
#include "homfly/fixtures.hpp"
#include "homfly/gradings.hpp"
#include "homfly/laurent.hpp"
#include "homfly/skein.hpp"

namespace {

using nlohmann::ordered_json;
using namespace homfly;

enum class Format { text, json, tsv };

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

/// Human rendering of a polynomial: the canonical text with the explicit
/// multiplication dots turned into spaces ("a^-2*q^2" -> "a^-2 q^2").
std::string display(std::string s) {
    std::replace(s.begin(), s.end(), '*', ' ');
    return s;
}

std::string display(const Laurent& p) { return display(p.str()); }
std::string display(const QuotientPoly& p) { return display(p.str()); }

std::string cycle_label(const MultiCycle& z) {
    std::vector<int> edges = z.edge_list();
    if (edges.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ' ';
        out += "e" + std::to_string(edges[i]);
    }
    return out;
}

std::string types_label(const MultiCycle& z) {
    if (z.types.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < z.types.size(); ++i) {
        if (i) out += ' ';
        out += local_type_name(z.types[i]);
    }
    return out;
}

/// Left-aligned column layout with two spaces between columns.
void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& r : rows)
        for (size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.resize(i + 1, 0);
            width[i] = std::max(width[i], r[i].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size())
                line.append(width[i] - r[i].size() + 2, ' ');
        }
        os << line << "\n";
    }
}

void print_tsv(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    for (const auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) os << '\t';
            os << r[i];
        }
        os << "\n";
    }
}

// ---------------------------------------------------------------------------
// JSON helpers
// ---------------------------------------------------------------------------

ordered_json coeff_json(const BigInt& c) {
    static const BigInt kSafe = BigInt(1) << 53;
    if (c >= -kSafe && c <= kSafe)
        return ordered_json(static_cast<std::int64_t>(c));
    std::ostringstream os;
    os << c;
    return ordered_json(os.str());
}

/// [{exps: {a: -2, q: 2}, c: 1}, ...] in the canonical term order.
ordered_json laurent_json(const Laurent& p) {
    ordered_json terms = ordered_json::array();
    const auto& vars = p.variables();
    for (const auto& [e, c] : p.terms()) {
        ordered_json exps = ordered_json::object();
        for (size_t i = 0; i < vars.size(); ++i)
            if (e[i] != 0) exps[vars[i]] = e[i];
        terms.push_back({{"exps", std::move(exps)}, {"c", coeff_json(c)}});
    }
    return terms;
}

ordered_json quotient_json(QuotientPoly p) {
    p.normalize();
    return {{"num", laurent_json(p.num)}, {"denom_pow", p.denom_pow}};
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int run_homfly(const std::string& word, bool prime, bool has_n, int n, Format fmt) {
    Diagram D = close_braid(parse_braid(word));
    std::string kind = "homfly";
    ordered_json jpoly;
    std::string text;
    if (has_n) {
        kind = "specialized";
        Laurent p = homfly_specialized(to_link(D), n);
        jpoly = laurent_json(p);
        text = display(p);
    } else {
        QuotientPoly p = prime ? homfly_framed(to_link(D)) : homfly_poly(D);
        if (prime) kind = "framed";
        jpoly = quotient_json(p);
        text = display(p);
    }
    if (fmt == Format::json) {
        ordered_json out{{"word", word}, {"kind", kind}};
        if (has_n) out["n"] = n;
        out["polynomial"] = std::move(jpoly);
        out["text"] = text;
        emit_json(out);
    } else {
        std::cout << text << "\n";
    }
    return 0;
}

int run_labelings(const std::string& word, bool all, Format fmt) {
    Diagram D = close_braid(parse_braid(word));
    EnumerateOptions opt;
    opt.admissible_only = !all;
    std::vector<MultiCycle> cycles = enumerate_cycles(D, opt);

    if (fmt == Format::json) {
        ordered_json rows = ordered_json::array();
        for (const auto& z : cycles) {
            ordered_json types = ordered_json::array();
            for (LocalType t : z.types) types.push_back(local_type_name(t));
            rows.push_back(
                {{"edges", z.edge_list()},
                 {"types", std::move(types)},
                 {"turns",
                  {{"t+", z.stats.t_pos},
                   {"t-", z.stats.t_neg},
                   {"d+", z.stats.d_pos},
                   {"d-", z.stats.d_neg},
                   {"x+", z.stats.x_pos},
                   {"x-", z.stats.x_neg}}},
                 {"s", {s_value(D, z, 1), s_value(D, z, 2)}},
                 {"r",
                  {marked_rotation_number(D, side_mask(z, 1)),
                   marked_rotation_number(D, side_mask(z, 2))}}});
        }
        emit_json({{"word", word}, {"all", all}, {"labelings", std::move(rows)}});
        return 0;
    }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"cycle", "types", "t+", "t-", "d+", "d-", "x+", "x-", "s1",
                    "s2", "r1", "r2"});
    for (const auto& z : cycles) {
        rows.push_back({cycle_label(z), types_label(z),
                        std::to_string(z.stats.t_pos), std::to_string(z.stats.t_neg),
                        std::to_string(z.stats.d_pos), std::to_string(z.stats.d_neg),
                        std::to_string(z.stats.x_pos), std::to_string(z.stats.x_neg),
                        std::to_string(s_value(D, z, 1)), std::to_string(s_value(D, z, 2)),
                        std::to_string(marked_rotation_number(D, side_mask(z, 1))),
                        std::to_string(marked_rotation_number(D, side_mask(z, 2)))});
    }
    if (fmt == Format::text)
        print_table(std::cout, rows);
    else
        print_tsv(std::cout, rows);
    return 0;
}

/// Shared tail for the check subcommands: per-row table, TOTAL line with the
/// verdict, and on failure the independently computed expected value.
int finish_check(const CompositionResult& R, std::vector<std::vector<std::string>> rows,
                 Format fmt) {
    if (fmt == Format::text)
        print_table(std::cout, rows);
    else
        print_tsv(std::cout, rows);
    std::cout << "TOTAL " << display(R.total) << "  "
              << (R.matches ? "PASS" : "FAIL") << "\n";
    if (!R.matches) std::cout << "EXPECTED " << display(R.expected) << "\n";
    return R.matches ? 0 : 1;
}

int run_composition(const std::string& word, bool jaeger, bool alexander, Format fmt) {
    Diagram D = close_braid(parse_braid(word));
    std::string mode = jaeger ? "jaeger" : alexander ? "alexander" : "destabilized";
    CompositionResult R = jaeger      ? jaeger_product(D)
                          : alexander ? alexander_product(D)
                                      : destabilized_product(D);

    if (fmt == Format::json) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : R.rows)
            rows.push_back({{"cycle", r.cycle.edge_list()},
                            {"term", quotient_json(r.term)},
                            {"text", display(r.term)}});
        emit_json({{"word", word},
                   {"mode", mode},
                   {"rows", std::move(rows)},
                   {"total", quotient_json(R.total)},
                   {"total_text", display(R.total)},
                   {"expected", quotient_json(R.expected)},
                   {"pass", R.matches}});
        return R.matches ? 0 : 1;
    }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Cycle", "Contribution"});
    for (const auto& r : R.rows) rows.push_back({cycle_label(r.cycle), display(r.term)});
    return finish_check(R, std::move(rows), fmt);
}

int run_euler_check(const std::string& word, bool alexander, Format fmt) {
    Diagram D = close_braid(parse_braid(word));
    CompositionResult R = alexander ? alexander_product(D) : homfly_euler_check(D);
    auto shift_of = [&](const MultiCycle& z) {
        return alexander ? bigrading_shift(D, z).str()
                         : triple_shift(D, z, /*euler_vertical=*/true).str();
    };

    if (fmt == Format::json) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : R.rows)
            rows.push_back({{"cycle", r.cycle.edge_list()},
                            {"turns", r.cycle.stats.turns()},
                            {"shift", shift_of(r.cycle)},
                            {"term", quotient_json(r.term)},
                            {"text", display(r.term)}});
        emit_json({{"word", word},
                   {"mode", alexander ? "alexander" : "homfly"},
                   {"rows", std::move(rows)},
                   {"total", quotient_json(R.total)},
                   {"total_text", display(R.total)},
                   {"expected", quotient_json(R.expected)},
                   {"pass", R.matches}});
        return R.matches ? 0 : 1;
    }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Cycle", "T", "Shift", "Contribution"});
    for (const auto& r : R.rows)
        rows.push_back({cycle_label(r.cycle), std::to_string(r.cycle.stats.turns()),
                        shift_of(r.cycle), display(r.term)});
    return finish_check(R, std::move(rows), fmt);
}

int run_homology(const std::string& word, int cutoff, int reduce, Format fmt) {
    Diagram D = close_braid(parse_braid(word));
    GradedDims H = middle_homfly_homology(D, reduce, cutoff);

    if (fmt == Format::json) {
        ordered_json rows = ordered_json::array();
        for (const auto& [key, dim] : H.dims)
            rows.push_back(
                {{"q", key[0]}, {"h", key[1]}, {"v", key[2]}, {"dim", dim}});
        emit_json({{"word", word},
                   {"cutoff", H.cutoff},
                   {"reduce", reduce},
                   {"dims", std::move(rows)}});
        return 0;
    }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"q", "h", "v", "dim"});
    for (const auto& [key, dim] : H.dims)
        rows.push_back({std::to_string(key[0]), std::to_string(key[1]),
                        std::to_string(key[2]), std::to_string(dim)});
    if (fmt == Format::text) {
        std::cout << "cutoff " << H.cutoff << "\n";
        print_table(std::cout, rows);
    } else {
        print_tsv(std::cout, rows);
    }
    return 0;
}

int run_fixtures(Format fmt) {
    FixtureReport rep = appendix_fixtures();

    if (fmt == Format::json) {
        ordered_json rows = ordered_json::array();
        for (const auto& c : rep.checks)
            rows.push_back({{"fixture", c.fixture},
                            {"check", c.check},
                            {"pass", c.pass},
                            {"detail", c.detail}});
        emit_json({{"checks", std::move(rows)}, {"pass", rep.all_pass()}});
        return rep.all_pass() ? 0 : 1;
    }

    std::vector<std::vector<std::string>> rows;
    long long fails = 0;
    for (const auto& c : rep.checks) {
        std::string tail = c.check;
        if (!c.pass) {
            ++fails;
            if (!c.detail.empty()) tail += "  # " + c.detail;
        }
        rows.push_back({c.pass ? "PASS" : "FAIL", c.fixture, tail});
    }
    if (fmt == Format::text)
        print_table(std::cout, rows);
    else
        print_tsv(std::cout, rows);
    if (fails == 0)
        std::cout << "ALL PASS (" << rep.checks.size() << " checks)\n";
    else
        std::cout << fails << " FAIL of " << rep.checks.size() << " checks\n";
    return fails == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Argument wiring
// ---------------------------------------------------------------------------

struct FormatFlags {
    bool json = false;
    bool tsv = false;

    Format pick(Format fallback) const {
        if (json) return Format::json;
        if (tsv) return Format::tsv;
        return fallback;
    }
};

/// --json on every subcommand; --tsv only where there is a table.
void add_format_flags(CLI::App* sub, FormatFlags& f, bool with_tsv) {
    auto* j = sub->add_flag("--json", f.json, "JSON output");
    if (with_tsv) sub->add_flag("--tsv", f.tsv, "tab-separated output")->excludes(j);
}

int dispatch(int argc, char** argv) {
    CLI::App app{
        "homfly: skein polynomials, labeling expansions and graded homology "
        "of braid closures"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    std::string word;
    const char* word_help = "braid word, e.g. \"1 1 1\" (empty for the unknot)";

    auto* sc_homfly =
        app.add_subcommand("homfly", "skein polynomial of the braid closure");
    sc_homfly->add_option("word", word, word_help)->required();
    bool prime = false;
    int n = 0;
    auto* opt_prime = sc_homfly->add_flag(
        "--prime", prime, "writhe-corrected unreduced normalization");
    auto* opt_n =
        sc_homfly->add_option("--n", n, "specialize a -> q^n")->excludes(opt_prime);
    FormatFlags fmt_homfly;
    add_format_flags(sc_homfly, fmt_homfly, false);

    auto* sc_lab = app.add_subcommand(
        "labelings", "enumerate the closure's labelings (2-labelings as cycles)");
    sc_lab->add_option("word", word, word_help)->required();
    bool all = false;
    sc_lab->add_flag("--all", all, "include non-admissible cycles");
    FormatFlags fmt_lab;
    add_format_flags(sc_lab, fmt_lab, true);

    auto* sc_comp = app.add_subcommand(
        "composition", "composition-product expansion checked against the skein value");
    sc_comp->add_option("word", word, word_help)->required();
    bool jaeger = false, comp_alex = false;
    auto* opt_jaeger = sc_comp->add_flag(
        "--jaeger", jaeger, "two-variable product (unreduced normalization)");
    sc_comp->add_flag("--alexander", comp_alex, "Alexander specialization")
        ->excludes(opt_jaeger);
    FormatFlags fmt_comp;
    add_format_flags(sc_comp, fmt_comp, true);

    auto* sc_euler = app.add_subcommand(
        "euler-check", "graded Euler-characteristic identity of the homology decomposition");
    sc_euler->add_option("word", word, word_help)->required();
    bool euler_alex = false, euler_homfly = false;
    auto* opt_ea = sc_euler->add_flag(
        "--alexander", euler_alex, "bigraded check against the Alexander polynomial");
    sc_euler
        ->add_flag("--homfly", euler_homfly,
                   "triple-graded check against the skein polynomial (default)")
        ->excludes(opt_ea);
    FormatFlags fmt_euler;
    add_format_flags(sc_euler, fmt_euler, true);

    auto* sc_hom = app.add_subcommand(
        "homology", "graded dimensions of the closure's middle homology");
    sc_hom->add_option("word", word, word_help)->required();
    int cutoff = 12, reduce = 0;
    sc_hom->add_option("--cutoff", cutoff, "quantum-degree window (default 12)")
        ->check(CLI::NonNegativeNumber);
    sc_hom->add_option("--reduce", reduce, "number of reduction edges (default 0)")
        ->check(CLI::NonNegativeNumber);
    FormatFlags fmt_hom;
    add_format_flags(sc_hom, fmt_hom, true);

    auto* sc_fix =
        app.add_subcommand("fixtures", "run the embedded local-complex fixture battery");
    FormatFlags fmt_fix;
    add_format_flags(sc_fix, fmt_fix, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // app.exit prints help or the error message; fold every refused
        // command line into the documented bad-input status.
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (sc_homfly->parsed())
        return run_homfly(word, prime, opt_n->count() > 0, n,
                          fmt_homfly.pick(Format::text));
    if (sc_lab->parsed()) return run_labelings(word, all, fmt_lab.pick(Format::tsv));
    if (sc_comp->parsed())
        return run_composition(word, jaeger, comp_alex, fmt_comp.pick(Format::text));
    if (sc_euler->parsed())
        return run_euler_check(word, euler_alex, fmt_euler.pick(Format::text));
    if (sc_hom->parsed())
        return run_homology(word, cutoff, reduce, fmt_hom.pick(Format::text));
    if (sc_fix->parsed()) return run_fixtures(fmt_fix.pick(Format::text));
    return 3;  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const homfly::BraidParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        // Precondition violations surfaced by the library (diagram too large
        // for the engine, impossible option combination, ...): bad input.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
