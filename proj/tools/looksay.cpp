/* Command-line front end: sequence generation, ratio series, chemistry
 * discovery and export, spectral analysis, exact characteristic polynomials
 * with degree certification, base and rule sweeps, end-behavior audits, and
 * a one-shot export of every table and data file.
 *
 * Exit codes: 0 success, 1 usage error, 2 budget exceeded, 3 internal
 * verification failure.
 */
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "looksay/certify.hpp"
#include "looksay/chemistry.hpp"
#include "looksay/run_chemistry.hpp"
#include "looksay/serialize.hpp"
#include "looksay/spectral.hpp"

using namespace looksay;

namespace {

struct JobConfig {
    std::string rule = "stutter";
    unsigned j = 0;                   /* 0 = flag not supplied */
    unsigned base = 10;
    std::string seed = "0";
    std::size_t terms = 10;
    std::size_t pairs = 55;
    std::uint64_t max_digits = 0; /* 0 = per-command default */
    std::size_t max_elements = 5000;
    std::size_t max_iterations = 200;
    unsigned threads = 0;             /* 0 = worker-count environment variable */
    unsigned precision = 0;           /* extra printed digits of lambda; 0 = off */
    std::size_t display_threshold = 1000;
    std::string format = "text";
    std::string output;
    bool both = false;
    bool quick = false;
    unsigned from = 0, to = 0;
};

RuleSpec make_rule(const JobConfig& config) {
    if (config.base < kMinBase || config.base > kMaxBase)
        throw domain_error("base must lie in [2, 36]");
    if (config.rule == "standard") {
        if (config.j != 0) throw domain_error("--j applies only to rule jstutter");
        return RuleSpec::standard(config.base);
    }
    if (config.rule == "stutter") {
        if (config.j != 0) throw domain_error("--j applies only to rule jstutter");
        return RuleSpec::stutter(config.base);
    }
    if (config.rule == "jstutter") {
        if (config.j == 0) throw domain_error("rule jstutter requires --j");
        return RuleSpec::j_stutter(config.j, config.base);
    }
    throw domain_error("unknown rule '" + config.rule + "' (standard|stutter|jstutter)");
}

DigitString make_seed(const JobConfig& config) {
    return DigitString::from_text(config.seed, config.base);
}

std::uint64_t digit_budget(const JobConfig& config,
                           std::uint64_t fallback = kDefaultMaxDigits) {
    return config.max_digits == 0 ? fallback : config.max_digits;
}

DiscoveryLimits make_limits(const JobConfig& config) {
    DiscoveryLimits limits;
    limits.max_elements = config.max_elements;
    limits.max_digits = digit_budget(config, DiscoveryLimits{}.max_digits);
    limits.max_iterations = config.max_iterations;
    return limits;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_error("cannot open '" + path + "' for writing");
    out << content;
}

std::string format_lambda(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.10f", value);
    return buffer;
}

std::string display_term(const DigitString& s, std::size_t threshold) {
    if (s.size() <= threshold) return s.to_text();
    return "rle:" + run_notation(s);
}

/* Discovery, precise eigenvector, abundance ordering: the pipeline behind
 * every table. */
struct OrderedChemistry {
    Chemistry chem;
    SparseMatrix matrix;
    EigenResult eigen;
    std::vector<double> percent;
};

OrderedChemistry ordered_chemistry(const RuleSpec& rule, const DigitString& seed,
                                   const DiscoveryLimits& limits) {
    Chemistry raw = discover_elements(seed, rule, SplitPredicate::after_zero(), limits);
    SparseMatrix D0 = build_decay_matrix(raw);
    PreciseEigenResult precise = dominant_eigen_precise(D0);
    OrderedChemistry out{order_by_abundance(raw, precise.vector), SparseMatrix(), EigenResult{},
                         {}};
    out.matrix = build_decay_matrix(out.chem);
    out.eigen = dominant_eigen(out.matrix);
    out.percent = abundances(out.eigen);
    return out;
}

int cmd_seq(const JobConfig& config) {
    RuleSpec rule = make_rule(config);
    DigitString term = make_seed(config);
    if (config.terms == 0) throw domain_error("--terms must be at least 1");
    std::vector<std::string> lines{display_term(term, config.display_threshold)};
    bool truncated = false;
    for (std::size_t k = 1; k < config.terms; ++k) {
        try {
            term = say_step(term, rule, digit_budget(config));
        } catch (const budget_error& e) {
            std::string path = (config.output.empty() ? "seq" : config.output) + ".partial";
            std::string body;
            for (const std::string& line : lines) body += line + "\n";
            write_file(path, body);
            std::cerr << "error: " << e.what() << "; partial output in " << path << "\n";
            return 2;
        }
        lines.push_back(display_term(term, config.display_threshold));
        (void)truncated;
    }
    std::string body;
    if (config.format == "json") {
        nlohmann::json array = lines;
        body = array.dump(2) + "\n";
    } else {
        for (const std::string& line : lines) body += line + "\n";
    }
    if (config.output.empty())
        std::cout << body;
    else
        write_file(config.output, body);
    return 0;
}

/* Only the lengths matter, so hold a single term at a time; the default
 * budget is generous because the 55th stuttering term has 1.06e9 digits. */
std::string ratio_series(const RuleSpec& rule, const std::string& seed, std::size_t pairs,
                         std::uint64_t budget) {
    DigitString term = DigitString::from_text(seed, rule.base);
    std::vector<Ratio> ratios;
    for (std::size_t k = 0; k < pairs; ++k) {
        std::uint64_t before = term.size();
        term = say_step(term, rule, budget);
        std::uint64_t g = std::gcd(before, term.size());
        ratios.push_back(Ratio{term.size() / g, before / g});
    }
    return ratios_to_dat(ratios);
}

int cmd_ratios(const JobConfig& config) {
    if (config.pairs == 0) throw domain_error("--pairs must be at least 1");
    auto series = [&](const RuleSpec& rule) {
        return ratio_series(rule, config.seed, config.pairs, digit_budget(config, 2'000'000'000));
    };
    if (config.both) {
        std::string prefix = config.output.empty() ? "ratios" : config.output;
        write_file(prefix + "_stutter.dat", series(RuleSpec::stutter(config.base)));
        write_file(prefix + "_standard.dat", series(RuleSpec::standard(config.base)));
        std::cout << "wrote " << prefix << "_stutter.dat and " << prefix << "_standard.dat ("
                  << config.pairs << " rows each)\n";
        return 0;
    }
    std::string body = series(make_rule(config));
    if (config.output.empty())
        std::cout << body;
    else
        write_file(config.output, body);
    return 0;
}

int cmd_chem(const JobConfig& config) {
    RuleSpec rule = make_rule(config);
    std::string prefix = config.output.empty() ? "chem" : config.output;
    if (rule.kind == RuleKind::JStutter) {
        RunChemistry rc = discover_run_elements(make_seed(config), rule, true,
                                                make_limits(config));
        write_file(prefix + ".json", run_chemistry_to_json(rc));
        std::cout << "elements " << rc.size() << "\n";
        return 0;
    }
    OrderedChemistry oc = ordered_chemistry(rule, make_seed(config), make_limits(config));
    write_file(prefix + ".json", chemistry_to_json(oc.chem, config.display_threshold));
    write_file(prefix + ".csv",
               periodic_table_csv(
                   periodic_table_export(oc.chem, oc.percent, config.display_threshold)));
    write_file(prefix + ".dot", decay_graph_dot(oc.chem));
    std::size_t longest = 0;
    for (const Element& e : oc.chem.elements) longest = std::max(longest, e.string.size());
    std::cout << "elements " << oc.chem.elements.size() << "\n"
              << "exotics " << oc.chem.exotics.size() << "\n"
              << "longest " << longest << "\n";
    return 0;
}

int cmd_eigen(const JobConfig& config) {
    RuleSpec rule = make_rule(config);
    OrderedChemistry oc = ordered_chemistry(rule, make_seed(config), make_limits(config));
    char residual[32];
    std::snprintf(residual, sizeof residual, "%.2e", oc.eigen.residual);
    std::cout << "lambda " << format_lambda(oc.eigen.value) << "\n"
              << "residual " << residual << "\n"
              << "iterations " << oc.eigen.iterations << "\n";
    if (config.precision > 0) {
        PreciseEigenResult precise =
            dominant_eigen_precise(oc.matrix, 64 + 4 * config.precision);
        mp_exp_t exponent = 0;
        std::string digits = precise.value.get_str(exponent, 10, config.precision);
        std::cout << "lambda_precise 0." << digits << "e" << exponent << "\n";
    }
    std::string csv = "id,abundance_percent\n";
    char cell[32];
    for (std::size_t k = 0; k < oc.percent.size(); ++k) {
        std::snprintf(cell, sizeof cell, "%.8f", oc.percent[k]);
        csv += std::to_string(k + 1) + "," + cell + "\n";
    }
    if (config.output.empty())
        std::cout << csv;
    else
        write_file(config.output, csv);
    return 0;
}

int cmd_charpoly(const JobConfig& config) {
    RuleSpec rule = make_rule(config);
    Chemistry chem =
        discover_elements(make_seed(config), rule, SplitPredicate::after_zero(),
                          make_limits(config));
    SparseMatrix D = build_decay_matrix(chem);
    EigenResult eigen = dominant_eigen(D);
    IntPoly cp = char_poly(D, config.threads);
    auto [residual, stripped] = strip_trivial_factors(cp);
    GrowthDegreeResult growth = growth_degree(cp, eigen.value);

    std::string stem = config.output.empty() ? "charpoly" : config.output;
    if (stem.size() > 5 && stem.substr(stem.size() - 5) == ".json")
        stem = stem.substr(0, stem.size() - 5);
    write_file(stem + ".json", polynomial_to_json(cp));
    write_file(stem + ".cert.json", certification_to_json(growth));

    std::cout << "degree " << cp.degree() << "\n"
              << "power_of_x " << stripped.power_of_x << "\n";
    std::cout << "cyclotomic_orders";
    for (unsigned m : stripped.cyclotomic_orders) std::cout << ' ' << m;
    std::cout << "\nresidual_degree " << residual.degree() << "\n"
              << "residual_constant " << residual.coeff(0).get_str() << "\n";
    const char* status = growth.certification.status == Certification::Status::Irreducible
                             ? "irreducible"
                             : "inconclusive";
    std::cout << "growth_degree " << growth.degree << "\n"
              << "status " << status << "\n";
    return 0;
}

int cmd_sweep_bases(const JobConfig& config) {
    unsigned from = config.from == 0 ? 2 : config.from;
    unsigned to = config.to == 0 ? 5 : config.to;
    if (from < kMinBase || to > kMaxBase || from > to)
        throw domain_error("sweep range must satisfy 2 <= from <= to <= 36");
    std::cout << "# base lambda degree elements\n";
    for (unsigned base = from; base <= to; ++base) {
        RuleSpec rule = RuleSpec::stutter(base);
        Chemistry chem = discover_elements(DigitString::from_text("0", base), rule,
                                           SplitPredicate::after_zero(), make_limits(config));
        SparseMatrix D = build_decay_matrix(chem);
        EigenResult eigen = dominant_eigen(D);
        IntPoly cp = char_poly(D, config.threads);
        GrowthDegreeResult growth = growth_degree(cp, eigen.value);
        std::cout << base << ' ' << format_lambda(eigen.value) << ' ';
        if (growth.certification.status == Certification::Status::Irreducible)
            std::cout << growth.degree;
        else
            std::cout << "Inconclusive";
        std::cout << ' ' << chem.elements.size() << "\n";
    }
    return 0;
}

int cmd_sweep_j(const JobConfig& config) {
    unsigned from = config.from == 0 ? 4 : config.from;
    unsigned to = config.to == 0 ? 10 : config.to;
    if (from < 1 || from > to) throw domain_error("sweep range must satisfy 1 <= from <= to");
    std::cout << "# j lambda degree elements\n";
    for (unsigned j = from; j <= to; ++j) {
        RuleSpec rule = RuleSpec::j_stutter(j, config.base);
        RunChemistry rc = discover_run_elements(DigitString::from_text("0", config.base), rule,
                                                true, make_limits(config));
        SparseMatrix D = build_decay_matrix(rc);
        EigenResult eigen = dominant_eigen(D);
        IntPoly cp = char_poly(D, config.threads);
        GrowthDegreeResult growth = growth_degree(cp, eigen.value);
        std::cout << j << ' ' << format_lambda(eigen.value) << ' ';
        if (growth.certification.status == Certification::Status::Irreducible)
            std::cout << growth.degree;
        else
            std::cout << "Inconclusive";
        std::cout << ' ' << rc.size() << "\n";
    }
    return 0;
}

int cmd_audit(const JobConfig& config) {
    RuleSpec rule = make_rule(config);
    if (rule.kind == RuleKind::JStutter)
        throw domain_error("audit supports the standard and stutter rules only");
    DigitString seed = make_seed(config);
    Chemistry commons_chem =
        discover_elements(DigitString::from_text("0", config.base), rule,
                          SplitPredicate::after_zero(), make_limits(config));
    std::vector<DigitString> commons;
    for (const Element& e : commons_chem.elements) commons.push_back(e.string);

    TailReport tail = tail_analysis(seed, rule);
    /* the conjectured allowance: whatever the terminal chunk cycles through */
    AuditReport audit = audit_seed(seed, rule, SplitPredicate::after_zero(), commons, tail.cycle,
                                   config.terms, digit_budget(config));

    nlohmann::json out;
    out["seed"] = config.seed;
    out["rule"] = rule.name();
    out["base"] = config.base;
    out["first_cycle_term"] = tail.first_cycle_term;
    out["cycle"] = nlohmann::json::array();
    for (const DigitString& s : tail.cycle)
        out["cycle"].push_back(display_term(s, config.display_threshold));
    out["trail_length"] = tail.trail.size();
    out["conformant"] = audit.conformant;
    out["first_conformant_term"] = audit.first_conformant_term;
    out["terms_inspected"] = audit.terms_inspected;
    out["allowance_used"] = audit.allowance_used.size();
    out["violations"] = audit.violations.size();
    std::string body = out.dump(2) + "\n";
    if (config.output.empty())
        std::cout << body;
    else
        write_file(config.output, body);
    return 0;
}

int cmd_export(const JobConfig& config) {
    namespace fs = std::filesystem;
    std::string dir = config.output.empty() ? "export" : config.output;
    fs::create_directories(dir);
    auto path = [&](const std::string& name) { return dir + "/" + name; };
    auto note = [&](const std::string& name) { std::cout << "wrote " << path(name) << "\n"; };

    /* ratio series of the length-growth figure */
    for (const char* kind : {"stutter", "standard"}) {
        RuleSpec rule = std::string(kind) == "stutter" ? RuleSpec::stutter(10)
                                                       : RuleSpec::standard(10);
        write_file(path(std::string("ratios_") + kind + ".dat"),
                   ratio_series(rule, "0", config.pairs, digit_budget(config, 2'000'000'000)));
        note(std::string("ratios_") + kind + ".dat");
    }

    /* the base-10 chemistry, its table, graph, and abundances */
    OrderedChemistry oc =
        ordered_chemistry(RuleSpec::stutter(10), DigitString::from_text("0", 10), {});
    write_file(path("chem_b10.json"), chemistry_to_json(oc.chem));
    note("chem_b10.json");
    std::vector<TableRow> rows = periodic_table_export(oc.chem, oc.percent);
    write_file(path("periodic_table.csv"), periodic_table_csv(rows));
    note("periodic_table.csv");
    write_file(path("decay_graph.dot"), decay_graph_dot(oc.chem));
    note("decay_graph.dot");

    /* growth-rate tables */
    {
        std::ostringstream table;
        table << "# base lambda degree elements\n";
        for (unsigned base = 2; base <= (config.quick ? 5u : 10u); ++base) {
            Chemistry chem =
                discover_elements(DigitString::from_text("0", base), RuleSpec::stutter(base));
            SparseMatrix D = build_decay_matrix(chem);
            EigenResult eigen = dominant_eigen(D);
            IntPoly cp = char_poly(D, config.threads);
            GrowthDegreeResult growth = growth_degree(cp, eigen.value);
            table << base << ' ' << format_lambda(eigen.value) << ' ';
            if (growth.certification.status == Certification::Status::Irreducible)
                table << growth.degree;
            else
                table << "Inconclusive";
            table << ' ' << chem.elements.size() << "\n";
            if (base == 10) {
                write_file(path("charpoly_b10.json"), polynomial_to_json(cp));
                note("charpoly_b10.json");
                write_file(path("charpoly_b10.cert.json"), certification_to_json(growth));
                note("charpoly_b10.cert.json");
            }
        }
        write_file(path("growth_by_base.txt"), table.str());
        note("growth_by_base.txt");
    }
    {
        std::ostringstream table;
        table << "# j lambda degree elements\n";
        for (unsigned j = 4; j <= 10; ++j) {
            RunChemistry rc = discover_run_elements(DigitString::from_text("0", 10),
                                                    RuleSpec::j_stutter(j, 10), true);
            SparseMatrix D = build_decay_matrix(rc);
            EigenResult eigen = dominant_eigen(D);
            GrowthDegreeResult growth = growth_degree(char_poly(D, config.threads), eigen.value);
            table << j << ' ' << format_lambda(eigen.value) << ' ';
            if (growth.certification.status == Certification::Status::Irreducible)
                table << growth.degree;
            else
                table << "Inconclusive";
            table << ' ' << rc.size() << "\n";
        }
        write_file(path("growth_by_j.txt"), table.str());
        note("growth_by_j.txt");
    }

    /* end behavior of the ten digit seeds */
    for (unsigned d = 0; d <= 9; ++d) {
        JobConfig audit_config = config;
        audit_config.seed = std::string(1, static_cast<char>('0' + d));
        audit_config.terms = 40;
        audit_config.output = path("audit_seed" + audit_config.seed + ".json");
        if (int rc = cmd_audit(audit_config)) return rc;
        note("audit_seed" + audit_config.seed + ".json");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Look-and-say rewriting laboratory: sequences, chemistries, growth rates"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a TOML-style file (flags win)");

    JobConfig config;
    app.add_option("--rule", config.rule, "Rewrite rule: standard|stutter|jstutter")
        ->capture_default_str();
    app.add_option("--j", config.j, "Numeral/digit repetition count of rule jstutter");
    app.add_option("--base", config.base, "Numeral base, 2..36")->capture_default_str();
    app.add_option("--seed", config.seed, "Seed digit string")->capture_default_str();
    app.add_option("--threads", config.threads,
                   "Worker threads for exact charpolys (0: LOOKSAY_THREADS or all cores)");
    app.add_option("--max-digits", config.max_digits, "Digit budget per produced string");
    app.add_option("--max-elements", config.max_elements, "Element budget of discovery");
    app.add_option("--max-iterations", config.max_iterations, "Closure-round budget");
    app.add_option("--display-threshold", config.display_threshold,
                   "Strings longer than this print run-length encoded");
    app.add_option("--output,-o", config.output, "Output file, stem, or directory");

    CLI::App* seq = app.add_subcommand("seq", "Print the rewrite sequence of a seed");
    seq->add_option("--terms", config.terms, "Number of terms, seed included")
        ->capture_default_str();
    seq->add_option("--format", config.format, "text|json")->capture_default_str();

    CLI::App* ratios = app.add_subcommand("ratios", "Successive length ratios of a sequence");
    ratios->add_option("--pairs", config.pairs, "Number of ratios")->capture_default_str();
    ratios->add_flag("--both", config.both, "Write stutter and standard series files");

    app.add_subcommand("chem", "Discover the element chemistry; write JSON, CSV, DOT");

    CLI::App* eigen = app.add_subcommand("eigen", "Growth rate and abundance distribution");
    eigen->add_option("--precision", config.precision,
                      "Also print lambda to this many significant digits");

    app.add_subcommand("charpoly",
                       "Exact characteristic polynomial, factor report, certification");

    CLI::App* sweep_bases =
        app.add_subcommand("sweep-bases", "Growth table across numeral bases (stutter rule)");
    sweep_bases->add_option("--from", config.from, "First base (default 2)");
    sweep_bases->add_option("--to", config.to, "Last base (default 5)");

    CLI::App* sweep_j =
        app.add_subcommand("sweep-j", "Growth table across jstutter repetition counts");
    sweep_j->add_option("--from", config.from, "First j (default 4)");
    sweep_j->add_option("--to", config.to, "Last j (default 10)");

    CLI::App* audit =
        app.add_subcommand("audit", "Terminal-chunk analysis and conjecture conformance");
    audit->add_option("--terms", config.terms, "Terms to inspect")->default_val(40);

    CLI::App* exporter =
        app.add_subcommand("export", "Regenerate every table and data file into a directory");
    exporter->add_option("--pairs", config.pairs, "Ratio rows")->capture_default_str();
    exporter->add_flag("--quick", config.quick, "Skip the slow base rows (6..10)");

    /* global options may follow the subcommand name */
    for (CLI::App* sub : app.get_subcommands(
             [](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (seq->parsed()) return cmd_seq(config);
        if (ratios->parsed()) return cmd_ratios(config);
        if (app.get_subcommand("chem")->parsed()) return cmd_chem(config);
        if (eigen->parsed()) return cmd_eigen(config);
        if (app.get_subcommand("charpoly")->parsed()) return cmd_charpoly(config);
        if (sweep_bases->parsed()) return cmd_sweep_bases(config);
        if (sweep_j->parsed()) return cmd_sweep_j(config);
        if (audit->parsed()) return cmd_audit(config);
        if (exporter->parsed()) return cmd_export(config);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
