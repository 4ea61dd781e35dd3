#include "qgrowth/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qgrowth/congruence.hpp"
#include "qgrowth/errors.hpp"
#include "qgrowth/eta.hpp"
#include "qgrowth/growth.hpp"
#include "qgrowth/json_io.hpp"
#include "qgrowth/kernels.hpp"
#include "qgrowth/operators.hpp"
#include "qgrowth/oracles.hpp"
#include "qgrowth/treneer.hpp"

namespace qgrowth::cli {

namespace {

// Verdict of a command: 0 ok, 1 a claim was violated.
using Action = std::function<int()>;

struct SeriesSource {
    std::string id;
    std::string load;
    std::string mod;

    CoefficientRing ring() const
    {
        return mod.empty() ? CoefficientRing::integers() : CoefficientRing::residues(parse_integer(mod));
    }

    QSeries build(std::int64_t prec) const
    {
        if (!load.empty()) {
            std::ifstream in(load);
            if (!in)
                throw invalid_argument("cannot read " + load);
            std::stringstream buf;
            buf << in.rdbuf();
            QSeries s = series_from_json(buf.str());
            return mod.empty() ? s : reduce_mod(s, parse_integer(mod));
        }
        if (id.empty())
            throw invalid_argument("need --series or --load");
        return named_series(id, prec, ring());
    }
};

void save_series(const QSeries& s, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw invalid_argument("cannot write " + path);
    out << series_to_json(s) << '\n';
}

void print_series(std::ostream& out, const QSeries& s, bool as_json)
{
    if (as_json) {
        out << series_to_json(s) << '\n';
        return;
    }
    out << "grain " << s.grain() << " offset " << s.offset() << " prec " << s.prec() << " ring "
        << s.ring().describe() << '\n';
    bool first = true;
    for (const auto& c : s.coeffs()) {
        out << (first ? "" : " ") << c.get_str();
        first = false;
    }
    out << '\n';
}

std::string family_id(const std::string& family, std::int64_t M, std::int64_t k)
{
    if (family == "wreath-alt" || family == "f")
        return family + ":" + std::to_string(M);
    if (family == "f-term")
        return family + ":" + std::to_string(M) + ":" + std::to_string(k);
    return family;
}

QSeries family_series(const std::string& family, std::int64_t M, std::int64_t k, std::int64_t prec,
                      const CoefficientRing& ring)
{
    if (family == "alt-convolution")
        return alt_series_convolution(prec, ring);
    if (family == "alt-eta")
        return alt_series_eta(prec, ring);
    if (family == "f-from-terms")
        return f_M_from_terms(M, prec, ring);
    return named_series(family_id(family, M, k), prec, ring);
}

int print_report(std::ostream& out, const CongruenceReport& r, bool as_json)
{
    if (as_json) {
        out << report_to_json(r) << '\n';
    } else {
        const auto& c = r.claim;
        out << (r.verdict == Verdict::holds_on_range ? "holds" : "violated") << ": a(" << c.A << " n + " << c.B
            << ") = 0 mod " << c.modulus.get_str() << " for n <= " << c.n_max;
        if (c.filter) {
            out << " with n mod " << c.filter->modulus << " in {";
            for (std::size_t i = 0; i < c.filter->residues.size(); ++i)
                out << (i ? "," : "") << c.filter->residues[i];
            out << "}";
        }
        out << " (" << r.verified_count << " checked)\n";
        for (const auto& v : r.violations)
            out << "  n = " << v.n << ": " << v.coefficient.get_str() << '\n';
    }
    return r.verdict == Verdict::holds_on_range ? 0 : 1;
}

int print_reproduction(std::ostream& out, const ReproductionReport& r)
{
    for (const auto& c : r.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << r.name << "(" << c.id << ") " << c.identity;
        if (!c.detail.empty())
            out << " [" << c.detail << "]";
        out << '\n';
    }
    return r.all_passed() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-series toolkit for conjugacy growth series and their congruences", "qgrowth"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    std::optional<std::int64_t> prec_override;
    app.add_flag("--json", as_json, "Machine-readable output");
    app.add_option("--prec", prec_override, "Precision override (exclusive exponent bound)");

    Action action;

    // series
    auto* series_cmd = app.add_subcommand("series", "Build a named series (default prec 50)");
    std::string family = "partition";
    std::int64_t M = 1, k = 0;
    SeriesSource series_src;
    std::string save_path;
    series_cmd->add_option("--family", family,
                           "partition | even-parts | alt | alt-convolution | alt-eta | wreath-alt | f | "
                           "f-from-terms | f-term");
    series_cmd->add_option("--M", M, "Wreath parameter M");
    series_cmd->add_option("--k", k, "Term index k for f-term");
    series_cmd->add_option("--series", series_src.id, "Series identifier, overrides --family");
    series_cmd->add_option("--load", series_src.load, "Read a JSON series");
    series_cmd->add_option("--mod", series_src.mod, "Reduce coefficients mod m");
    series_cmd->add_option("--save", save_path, "Write the series as JSON");
    series_cmd->callback([&] {
        action = [&] {
            const std::int64_t prec = prec_override.value_or(50);
            QSeries s = (!series_src.id.empty() || !series_src.load.empty())
                            ? series_src.build(prec)
                            : family_series(family, M, k, prec, series_src.ring());
            if (!save_path.empty())
                save_series(s, save_path);
            print_series(out, s, as_json);
            return 0;
        };
    });

    // eta
    auto* eta_cmd = app.add_subcommand("eta", "Expand an eta quotient and check modularity (default prec 20)");
    std::string expr;
    std::optional<std::int64_t> level;
    std::string eta_mod;
    eta_cmd->add_option("expression", expr, "e.g. \"eta(1)^24 * eta(25)^-1\"")->required();
    eta_cmd->add_option("--level", level, "Level N (default lcm of the deltas)");
    eta_cmd->add_option("--mod", eta_mod, "Reduce coefficients mod m");
    eta_cmd->callback([&] {
        action = [&] {
            const EtaQuotient eq = EtaQuotient::parse(expr, level);
            const auto ring = eta_mod.empty() ? CoefficientRing::integers()
                                              : CoefficientRing::residues(parse_integer(eta_mod));
            const std::int64_t prec = prec_override.value_or(20);
            const auto verdict = modularity_check(eq);
            QSeries s = eq.order_at_infinity_24() % 24 == 0 ? eta_quotient_integral(eq, prec, ring)
                                                            : eta_quotient_expansion(eq, 24 * prec, ring);
            if (!as_json) {
                out << eq.to_string() << " level " << eq.level() << " weight " << verdict.weight_times_2 << "/2\n";
                out << "sum delta r = 0 mod 24: " << (verdict.cond_A ? "yes" : "no")
                    << ", sum (N/delta) r = 0 mod 24: " << (verdict.cond_B ? "yes" : "no")
                    << ", character top " << verdict.character_top.get_str() << '\n';
            }
            print_series(out, s, as_json);
            return 0;
        };
    });

    // op
    auto* op_cmd = app.add_subcommand("op", "Apply an operator to a series (input default prec 100)");
    std::string op_name;
    SeriesSource op_src;
    std::int64_t t = 0, A = 1, B = 0, weight = 0, D = 1, op_level = 1, r = 1;
    op_cmd->add_option("operator", op_name, "U | V | hecke | hecke-half | extract | treneer")->required();
    op_cmd->add_option("--series", op_src.id, "Series identifier");
    op_cmd->add_option("--load", op_src.load, "Read a JSON series");
    op_cmd->add_option("--mod", op_src.mod, "Work mod m");
    op_cmd->add_option("--t,--p", t, "Operator index (U_t, V_t, prime for Hecke and projection)");
    op_cmd->add_option("--A", A, "Progression step for extract");
    op_cmd->add_option("--B", B, "Progression start for extract");
    op_cmd->add_option("--weight", weight, "Weight k (integer) or lambda (half-integral)");
    op_cmd->add_option("--D", D, "Character (D / .)");
    op_cmd->add_option("--level", op_level, "Level");
    op_cmd->add_option("--r", r, "Projection exponent r");
    op_cmd->add_option("--save", save_path, "Write the result as JSON");
    op_cmd->callback([&] {
        action = [&] {
            const QSeries f = op_src.build(prec_override.value_or(100));
            QSeries g = f;
            if (op_name == "U")
                g = u_op(f, t);
            else if (op_name == "V")
                g = v_op(f, t);
            else if (op_name == "hecke")
                g = hecke_integer(f, t, HeckeParams::integer_weight(weight, D, op_level));
            else if (op_name == "hecke-half")
                g = hecke_half_integral(f, t, HeckeParams::half_integral(weight, D, op_level));
            else if (op_name == "extract")
                g = progression_extract(f, A, B);
            else if (op_name == "treneer")
                g = treneer_projection(f, t, r);
            else
                throw invalid_argument("unknown operator '" + op_name + "'");
            if (!save_path.empty())
                save_series(g, save_path);
            print_series(out, g, as_json);
            return 0;
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a(A n + B) = 0 mod m for n <= nmax");
    SeriesSource verify_src;
    std::string verify_mod;
    std::int64_t vA = 1, vB = 0, n_max = 0;
    std::int64_t filter_mod = 0;
    std::vector<std::int64_t> filter_residues;
    verify_cmd->add_option("--series", verify_src.id, "Series identifier");
    verify_cmd->add_option("--load", verify_src.load, "Read a JSON series");
    verify_cmd->add_option("--A", vA, "Progression step")->required();
    verify_cmd->add_option("--B", vB, "Progression start")->required();
    verify_cmd->add_option("--mod", verify_mod, "Modulus m")->required();
    verify_cmd->add_option("--nmax", n_max, "Largest n")->required();
    verify_cmd->add_option("--filter-mod", filter_mod, "Only n in given classes mod this");
    verify_cmd->add_option("--filter-residues", filter_residues, "Classes for --filter-mod");
    verify_cmd->callback([&] {
        action = [&] {
            CongruenceClaim claim{verify_src.id.empty() ? verify_src.load : verify_src.id, vA, vB,
                                  parse_integer(verify_mod), n_max, std::nullopt};
            if (filter_mod > 0)
                claim.filter = ResidueFilter{filter_mod, filter_residues};
            // Coefficients mod m suffice; build the series over Z/m directly.
            verify_src.mod = verify_mod;
            const QSeries s = verify_src.build(prec_override.value_or(vA * n_max + vB + 1));
            return print_report(out, verify_congruence(claim, s), as_json);
        };
    });

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "List progressions (A, B) with a(A n + B) = 0 mod m for n <= nmax");
    SeriesSource scan_src;
    std::string scan_mod;
    std::int64_t A_max = 1, scan_n_max = 0;
    int workers = 0;
    scan_cmd->add_option("--series", scan_src.id, "Series identifier");
    scan_cmd->add_option("--load", scan_src.load, "Read a JSON series");
    scan_cmd->add_option("--mod", scan_mod, "Modulus m")->required();
    scan_cmd->add_option("--A-max", A_max, "Largest step")->required();
    scan_cmd->add_option("--nmax", scan_n_max, "Largest n")->required();
    scan_cmd->add_option("--workers", workers, "Worker threads (default: all)");
    scan_cmd->callback([&] {
        action = [&] {
            scan_src.mod = scan_mod;
            const QSeries s = scan_src.build(prec_override.value_or(A_max * scan_n_max + A_max));
            const int w = workers > 0 ? workers : kernels::max_threads();
            const auto claims = scan_congruences(s, parse_integer(scan_mod), A_max, scan_n_max, w,
                                                 scan_src.id.empty() ? scan_src.load : scan_src.id);
            if (as_json) {
                out << claims_to_json(claims) << '\n';
            } else {
                for (const auto& c : claims)
                    out << "A = " << c.A << ", B = " << c.B << '\n';
                out << claims.size() << " candidate progression(s)\n";
            }
            return 0;
        };
    });

    // reproduce
    auto* repro_cmd = app.add_subcommand("reproduce", "Run a built-in worked example");
    std::string which;
    repro_cmd->add_option("name", which, "mod7-chain | wreath-mod5 | wreath-mod49")
        ->required()
        ->check(CLI::IsMember({"mod7-chain", "wreath-mod5", "wreath-mod49"}));
    repro_cmd->callback([&] {
        action = [&] {
            if (which == "mod7-chain")
                return print_reproduction(out, reproduce_mod7_chain());
            return print_reproduction(out, reproduce_wreath_congruence(which == "wreath-mod5" ? 5 : 7));
        };
    });

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force counts");
    std::string oracle_kind;
    std::int64_t oracle_n = 10;
    bool even_only = false;
    int degree = 4;
    bool alternating = false;
    std::string gens = "all-transpositions";
    oracle_cmd->add_option("kind", oracle_kind, "partitions | bfs")
        ->required()
        ->check(CLI::IsMember({"partitions", "bfs"}));
    oracle_cmd->add_option("--n", oracle_n, "Largest n (partitions) or word length (bfs)");
    oracle_cmd->add_flag("--even", even_only, "Only partitions with an even number of parts");
    oracle_cmd->add_option("--degree", degree, "Degree of Sym or Alt");
    oracle_cmd->add_flag("--alt", alternating, "Alternating group");
    oracle_cmd->add_option("--generators", gens, "coxeter | all-transpositions | consecutive-3-cycles | all-3-cycles")
        ->check(CLI::IsMember({"coxeter", "all-transpositions", "consecutive-3-cycles", "all-3-cycles"}));
    oracle_cmd->callback([&] {
        action = [&] {
            std::vector<std::string> values;
            if (oracle_kind == "partitions") {
                const auto filter = even_only ? PartitionFilter::even_part_count : PartitionFilter::all;
                for (std::int64_t n = 0; n <= oracle_n; ++n)
                    values.push_back(oracle_partition_count(n, filter).get_str());
            } else {
                GroupSpec g;
                g.degree = degree;
                g.flavor = alternating ? GroupFlavor::alternating : GroupFlavor::symmetric;
                g.generators = gens == "coxeter"                ? GeneratorSet::coxeter
                               : gens == "all-transpositions"   ? GeneratorSet::all_transpositions
                               : gens == "consecutive-3-cycles" ? GeneratorSet::consecutive_3_cycles
                                                                : GeneratorSet::all_3_cycles;
                for (auto v : oracle_bfs_conjugacy_growth(g, oracle_n))
                    values.push_back(std::to_string(v));
            }
            if (as_json) {
                out << '[';
                for (std::size_t i = 0; i < values.size(); ++i)
                    out << (i ? "," : "") << '"' << values[i] << '"';
                out << "]\n";
            } else {
                for (std::size_t i = 0; i < values.size(); ++i)
                    out << i << ' ' << values[i] << '\n';
            }
            return 0;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "qgrowth: " << e.what() << '\n';
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const error& e) {
        err << "qgrowth: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "qgrowth: " << e.what() << '\n';
        return 2;
    }
}

} // namespace qgrowth::cli
