// Command-line front end: analyze a single circulant graph, enumerate the
// integral ones of a given order, reproduce the degree-vs-maximum-order
// table, build the extremal diameter families, search perfect state
// transfer and report walk periods. Output is deterministic JSON (default)
// or CSV.
//
// Exit codes: 0 success, 1 internal verification failure (a proved bound
// failed to hold, which means a bug or a counterexample), 2 invalid input.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "circulant/circulant.hpp"

namespace {

using namespace circulant;

// A proved invariant failed at runtime; distinct from bad user input.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int64> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument(what + ": cannot parse integer '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(what + ": empty list");
    return out;
}

struct Options {
    std::string format = "json";
    std::uint64_t seed = 0;
    int jobs = 1;
};

void require_json_only(const Options& opt, const std::string& command) {
    if (opt.format != "json")
        throw std::invalid_argument(command + ": only json output is supported");
}

// ---- analyze ----------------------------------------------------------

struct AnalyzeArgs {
    int64 n = 0;
    std::string symbol_csv;
    std::string divisors_csv;
    bool want_pst = false;
    int64 max_q = 0;  // 0 -> default 2n
};

void run_analyze(const AnalyzeArgs& args, const Options& opt) {
    require_json_only(opt, "analyze");
    if (args.symbol_csv.empty() == args.divisors_csv.empty())
        throw std::invalid_argument("analyze: give exactly one of --symbol or --divisors");

    CirculantGraph G = args.symbol_csv.empty()
        ? from_divisor_set(DivisorSet::create(
              args.n, parse_int_list(args.divisors_csv, "divisors")))
        : CirculantGraph::create(args.n, parse_int_list(args.symbol_csv, "symbol"));

    const int64 n = G.order();
    const std::optional<DivisorSet> D = integrality_decomposition(G);
    const bool connected = is_connected(G);
    const int64 degree = G.degree();

    const Spectrum spec = D ? eigenvalues_exact(*D) : eigenvalues_numeric(G);

    // Three bipartiteness verdicts; the spectral and divisor tests are only
    // defined for connected graphs (divisor test additionally needs
    // integrality).
    const bool bip_bfs = is_bipartite_bfs(G);
    std::optional<bool> bip_spectral;
    if (connected && degree >= 1) bip_spectral = is_bipartite_spectral(spec, degree);
    std::optional<int64> bip_ell0;
    std::optional<bool> bip_divisor;
    if (connected && D) {
        bip_ell0 = bipartite_divisor_test(*D);
        bip_divisor = bip_ell0.has_value();
    }
    if (bip_spectral && *bip_spectral != bip_bfs)
        throw VerificationError("bipartite verdicts disagree: bfs vs spectral");
    if (bip_divisor && degree >= 1 && *bip_divisor != bip_bfs)
        throw VerificationError("bipartite verdicts disagree: bfs vs divisor criterion");

    // Diameter; bound bracketing only applies to connected integral graphs.
    const Diameter diam = diameter_sumset(G);
    std::optional<DiameterReport> diam_report;
    if (connected && D) {
        diam_report = check_diameter_bounds(*D);
        if (!diam_report->lower_ok || !diam_report->upper_ok)
            throw VerificationError("diameter bound t <= diam <= 2t+1 violated");
    }

    EvolutionReport evo;
    evo.n = n;
    evo.divisor_set = D;
    evo.periodic = D.has_value();
    if (D) {
        evo.period = period(*D).angle;
        if (args.want_pst) {
            const int64 max_q = args.max_q > 0 ? args.max_q : 2 * n;
            evo.pst = pst_search(*D, max_q);
        }
    }

    std::optional<bool> ratio;
    if (spec.is_exact()) {
        ratio = ratio_condition(spec);
    } else if (distinct_eigenvalue_count(spec) >= 2) {
        ratio = ratio_condition_numeric(spec, 1000000, opt.seed);
    }

    std::string out = "{\"bipartite\":";
    out += bip_bfs ? "true" : "false";
    out += ",\"bipartite_checks\":{\"bfs\":";
    out += bip_bfs ? "true" : "false";
    out += ",\"divisor\":";
    out += bip_divisor ? (*bip_divisor ? "true" : "false") : "null";
    out += ",\"ell0\":";
    out += bip_ell0 ? std::to_string(*bip_ell0) : "null";
    out += ",\"spectral\":";
    out += bip_spectral ? (*bip_spectral ? "true" : "false") : "null";
    out += "},\"connected\":";
    out += connected ? "true" : "false";
    out += ",\"degree\":" + std::to_string(degree);
    out += ",\"diameter\":";
    if (diam_report)
        out += to_json(*diam_report);
    else
        out += "{\"D\":null,\"diameter\":" + to_json(diam) +
               ",\"lower_ok\":null,\"n\":" + std::to_string(n) +
               ",\"t\":null,\"upper_ok\":null}";
    out += ",\"divisor_set\":";
    out += D ? json_int_array(D->members) : "null";
    out += ",\"evolution\":" + to_json(evo);
    out += ",\"n\":" + std::to_string(n);
    out += ",\"ratio_condition\":";
    out += ratio ? (*ratio ? "true" : "false") : "null";
    out += ",\"spectrum\":" + to_json(spec);
    out += ",\"symbol\":" + json_int_array(G.symbol.members);
    out += "}";
    std::cout << out << "\n";
}

// ---- table ------------------------------------------------------------

void run_table(int64 kmax, int64 cap, const Options& opt) {
    const auto table = extremal_table(kmax, cap, opt.jobs);
    if (opt.format == "csv") {
        std::string out = "# max order of a connected integral circulant graph per degree; "
                          "search cap=" + std::to_string(cap) + "\n";
        out += "k,N,n,D,cap\n";
        for (const auto& rec : table) {
            if (rec) {
                out += std::to_string(rec->degree_k) + "," + std::to_string(rec->max_order) +
                       "," + std::to_string(rec->witness.n) + ",";
                for (std::size_t i = 0; i < rec->witness.members.size(); ++i) {
                    if (i) out += ";";
                    out += std::to_string(rec->witness.members[i]);
                }
                out += "," + std::to_string(rec->cap) + "\n";
            }
        }
        std::cout << out;
        return;
    }
    std::string out = "{\"cap\":" + std::to_string(cap) + ",\"kmax\":" + std::to_string(kmax) +
                      ",\"rows\":[";
    bool first = true;
    for (const auto& rec : table) {
        if (!first) out += ",";
        first = false;
        out += rec ? to_json(*rec) : "null";
    }
    out += "]}";
    std::cout << out << "\n";
}

// ---- family -----------------------------------------------------------

void run_family(const std::string& kind, const std::string& primes_csv, const Options& opt) {
    require_json_only(opt, "family");
    const std::vector<int64> primes = parse_int_list(primes_csv, "primes");
    DivisorSet D;
    int64 expected = 0;
    if (kind == "diam2") {
        D = family_diam2(primes);
        expected = 2;
    } else if (kind == "diam2rp1") {
        D = family_diam_2r_plus_1(primes);
        expected = 2 * static_cast<int64>(primes.size()) + 1;
    } else {
        throw std::invalid_argument("family: kind must be diam2 or diam2rp1");
    }
    const DiameterReport report = check_diameter_bounds(D);
    if (!report.diameter.finite || report.diameter.value != expected ||
        !report.lower_ok || !report.upper_ok)
        throw VerificationError("family " + kind + ": expected diameter " +
                                std::to_string(expected) + ", computed " +
                                to_json(report.diameter));
    std::cout << to_json(report) << "\n";
}

// ---- enumerate --------------------------------------------------------

void run_enumerate(int64 n, const Options& opt) {
    const auto sets = enumerate_integral(n);
    if (opt.format == "csv") {
        std::string out = "D,degree\n";
        for (const auto& D : sets) {
            for (std::size_t i = 0; i < D.members.size(); ++i) {
                if (i) out += ";";
                out += std::to_string(D.members[i]);
            }
            out += "," + std::to_string(D.degree()) + "\n";
        }
        std::cout << out;
        return;
    }
    std::string out = "{\"n\":" + std::to_string(n) + ",\"sets\":[";
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i) out += ",";
        out += "{\"D\":" + json_int_array(sets[i].members) +
               ",\"degree\":" + std::to_string(sets[i].degree()) + "}";
    }
    out += "]}";
    std::cout << out << "\n";
}

// ---- pst / period -----------------------------------------------------

void run_pst(int64 n, const std::string& divisors_csv, int64 max_q, const Options& opt) {
    require_json_only(opt, "pst");
    const DivisorSet D = DivisorSet::create(n, parse_int_list(divisors_csv, "divisors"));
    EvolutionReport evo;
    evo.n = n;
    evo.divisor_set = D;
    evo.periodic = true;
    evo.period = period(D).angle;
    evo.pst = pst_search(D, max_q > 0 ? max_q : 2 * n);
    std::cout << to_json(evo) << "\n";
}

void run_period(int64 n, const std::string& divisors_csv, const Options& opt) {
    require_json_only(opt, "period");
    const DivisorSet D = DivisorSet::create(n, parse_int_list(divisors_csv, "divisors"));
    const PeriodResult result = period(D);
    std::string out = "{\"D\":" + json_int_array(D.members);
    out += ",\"degenerate\":";
    out += result.degenerate ? "true" : "false";
    out += ",\"n\":" + std::to_string(n);
    out += ",\"period\":" + to_json(result.angle);
    out += "}";
    std::cout << out << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integral circulant graph toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for sampled heuristics")->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker threads for sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "full report on one circulant graph");
    analyze->add_option("--n", analyze_args.n, "number of vertices")->required();
    analyze->add_option("--symbol", analyze_args.symbol_csv,
                        "comma-separated symbol, closed under negation mod n");
    analyze->add_option("--divisors", analyze_args.divisors_csv,
                        "comma-separated divisor set (d | n, d <= n/2)");
    analyze->add_flag("--pst", analyze_args.want_pst, "also search perfect state transfer");
    analyze->add_option("--max-q", analyze_args.max_q,
                        "PST search denominator bound (default 2n)");

    int64 table_kmax = 11, table_cap = 500;
    auto* table = app.add_subcommand("table", "max order per degree (extremal search)");
    table->add_option("--kmax", table_kmax, "largest degree")->required();
    table->add_option("--cap", table_cap, "order search ceiling")->capture_default_str();

    std::string family_kind, family_primes;
    auto* family = app.add_subcommand("family", "extremal diameter family instance");
    family->add_option("kind", family_kind, "diam2 or diam2rp1")->required();
    family->add_option("--primes", family_primes, "comma-separated distinct odd primes")
        ->required();

    int64 enum_n = 0;
    auto* enumerate = app.add_subcommand("enumerate",
                                         "connected integral circulants of order n");
    enumerate->add_option("--n", enum_n, "number of vertices")->required();

    int64 pst_n = 0, pst_max_q = 0;
    std::string pst_divisors;
    auto* pst = app.add_subcommand("pst", "perfect state transfer search");
    pst->add_option("--n", pst_n, "number of vertices")->required();
    pst->add_option("--divisors", pst_divisors, "divisor set of an integral graph")
        ->required();
    pst->add_option("--max-q", pst_max_q, "denominator bound (default 2n)");

    int64 period_n = 0;
    std::string period_divisors;
    auto* period_cmd = app.add_subcommand("period", "walk period of an integral graph");
    period_cmd->add_option("--n", period_n, "number of vertices")->required();
    period_cmd->add_option("--divisors", period_divisors, "divisor set of an integral graph")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) run_analyze(analyze_args, opt);
        else if (*table) run_table(table_kmax, table_cap, opt);
        else if (*family) run_family(family_kind, family_primes, opt);
        else if (*enumerate) run_enumerate(enum_n, opt);
        else if (*pst) run_pst(pst_n, pst_divisors, pst_max_q, opt);
        else if (*period_cmd) run_period(period_n, period_divisors, opt);
    } catch (const VerificationError& e) {
        std::cout << "{\"error\":\"verification_failure\",\"detail\":\"" << e.what()
                  << "\"}\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
