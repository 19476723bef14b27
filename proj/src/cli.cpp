#include "aenergy/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aenergy/bounds.hpp"
#include "aenergy/error.hpp"
#include "aenergy/graph_io.hpp"
#include "aenergy/harness.hpp"
#include "aenergy/report.hpp"
#include "aenergy/spectra.hpp"

namespace aenergy {

Graph resolve_graph_spec(std::string_view spec) {
    if (spec.starts_with("g6:")) return parse_graph6(spec.substr(3));
    if (spec.starts_with("file:")) {
        const std::string path(spec.substr(5));
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        std::istringstream words(text);
        std::string first, second;
        words >> first;
        // A lone token is graph6; anything else is read as an edge list.
        if (!first.empty() && !(words >> second)) return parse_graph6(first);
        return parse_edge_list(text);
    }
    return generate_family(parse_family_spec(spec));
}

namespace {

MatrixKind matrix_kind(const std::string& name, double alpha) {
    if (name == "adj") return MatrixKind::adjacency();
    if (name == "lap") return MatrixKind::laplacian();
    if (name == "slap") return MatrixKind::signless_laplacian();
    return MatrixKind::a_alpha(alpha);
}

const std::map<std::string, OutputFormat> kFormats{
    {"table", OutputFormat::Table}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

RandomSpec parse_random(const std::string& text) {
    // n,p,count,seed
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 4) throw Error(ErrorCode::ParseError, "--random expects n,p,count,seed");
    try {
        RandomSpec r{std::stoul(parts[0]), std::stod(parts[1]), std::stoul(parts[2]), std::stoull(parts[3])};
        if (!(r.p >= 0.0 && r.p <= 1.0)) throw Error(ErrorCode::ParseError, "--random probability outside [0,1]");
        return r;
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "--random expects n,p,count,seed, got '" + text + "'");
    }
}

std::size_t default_jobs() {
    if (const char* env = std::getenv("AENERGY_JOBS")) {
        try {
            return std::max<unsigned long>(1, std::stoul(env));
        } catch (const std::logic_error&) {
        }
    }
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"A_alpha spectra, energies and energy bounds of graphs"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    const std::string graph_help =
        "Graph: family spec (path:k, cycle:k, complete:a, bipartite:a,b, star:a, doublestar:a,b, wheel:k, "
        "ladder:k, book:k, friendship:k, comb:a,b), g6:<graph6>, or file:<path> (0-based edge list \"n m\" then "
        "\"u v\" lines, or a single graph6 line)";

    std::string graph_spec;
    double alpha = 0.5;
    std::string matrix = "aalpha";
    std::string format = "table";

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the sorted eigenvalues of a graph matrix");
    spectrum_cmd->add_option("graph", graph_spec, graph_help)->required();
    spectrum_cmd->add_option("--alpha", alpha, "alpha for the A_alpha matrix")->capture_default_str();
    spectrum_cmd->add_option("--matrix", matrix, "adj | lap | slap | aalpha")
        ->check(CLI::IsMember({"adj", "lap", "slap", "aalpha"}))
        ->capture_default_str();

    auto* energy_cmd = app.add_subcommand("energy", "Energy, mean shift and sigma-index");
    energy_cmd->add_option("graph", graph_spec, graph_help)->required();
    energy_cmd->add_option("--alpha", alpha, "alpha for the A_alpha matrix")->capture_default_str();
    energy_cmd->add_option("--kind", matrix, "adj | lap | slap | aalpha")
        ->check(CLI::IsMember({"adj", "lap", "slap", "aalpha"}))
        ->capture_default_str();
    energy_cmd->add_option("--format", format, "table | json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();

    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate every bound and relation at one alpha");
    bounds_cmd->add_option("graph", graph_spec, graph_help)->required();
    bounds_cmd->add_option("--alpha", alpha, "alpha in [0,1)")->capture_default_str();
    bounds_cmd->add_option("--format", format, "table | json | csv")->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();

    std::size_t max_n = 5;
    std::string alphas_text;
    std::vector<std::string> random_specs;
    bool standard_random = false;
    std::size_t jobs = default_jobs();
    auto* verify_cmd = app.add_subcommand("verify", "Sweep all bounds over a graph corpus");
    verify_cmd->add_option("--max-n", max_n, "exhaustive labeled enumeration up to this order (<= 7, 0 disables)")
        ->capture_default_str();
    verify_cmd->add_option("--alphas", alphas_text, "comma-separated alpha grid (default 0,0.05,...,0.95)");
    verify_cmd->add_option("--random", random_specs, "random G(n,p) batch n,p,count,seed (repeatable)");
    verify_cmd->add_flag("--standard-random", standard_random, "add the standard random corpus (n 8..20, p 0.2/0.5/0.8)");
    verify_cmd->add_option("--format", format, "table | json | csv")->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();
    verify_cmd->add_option("--jobs", jobs, "worker threads (default: AENERGY_JOBS or 1)")->check(CLI::PositiveNumber);

    std::string target;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "Recompute a published numerical table");
    reproduce_cmd->add_option("target", target, "table1 | remark32")->required()->check(CLI::IsMember({"table1", "remark32"}));
    reproduce_cmd->add_option("--format", format, "table | json | csv")->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();

    std::vector<std::string> argv_storage{"aenergy"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const OutputFormat fmt = kFormats.at(format);
        if (spectrum_cmd->parsed()) {
            Graph g = resolve_graph_spec(graph_spec);
            auto s = graph_spectrum(g, matrix_kind(matrix, alpha));
            out << format_values(s.values) << '\n';
            return kExitOk;
        }
        if (energy_cmd->parsed()) {
            Graph g = resolve_graph_spec(graph_spec);
            const auto kind = matrix_kind(matrix, alpha);
            auto r = energy(g, kind);
            std::optional<std::size_t> sigma;
            if (kind.tag == MatrixKind::Tag::AAlpha && alpha < 1.0 && g.order() > 0) sigma = sigma_index(r.spectrum, r.mean_shift);
            if (fmt == OutputFormat::Json) {
                nlohmann::json j{{"graph6", r.graph_id}, {"kind", to_string(kind)}, {"energy", r.energy},
                                 {"mean_shift", r.mean_shift}, {"spectrum", r.spectrum.values}};
                j["sigma"] = sigma ? nlohmann::json(*sigma) : nlohmann::json(nullptr);
                out << j.dump(2) << '\n';
            } else {
                out << "energy " << format_number(r.energy) << '\n';
                out << "mean_shift " << format_number(r.mean_shift) << '\n';
                out << "sigma " << (sigma ? std::to_string(*sigma) : std::string("n/a")) << '\n';
            }
            return kExitOk;
        }
        if (bounds_cmd->parsed()) {
            check_alpha_below_one(alpha);
            GraphProfile profile(resolve_graph_spec(graph_spec));
            EnergyInstance x(profile, alpha);
            auto all = evaluate_all(x);
            std::vector<Check> checks(all.begin(), all.end());
            out << render_checks(checks, x.energy(), fmt);
            for (const auto& c : checks)
                if (c.violated()) return kExitTheoremViolation;
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            CorpusSpec corpus;
            if (max_n > kMaxExhaustiveOrder) {
                throw Error(ErrorCode::CorpusTooLarge, "--max-n " + std::to_string(max_n) + " exceeds " +
                                                           std::to_string(kMaxExhaustiveOrder));
            }
            corpus.exhaustive_max_n = max_n;
            for (const auto& r : random_specs) corpus.random.push_back(parse_random(r));
            if (standard_random) {
                auto standard = standard_random_corpus();
                corpus.random.insert(corpus.random.end(), standard.begin(), standard.end());
            }
            SweepOptions options;
            options.jobs = jobs;
            if (!alphas_text.empty()) {
                options.alphas.clear();
                std::stringstream ss(alphas_text);
                for (std::string item; std::getline(ss, item, ',');) {
                    try {
                        options.alphas.push_back(std::stod(item));
                    } catch (const std::logic_error&) {
                        throw Error(ErrorCode::ParseError, "bad alpha '" + item + "'");
                    }
                }
            }
            auto report = sweep(corpus, options);
            out << render_report(report, fmt);
            return report.ok() ? kExitOk : kExitTheoremViolation;
        }
        if (reproduce_cmd->parsed()) {
            auto table = target == "table1" ? reproduce_table1() : reproduce_remark32();
            out << render_reproduction(table, fmt);
            if (!table.ok()) {
                for (const auto& m : table.mismatches()) err << m << '\n';
                return kExitReproductionMismatch;
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace aenergy
