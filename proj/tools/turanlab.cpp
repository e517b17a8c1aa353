// turanlab: workbench CLI for generalized Turan experiments at desk scale.
//
// Subcommands mirror the library modules one-to-one:
//   count      copies/injective/automorphism counts
//   ex         exact ex(n,H,F) by exhaustive scan, or multipartite-only
//   symmetrize Zykov symmetrization runs and the odd-cycle bipartization pipeline
//   distance   nearest complete multipartite / Turan graph
//   profile    stability profile + envelope CSVs
//   nice       nice-sequence verification
//
// Exit codes: 0 success, 2 parse failure, 3 ceiling refusal,
// 4 non-termination, 5 precondition violation.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turan/counting.hpp"
#include "turan/extremal.hpp"
#include "turan/graph.hpp"
#include "turan/graph_io.hpp"
#include "turan/numeric.hpp"
#include "turan/partition.hpp"
#include "turan/symmetrize.hpp"

namespace {

constexpr const char* kToolVersion = "turanlab/0.1.0";

using turan::Graph;
using turan::Rational;

struct Manifest {
    std::map<std::string, std::string> entries;

    void set(const std::string& key, const std::string& value) { entries[key] = value; }
    void set(const std::string& key, long long value) { entries[key] = std::to_string(value); }

    std::string text() const {
        std::ostringstream out;
        for (const auto& [k, v] : entries) out << k << "=" << v << "\n";
        return out.str();
    }
};

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::filesystem::path prepare_out_dir(const std::string& dir) {
    std::filesystem::path p(dir);
    std::filesystem::create_directories(p);
    return p;
}

std::optional<int> env_ceiling() {
    if (const char* v = std::getenv("TURANLAB_CEILING")) {
        try {
            return std::stoi(v);
        } catch (...) {
            throw turan::FormatError("TURANLAB_CEILING is not an integer", 0);
        }
    }
    return std::nullopt;
}

std::optional<int> effective_ceiling(int flag_value) {
    if (flag_value > 0) return flag_value;
    return env_ceiling();
}

// ---- count -------------------------------------------------------------

struct CountCmd {
    std::string pattern, host;

    int run() const {
        Graph H = turan::load_graph_argument(pattern);
        Graph G = turan::load_graph_argument(host);
        auto report = turan::count_report(H, G);
        std::cout << "copies=" << turan::to_decimal(report.copies)
                  << " inj=" << turan::to_decimal(report.injective)
                  << " aut=" << turan::to_decimal(report.automorphisms) << "\n";
        return 0;
    }
};

// ---- ex ----------------------------------------------------------------

struct ExCmd {
    int n = 0;
    std::string pattern, forbidden;
    int multipartite_only = 0;  // r, 0 = off
    int ceiling = 0;
    int jobs = 1;
    std::string out_dir = "turanlab-ex";

    int run() const {
        Graph H = turan::load_graph_argument(pattern);
        auto dir = prepare_out_dir(out_dir);
        Manifest manifest;
        manifest.set("command", "ex");
        manifest.set("param.n", n);
        manifest.set("param.pattern", pattern);
        manifest.set("param.jobs", jobs);
        manifest.set("seed", 0);
        manifest.set("tool_version", kToolVersion);

        if (multipartite_only > 0) {
            manifest.set("param.multipartite_only", multipartite_only);
            auto scan = turan::ex_multipartite(n, H, multipartite_only);
            std::ostringstream result;
            result << "value=" << turan::to_decimal(scan.value) << "\n"
                   << "best_composition=" << scan.best.str() << "\n"
                   << "compositions=" << scan.table.size() << "\n";
            std::ostringstream table;
            table << "composition,value\n";
            for (const auto& [comp, value] : scan.table)
                table << comp.str() << "," << turan::to_decimal(value) << "\n";
            write_file(dir / "result.txt", result.str());
            write_file(dir / "table.csv", table.str());
            write_file(dir / "manifest.txt", manifest.text());
            std::cout << "value=" << turan::to_decimal(scan.value)
                      << " best=" << scan.best.str() << "\n";
            return 0;
        }

        Graph F = turan::load_graph_argument(forbidden);
        auto ceil = effective_ceiling(ceiling);
        manifest.set("param.forbidden", forbidden);
        manifest.set("ceiling.enumeration",
                     ceil.value_or(turan::default_enumeration_ceiling({F})));
        auto result = turan::ex_exact(n, H, F, ceil, jobs);
        std::ostringstream text;
        text << "value=" << turan::to_decimal(result.value) << "\n"
             << "graphs_scanned=" << result.graphs_scanned << "\n"
             << "extremal_count=" << result.extremal.size() << "\n";
        std::ostringstream g6;
        for (const auto& line : result.extremal) g6 << line << "\n";
        write_file(dir / "result.txt", text.str());
        write_file(dir / "extremal.g6", g6.str());
        write_file(dir / "manifest.txt", manifest.text());
        std::cout << "value=" << turan::to_decimal(result.value)
                  << " extremal=" << result.extremal.size()
                  << " scanned=" << result.graphs_scanned << "\n";
        return 0;
    }
};

// ---- symmetrize ----------------------------------------------------------

struct SymmetrizeCmd {
    std::string host, pattern;
    int r = 0;
    int max_steps = 0;
    std::string mode = "zykov";
    int k = 0;
    std::string out_dir = "turanlab-symmetrize";

    int run() const {
        Graph G = turan::load_graph_argument(host);
        Graph H = turan::load_graph_argument(pattern);
        turan::SymmetrizationTrace trace;
        if (mode == "zykov") {
            trace = turan::zykov_run(G, H, r, max_steps);
        } else if (mode == "bipartize") {
            if (k < 1) throw CLI::ValidationError("--k is required in bipartize mode");
            trace = turan::bipartization_run(G, H, k, max_steps);
        } else {
            throw CLI::ValidationError("--mode must be zykov or bipartize");
        }
        auto dir = prepare_out_dir(out_dir);
        Manifest manifest;
        manifest.set("command", "symmetrize");
        manifest.set("param.host", host);
        manifest.set("param.pattern", pattern);
        manifest.set("param.r", r);
        manifest.set("param.mode", mode);
        manifest.set("param.k", k);
        manifest.set("param.max_steps", max_steps);
        manifest.set("seed", 0);
        manifest.set("tool_version", kToolVersion);
        write_file(dir / "trace.log", turan::trace_log(trace));
        write_file(dir / "final.g6", turan::graph6_encode(trace.final_graph) + "\n");
        write_file(dir / "manifest.txt", manifest.text());
        std::cout << "steps=" << trace.steps.size()
                  << " removed=" << trace.removed_edges.size()
                  << " outcome=" << turan::sym_outcome_name(trace.outcome)
                  << " final=" << turan::graph6_encode(trace.final_graph) << "\n";
        return trace.clean() ? 0 : 4;
    }
};

// ---- distance --------------------------------------------------------------

struct DistanceCmd {
    std::string host;
    int r = 0;
    std::string target = "multipartite";
    int exact_ceiling = turan::kDefaultPartitionCeiling;
    std::string mode = "auto";
    std::string out_dir;

    int run() const {
        Graph G = turan::load_graph_argument(host);
        turan::PartitionMode pmode;
        if (mode == "auto") {
            pmode = turan::PartitionMode::automatic;
        } else if (mode == "exact") {
            pmode = turan::PartitionMode::exact;
        } else if (mode == "heuristic") {
            pmode = turan::PartitionMode::heuristic;
        } else {
            throw CLI::ValidationError("--mode must be auto, exact or heuristic");
        }
        turan::DistanceResult res;
        if (target == "turan") {
            res = turan::nearest_turan(G, r, pmode, exact_ceiling);
        } else if (target == "multipartite") {
            res = turan::nearest_complete_multipartite(G, r, pmode, exact_ceiling);
        } else {
            throw CLI::ValidationError("--target must be turan or multipartite");
        }
        std::ostringstream line;
        line << "distance=" << res.distance << " deletions=" << res.deletions
             << " additions=" << res.additions << " partition=" << res.assignment.rgs()
             << " exact=" << (res.exact ? "true" : "false");
        std::cout << line.str() << "\n";
        if (!out_dir.empty()) {
            auto dir = prepare_out_dir(out_dir);
            Manifest manifest;
            manifest.set("command", "distance");
            manifest.set("param.host", host);
            manifest.set("param.r", r);
            manifest.set("param.target", target);
            manifest.set("param.mode", mode);
            manifest.set("ceiling.partition", exact_ceiling);
            manifest.set("seed", 0);
            manifest.set("tool_version", kToolVersion);
            write_file(dir / "record.txt", line.str() + "\n");
            write_file(dir / "manifest.txt", manifest.text());
        }
        return 0;
    }
};

// ---- profile ----------------------------------------------------------------

struct ProfileCmd {
    int n = 0;
    std::string pattern, forbidden;
    int r = 0;
    int ceiling = 0;
    int jobs = 1;
    std::string out_dir = "turanlab-profile";

    int run() const {
        Graph H = turan::load_graph_argument(pattern);
        Graph F = turan::load_graph_argument(forbidden);
        auto ceil = effective_ceiling(ceiling);
        auto profile = turan::stability_profile(n, H, F, r, ceil, jobs);
        auto env = turan::envelope(profile);

        std::ostringstream csv;
        csv << "graph6,copies,deficiency,dist_turan,dist_multipartite,"
               "deficiency_norm,dist_turan_norm,dist_multipartite_norm\n";
        turan::Int128 nh = static_cast<turan::Int128>(turan::pow_count(profile.n, profile.h));
        turan::Int128 n2 = static_cast<turan::Int128>(profile.n) * profile.n;
        for (const auto& row : profile.rows) {
            csv << row.canonical << "," << turan::to_decimal(row.copies) << ","
                << turan::to_decimal(row.deficiency) << "," << row.dist_turan << ","
                << row.dist_multipartite << ","
                << Rational(static_cast<turan::Int128>(row.deficiency), nh).str() << ","
                << Rational(row.dist_turan, n2).str() << ","
                << Rational(row.dist_multipartite, n2).str() << "\n";
        }
        std::ostringstream env_csv;
        env_csv << "deficiency,max_dist_turan,max_dist_multipartite\n";
        for (const auto& row : env)
            env_csv << turan::to_decimal(row.deficiency) << "," << row.max_dist_turan << ","
                    << row.max_dist_multipartite << "\n";

        auto dir = prepare_out_dir(out_dir);
        Manifest manifest;
        manifest.set("command", "profile");
        manifest.set("param.n", n);
        manifest.set("param.pattern", pattern);
        manifest.set("param.forbidden", forbidden);
        manifest.set("param.r", r);
        manifest.set("param.jobs", jobs);
        manifest.set("ceiling.enumeration",
                     ceil.value_or(turan::default_enumeration_ceiling({F})));
        manifest.set("ceiling.partition", n);
        manifest.set("seed", 0);
        manifest.set("tool_version", kToolVersion);
        write_file(dir / "profile.csv", csv.str());
        write_file(dir / "envelope.csv", env_csv.str());
        write_file(dir / "manifest.txt", manifest.text());
        std::cout << "rows=" << profile.rows.size()
                  << " ex=" << turan::to_decimal(profile.ex_value)
                  << " envelope_rows=" << env.size() << "\n";
        return 0;
    }
};

// ---- nice ---------------------------------------------------------------------

struct NiceCmd {
    std::vector<std::string> members;

    int run() const {
        turan::GraphFamily family;
        for (const auto& arg : members) family.push_back(turan::load_graph_argument(arg));
        auto report = turan::nice_check(family);
        std::cout << "nice=" << (report.is_nice ? "true" : "false") << "\n";
        for (const auto& w : report.witnesses)
            std::cout << "witness index=" << w.index << " u=" << w.u << " v=" << w.v
                      << " closure=" << turan::graph6_encode(w.closure) << "\n";
        return 0;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Turan stability workbench"};
    app.require_subcommand(1);

    CountCmd count_cmd;
    auto* count = app.add_subcommand("count", "count copies of a pattern in a host graph");
    count->add_option("pattern", count_cmd.pattern, "pattern graph (file or shortcut)")
        ->required();
    count->add_option("host", count_cmd.host, "host graph (file or shortcut)")->required();

    ExCmd ex_cmd;
    auto* ex = app.add_subcommand("ex", "exact ex(n,H,F) by exhaustive scan");
    ex->add_option("n", ex_cmd.n, "number of vertices")->required();
    ex->add_option("pattern", ex_cmd.pattern, "pattern graph H")->required();
    ex->add_option("forbidden", ex_cmd.forbidden, "forbidden graph F")->required();
    ex->add_option("--multipartite-only", ex_cmd.multipartite_only,
                   "scan complete multipartite graphs with at most r parts instead");
    ex->add_option("--ceiling", ex_cmd.ceiling, "enumeration ceiling override");
    ex->add_option("--jobs", ex_cmd.jobs, "worker threads for per-graph counting");
    ex->add_option("--out", ex_cmd.out_dir, "output directory");

    SymmetrizeCmd sym_cmd;
    auto* sym = app.add_subcommand("symmetrize", "run the symmetrization engine");
    sym->add_option("host", sym_cmd.host, "input graph G")->required();
    sym->add_option("pattern", sym_cmd.pattern, "pattern graph H")->required();
    sym->add_option("r", sym_cmd.r, "forbidden clique size minus one (zykov mode)")->required();
    sym->add_option("--max-steps", sym_cmd.max_steps, "step budget (default n^3)");
    sym->add_option("--mode", sym_cmd.mode, "zykov or bipartize");
    sym->add_option("--k", sym_cmd.k, "odd-cycle parameter for bipartize mode");
    sym->add_option("--out", sym_cmd.out_dir, "output directory");

    DistanceCmd dist_cmd;
    auto* dist = app.add_subcommand("distance", "edit distance to a multipartite target");
    dist->add_option("host", dist_cmd.host, "input graph G")->required();
    dist->add_option("r", dist_cmd.r, "number of parts")->required();
    dist->add_option("--target", dist_cmd.target, "turan or multipartite");
    dist->add_option("--exact-ceiling", dist_cmd.exact_ceiling, "exact search size limit");
    dist->add_option("--mode", dist_cmd.mode, "auto, exact or heuristic");
    dist->add_option("--out", dist_cmd.out_dir, "optional output directory");

    ProfileCmd profile_cmd;
    auto* profile = app.add_subcommand("profile", "stability profile over all F-free graphs");
    profile->add_option("n", profile_cmd.n, "number of vertices")->required();
    profile->add_option("pattern", profile_cmd.pattern, "pattern graph H")->required();
    profile->add_option("forbidden", profile_cmd.forbidden, "forbidden graph F")->required();
    profile->add_option("r", profile_cmd.r, "number of parts of the target")->required();
    profile->add_option("--ceiling", profile_cmd.ceiling, "enumeration ceiling override");
    profile->add_option("--jobs", profile_cmd.jobs, "worker threads");
    profile->add_option("--out", profile_cmd.out_dir, "output directory");

    NiceCmd nice_cmd;
    auto* nice = app.add_subcommand("nice", "verify that an ordered family is nice");
    nice->add_option("graphs", nice_cmd.members, "family members in order")
        ->required()
        ->expected(-1);

    auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        app.parse(argc, argv);
        if (count->parsed()) code = count_cmd.run();
        if (ex->parsed()) code = ex_cmd.run();
        if (sym->parsed()) code = sym_cmd.run();
        if (dist->parsed()) code = dist_cmd.run();
        if (profile->parsed()) code = profile_cmd.run();
        if (nice->parsed()) code = nice_cmd.run();
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const turan::FormatError& e) {
        std::cerr << "parse error: " << e.what() << " (byte " << e.offset << ")\n";
        return 2;
    } catch (const turan::CeilingError& e) {
        std::cerr << "ceiling refusal: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    std::cerr << "wall_time=" << elapsed.count() << "s\n";
    return code;
}
