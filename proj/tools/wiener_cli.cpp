// Command line front end: invariant reports on graph6 input, filtered
// enumeration and extremal search, orientation and signature searches, the
// vertex-deletion ledger, critical-exponent scans, and the claims registry.
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wiener/claims.hpp"
#include "wiener/io_formats.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
    wiener::ShardSpec shard{};
    wiener::TauConvention tau = wiener::TauConvention::self;
    std::uint64_t seed = 20250614;
    std::string format = "json";
    std::string out_file;
    int threads = 1;
};

auto read_text(const std::string& path) -> std::string {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

struct InputGraph {
    std::string line;
    wiener::Graph graph;
};

auto read_graphs(const std::string& path) -> std::vector<InputGraph> {
    std::istringstream in(read_text(path));
    std::vector<InputGraph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty() || line[0] == '#') continue;
        try {
            out.push_back({line, wiener::graph6_decode(line)});
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.empty()) throw std::runtime_error("no graph6 lines in " + (path == "-" ? "stdin" : path));
    return out;
}

auto split_list(const std::string& text) -> std::vector<std::string> {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

auto csv_escape(const std::string& s) -> std::string {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    return out + "\"";
}

auto csv_cell(const ordered_json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

auto render(const std::vector<ordered_json>& rows, const std::string& format) -> std::string {
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) arr.push_back(row);
        return arr.dump(2) + "\n";
    }
    if (rows.empty()) return "";
    std::string out;
    std::vector<std::string> keys;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) keys.push_back(it.key());
    for (size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + csv_escape(keys[i]);
    out += '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < keys.size(); ++i)
            out += (i ? "," : "") +
                   csv_escape(row.contains(keys[i]) ? csv_cell(row.at(keys[i])) : std::string{});
        out += '\n';
    }
    return out;
}

void deliver(const std::string& text, const GlobalOpts& g) {
    if (g.out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out_file);
    if (!out) throw std::runtime_error("cannot write " + g.out_file);
    out << text;
}

auto parse_shards(const std::string& text) -> wiener::ShardSpec {
    int index = 0, count = 1;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%d/%d%c", &index, &count, &tail) != 2 || index < 0 ||
        count < 1 || index >= count)
        throw std::runtime_error("--shards wants i/N with 0 <= i < N, got '" + text + "'");
    return {index, count};
}

void run_invariant(const std::string& path, const std::string& which, const GlobalOpts& g) {
    using namespace wiener;
    auto tokens = split_list(which);
    if (tokens.empty()) tokens = {"w"};
    for (const auto& t : tokens)
        if (t != "w" && t != "sz" && t != "dim" && t != "ecc" && t != "blocks")
            throw std::runtime_error("unknown invariant '" + t + "' (choose from w,sz,dim,ecc,blocks)");
    std::vector<ordered_json> rows;
    int index = 0;
    for (const auto& [line, graph] : read_graphs(path)) {
        ordered_json row{{"index", index++}, {"graph6", line}, {"n", graph.n},
                         {"m", graph.edge_count()}, {"connected", is_connected(graph)}};
        bool conn = row["connected"].get<bool>();
        for (const auto& t : tokens) {
            if (!conn) {
                row[t] = nullptr;
                continue;
            }
            if (t == "w") row["w"] = wiener_index(graph);
            if (t == "sz") row["sz"] = szeged(graph);
            if (t == "dim") row["dim"] = wiener_dimension(graph);
            if (t == "ecc") {
                auto prof = eccentricity_profile(graph);
                row["ecc"] = ordered_json{{"radius", prof.radius}, {"diameter", prof.diameter}};
            }
            if (t == "blocks") {
                auto dec = blocks(graph);
                row["blocks"] = ordered_json{{"count", dec.block_count()},
                                             {"cut_vertices", std::popcount(dec.cut_vertices)},
                                             {"all_complete", dec.all_blocks_complete},
                                             {"cactus", dec.is_cactus}};
            }
        }
        rows.push_back(std::move(row));
    }
    deliver(render(rows, g.format), g);
}

auto parse_filter(const std::string& text) -> wiener::ClassFilter {
    wiener::ClassFilter filter;
    for (const auto& item : split_list(text)) {
        auto eq = item.find('=');
        std::string key = item.substr(0, eq);
        if (key == "tree") {
            if (eq != std::string::npos) throw std::runtime_error("filter key 'tree' takes no value");
            filter.trees_only = true;
            continue;
        }
        if (eq == std::string::npos)
            throw std::runtime_error("filter item '" + item + "' wants key=value");
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::runtime_error("filter item '" + item + "' has a non-integer value");
        }
        if (key == "max-degree")
            filter.max_degree = value;
        else if (key == "regular")
            filter.regular = value;
        else if (key == "min-connectivity")
            filter.min_connectivity = value;
        else if (key == "diameter")
            filter.diameter = value;
        else if (key == "radius")
            filter.radius = value;
        else if (key == "blocks")
            filter.block_count = value;
        else if (key == "max-circumference")
            filter.max_circumference = value;
        else
            throw std::runtime_error(
                "unknown filter key '" + key +
                "' (choose from max-degree, regular, tree, min-connectivity, diameter, radius, "
                "blocks, max-circumference)");
    }
    return filter;
}

void run_enumerate(int n, const std::string& filter_text, bool emit,
                   const std::vector<std::string>& extremal, const GlobalOpts& g) {
    using namespace wiener;
    ClassFilter filter = parse_filter(filter_text);
    if (emit && !extremal.empty())
        throw std::runtime_error("--emit and --extremal exclude each other");
    if (!extremal.empty()) {
        const std::string& objective = extremal[0];
        const std::string& direction = extremal[1];
        std::function<long long(const Graph&)> fn;
        if (objective == "w")
            fn = [](const Graph& gr) { return static_cast<long long>(wiener_index(gr)); };
        else if (objective == "sz")
            fn = [](const Graph& gr) { return static_cast<long long>(szeged(gr)); };
        else
            throw std::runtime_error("unknown objective '" + objective + "' (choose from w, sz)");
        auto rec = extremal_search(connected_stream(n, filter, g.shard), objective, fn, direction);
        ordered_json attaining = ordered_json::array();
        for (const auto& form : rec.attaining)
            attaining.push_back(graph6_encode(form_to_graph(form)));
        ordered_json row{{"objective", rec.objective}, {"direction", rec.direction},
                         {"n", n},
                         {"filter", filter_text},
                         {"shard", std::to_string(g.shard.index) + "/" + std::to_string(g.shard.count)},
                         {"best", rec.best},
                         {"visited", rec.visited},
                         {"attaining", std::move(attaining)}};
        deliver(render({row}, g.format), g);
        return;
    }
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!g.out_file.empty()) {
        file.open(g.out_file);
        if (!file) throw std::runtime_error("cannot write " + g.out_file);
        out = &file;
    }
    std::uint64_t count = connected_graphs(
        n, filter, [&](const Graph& gr) { *out << graph6_encode(gr) << '\n'; }, g.shard);
    std::cerr << count << " classes\n";
}

void run_orient(const std::string& path, const std::string& mode, int colors,
                const std::string& report, const std::string& filter_name, const GlobalOpts& g) {
    using namespace wiener;
    auto tokens = split_list(report);
    if (tokens.empty()) tokens = {"max", "min"};
    for (const auto& t : tokens)
        if (t != "max" && t != "min" && t != "argset")
            throw std::runtime_error("unknown report item '" + t + "' (choose from max,min,argset)");
    auto has = [&](const char* t) {
        return std::find(tokens.begin(), tokens.end(), t) != tokens.end();
    };
    OrientationFilter filter = OrientationFilter::all;
    if (filter_name == "acyclic") filter = OrientationFilter::acyclic;
    if (filter_name == "strong") filter = OrientationFilter::strong;
    std::vector<ordered_json> rows;
    int index = 0;
    for (const auto& [line, graph] : read_graphs(path)) {
        ordered_json row{{"index", index++}, {"graph6", line}, {"n", graph.n},
                         {"m", graph.edge_count()}};
        if (mode == "exhaustive") {
            auto search = orientation_extremes(graph, filter, g.shard.index, g.shard.count);
            row["visited"] = search.visited;
            row["accepted"] = search.accepted;
            if (has("max")) row["max"] = search.accepted ? ordered_json(search.max_value) : nullptr;
            if (has("min")) row["min"] = search.accepted ? ordered_json(search.min_value) : nullptr;
            if (has("argset")) {
                row["argmax"] = search.argmax;
                row["argmin"] = search.argmin;
            }
        } else {
            int k = colors > 0 ? colors : chromatic_number(graph);
            long long best_max = LLONG_MIN, best_min = LLONG_MAX;
            std::uint64_t at_max = 0, at_min = 0;
            auto scan = coloring_induced_orientations(graph, k, [&](const Digraph& d) {
                long long w = digraph_wiener(d);
                if (w > best_max) {
                    best_max = w;
                    at_max = 0;
                }
                at_max += w == best_max;
                if (w < best_min) {
                    best_min = w;
                    at_min = 0;
                }
                at_min += w == best_min;
            });
            row["colors"] = k;
            row["colorings"] = scan.colorings;
            row["below_chromatic"] = scan.below_chromatic;
            if (has("max")) row["max"] = scan.colorings ? ordered_json(best_max) : nullptr;
            if (has("min")) row["min"] = scan.colorings ? ordered_json(best_min) : nullptr;
            if (has("argset")) {
                row["argmax_colorings"] = at_max;
                row["argmin_colorings"] = at_min;
            }
        }
        rows.push_back(std::move(row));
    }
    deliver(render(rows, g.format), g);
}

void run_signed(const std::string& path, const std::string& mode, int k, const GlobalOpts& g) {
    using namespace wiener;
    auto named = read_sjson(read_text(path));
    const SignedGraph& sg = named.graph;
    ordered_json row{{"name", named.name}, {"n", sg.base.n}, {"m", sg.base.edge_count()}};
    if (mode == "wiener") {
        row["signed_wiener"] = signed_wiener(sg);
    } else if (mode == "minimize") {
        auto search = min_signed_wiener(sg.base);
        row["min_signed_wiener"] = search.value;
        row["signatures"] = search.argmin.size();
        std::string signs;
        for (int e = 0; e < sg.base.edge_count(); ++e)
            signs += search.argmin.front() >> e & 1 ? '-' : '+';
        row["example_signs"] = signs;
    } else {
        row["k"] = k;
        row["status"] = describe(k_canceling_status(sg, k));
    }
    deliver(render({row}, g.format), g);
}

void run_soltes(const std::string& path, const GlobalOpts& g) {
    using namespace wiener;
    std::vector<ordered_json> rows;
    int index = 0;
    for (const auto& [line, graph] : read_graphs(path)) {
        ordered_json row{{"index", index++}, {"graph6", line}, {"n", graph.n},
                         {"connected", is_connected(graph)}};
        if (row["connected"].get<bool>()) {
            auto prof = soltes_profile(graph);
            row["soltes_count"] = prof.soltes_count;
            row["proportion"] =
                std::to_string(prof.proportion_num) + "/" + std::to_string(prof.proportion_den);
            row["is_soltes"] = prof.is_soltes_graph;
            ordered_json deltas = ordered_json::array();
            for (const auto& d : prof.delta)
                deltas.push_back(d ? ordered_json(*d) : ordered_json(nullptr));
            row["deltas"] = std::move(deltas);
        }
        rows.push_back(std::move(row));
    }
    deliver(render(rows, g.format), g);
}

void run_alpha(const std::string& path, const std::string& scan, const GlobalOpts& g) {
    using namespace wiener;
    double lo = 0, hi = 4;
    int steps = 4096;
    char tail = 0;
    if (std::sscanf(scan.c_str(), "%lf,%lf,%d%c", &lo, &hi, &steps, &tail) != 3)
        throw std::runtime_error("--scan wants lo,hi,steps, got '" + scan + "'");
    std::vector<ordered_json> rows;
    int index = 0;
    for (const auto& [line, graph] : read_graphs(path)) {
        ordered_json row{{"index", index++}, {"graph6", line}, {"n", graph.n},
                         {"connected", is_connected(graph)}};
        if (row["connected"].get<bool>()) {
            auto crit = critical_exponents(graph, lo, hi, steps);
            row["roots"] = crit.roots;
            row["degenerate"] = crit.degenerate;
        }
        rows.push_back(std::move(row));
    }
    deliver(render(rows, g.format), g);
}

auto run_verify(const std::string& id, std::optional<int> n, const GlobalOpts& g) -> int {
    using namespace wiener;
    std::vector<const Claim*> todo;
    if (id == "all") {
        for (const auto& claim : claim_registry()) todo.push_back(&claim);
    } else if (const Claim* claim = find_claim(id)) {
        todo.push_back(claim);
    } else {
        std::cerr << "unknown claim id '" << id << "'; available claims:\n";
        for (const auto& claim : claim_registry())
            std::cerr << "  " << claim.id << "  (" << claim.title
                      << (claim.gate ? "" : ", evidence report") << ")\n";
        return 2;
    }
    if (g.shard.count != 1) std::cerr << "note: claims always run unsharded\n";
    ClaimOptions opts;
    opts.n = n;
    opts.tau = g.tau;
    opts.seed = g.seed;
    std::vector<ClaimResult> results(todo.size());
    int workers = std::min<int>(std::max(g.threads, 1), static_cast<int>(todo.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < todo.size(); ++i) results[i] = run_claim(*todo[i], opts);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (size_t i = next++; i < todo.size(); i = next++)
                    results[i] = run_claim(*todo[i], opts);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<ordered_json> rows;
    bool failed = false;
    for (size_t i = 0; i < todo.size(); ++i) {
        const auto& res = results[i];
        failed |= res.status == ClaimStatus::fail;
        rows.push_back(ordered_json{{"id", res.id},
                                    {"criterion", todo[i]->criterion},
                                    {"gate", todo[i]->gate},
                                    {"status", claim_status_name(res.status)},
                                    {"expected", res.expected},
                                    {"observed", res.observed},
                                    {"counterexample", res.counterexample},
                                    {"conventions", res.conventions},
                                    {"seconds", res.seconds}});
    }
    deliver(render(rows, g.format), g);
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener index toolkit: invariants, extremal search, and recorded-claim checks"};
    app.require_subcommand(1);

    GlobalOpts g;
    std::string shards = "0/1", tau = "self";
    app.add_option("--shards", shards, "shard as index/count, e.g. 2/8")->capture_default_str();
    app.add_option("--tau-convention", tau, "reachability count convention")
        ->check(CLI::IsMember({"self", "noself"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--out", g.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out-file", g.out_file, "write the report here instead of stdout");
    app.add_option("--threads", g.threads, "parallel workers for verify")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* inv = app.add_subcommand("invariant", "invariants of graph6 inputs");
    std::string inv_path, inv_which = "w";
    inv->add_option("file", inv_path, "graph6 file, - for stdin")->required();
    inv->add_option("--which", inv_which, "comma list from w,sz,dim,ecc,blocks")
        ->capture_default_str();
    inv->fallthrough();

    auto* enu = app.add_subcommand("enumerate", "stream connected graph classes");
    int enu_n = 0;
    std::string enu_filter;
    bool enu_emit = false;
    std::vector<std::string> enu_extremal;
    enu->add_option("--n", enu_n, "vertex count")->required();
    enu->add_option("--filter", enu_filter,
                    "comma list of max-degree=K, regular=K, tree, min-connectivity=K, "
                    "diameter=K, radius=K, blocks=K, max-circumference=K");
    enu->add_flag("--emit", enu_emit, "print one graph6 line per class (default)");
    enu->add_option("--extremal", enu_extremal, "objective (w|sz) and direction (min|max)")
        ->expected(2);
    enu->fallthrough();

    auto* ori = app.add_subcommand("orient", "orientation searches over graph6 inputs");
    std::string ori_path, ori_mode = "exhaustive", ori_report = "max,min", ori_filter = "all";
    int ori_colors = 0;
    ori->add_option("file", ori_path, "graph6 file, - for stdin")->required();
    ori->add_option("--mode", ori_mode, "search space")
        ->check(CLI::IsMember({"exhaustive", "coloring"}))
        ->capture_default_str();
    ori->add_option("--colors", ori_colors, "palette size for coloring mode, 0 = chromatic number");
    ori->add_option("--report", ori_report, "comma list from max,min,argset")->capture_default_str();
    ori->add_option("--filter", ori_filter, "orientation family in exhaustive mode")
        ->check(CLI::IsMember({"all", "acyclic", "strong"}))
        ->capture_default_str();
    ori->fallthrough();

    auto* sgn = app.add_subcommand("signed", "signed Wiener index tools on an sjson input");
    std::string sgn_path, sgn_mode = "wiener";
    int sgn_k = 1;
    sgn->add_option("file", sgn_path, "sjson file, - for stdin")->required();
    sgn->add_option("--mode", sgn_mode, "computation")
        ->check(CLI::IsMember({"wiener", "minimize", "canceling"}))
        ->capture_default_str();
    sgn->add_option("--k", sgn_k, "depth for canceling mode")->capture_default_str();
    sgn->fallthrough();

    auto* sol = app.add_subcommand("soltes", "vertex-deletion Wiener ledger of graph6 inputs");
    std::string sol_path;
    sol->add_option("file", sol_path, "graph6 file, - for stdin")->required();
    sol->fallthrough();

    auto* alp = app.add_subcommand("alpha", "critical exponents of the Szeged-Wiener gap");
    std::string alp_path, alp_scan = "0,4,4096";
    alp->add_option("file", alp_path, "graph6 file, - for stdin")->required();
    alp->add_option("--scan", alp_scan, "lo,hi,steps grid")->capture_default_str();
    alp->fallthrough();

    auto* ver = app.add_subcommand("verify", "run recorded claims");
    std::string ver_id;
    bool ver_json = false;
    std::optional<int> ver_n;
    ver->add_option("claim", ver_id, "claim id or 'all'")->required();
    ver->add_flag("--json", ver_json, "alias for --out json");
    ver->add_option("--n", ver_n, "override the size parameter of claims that take one");
    ver->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        g.shard = parse_shards(shards);
        g.tau = tau == "self" ? wiener::TauConvention::self : wiener::TauConvention::noself;
        if (ver_json) g.format = "json";
        if (inv->parsed()) run_invariant(inv_path, inv_which, g);
        if (enu->parsed()) run_enumerate(enu_n, enu_filter, enu_emit, enu_extremal, g);
        if (ori->parsed()) run_orient(ori_path, ori_mode, ori_colors, ori_report, ori_filter, g);
        if (sgn->parsed()) run_signed(sgn_path, sgn_mode, sgn_k, g);
        if (sol->parsed()) run_soltes(sol_path, g);
        if (alp->parsed()) run_alpha(alp_path, alp_scan, g);
        if (ver->parsed()) return run_verify(ver_id, ver_n, g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
