// Command-line front end. Talks to the core exclusively through the
// extern-C surface in bmp.h.
//
// Exit codes: 0 success, 1 certificate/conjecture violation, 2 usage or
// input error.

#include <bmp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using nlohmann::json;

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ViolationFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(const std::string& msg) { throw CliError(msg); }

[[noreturn]] void fail_api() { fail(bmp_last_error()); }

struct GraphHandle {
    bmp_graph* g = nullptr;
    GraphHandle() = default;
    explicit GraphHandle(bmp_graph* g) : g(g) {}
    GraphHandle(GraphHandle&& o) noexcept : g(o.g) { o.g = nullptr; }
    GraphHandle& operator=(GraphHandle&& o) noexcept {
        std::swap(g, o.g);
        return *this;
    }
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
    ~GraphHandle() { bmp_graph_free(g); }
};

std::string take_string(char* s) {
    std::string out = s ? s : "";
    bmp_string_free(s);
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Shared input options: a generator description or a file.
struct GraphSource {
    std::string gen;
    std::string input;
    std::string format = "edgelist";

    void attach(CLI::App* cmd) {
        cmd->add_option("--gen", gen, "generate a graph, e.g. cycle:5, grid:3,4, fig3c");
        cmd->add_option("--input", input, "read a graph from FILE (\"-\" for stdin)");
        cmd->add_option("--format", format, "input format: edgelist|graph6")
            ->check(CLI::IsMember({"edgelist", "graph6"}));
    }

    GraphHandle load() const {
        if (gen.empty() == input.empty())
            fail("exactly one of --gen and --input is required");
        bmp_graph* g = nullptr;
        if (!gen.empty()) {
            if (bmp_graph_generate(gen.c_str(), &g) != BMP_OK) fail_api();
            return GraphHandle(g);
        }
        std::string text = read_input(input);
        if (format == "graph6") {
            // First non-empty line.
            std::istringstream ss(text);
            std::string line;
            while (std::getline(ss, line) && line.empty()) {}
            if (bmp_graph_from_graph6(line.c_str(), &g) != BMP_OK) fail_api();
        } else {
            if (bmp_graph_from_edgelist(text.c_str(), &g) != BMP_OK) fail_api();
        }
        return GraphHandle(g);
    }
};

int env_cap() {
    if (const char* s = std::getenv("BMP_CAP")) {
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            fail(std::string("BMP_CAP is not an integer: ") + s);
        }
    }
    return 0; // library default
}

json solve_json(const bmp_graph* g, bool mp, int cap) {
    char* out = nullptr;
    bmp_status s = mp ? bmp_solve_mp(g, cap, &out) : bmp_solve_gb(g, cap, &out);
    if (s != BMP_OK) fail_api();
    return json::parse(take_string(out));
}

json approx_json(const bmp_graph* g) {
    char* out = nullptr;
    if (bmp_approx_multipacking(g, &out) != BMP_OK) fail_api();
    return json::parse(take_string(out));
}

std::string graph6_of(const bmp_graph* g) {
    char* out = nullptr;
    if (bmp_graph_to_graph6(g, &out) != BMP_OK) fail_api();
    return take_string(out);
}

void print_solve_result(const json& r, bool as_json) {
    if (as_json) {
        std::cout << r.dump() << "\n";
        return;
    }
    std::cout << r["parameter"].get<std::string>() << " = " << r["value"]
              << "   witness " << r["witness"].dump() << "   (" << r["nodes"]
              << " nodes, " << r["millis"] << " ms)\n";
}

// --- bounds --------------------------------------------------------------

int guarantee_floor(int d, int r) {
    int num = d + 2 * r - 9;
    if (num <= 0) return 1;
    return std::max(1, (num + 5) / 6);
}

struct Check {
    std::string name;
    long lhs, rhs;
    bool pass;
};

int cmd_bounds(const GraphSource& src, int cap, bool as_json) {
    auto gh = src.load();
    int radius, diameter;
    if (bmp_graph_metrics(gh.g, &radius, &diameter, nullptr, nullptr, nullptr) != BMP_OK)
        fail_api();
    const int n = bmp_graph_order(gh.g);
    const int effective_cap = cap > 0 ? cap : 24;

    json report;
    report["n"] = n;
    report["radius"] = radius;
    report["diameter"] = diameter;

    std::vector<Check> checks;
    bool exact = n <= effective_cap;
    int conjecture_violations = 0;
    if (exact) {
        json mp_r = solve_json(gh.g, true, cap);
        json gb_r = solve_json(gh.g, false, cap);
        int mp = mp_r["value"], gb = gb_r["value"];
        report["mp"] = {{"exact", mp}, {"witness", mp_r["witness"]}};
        report["gb"] = {{"exact", gb}, {"witness", gb_r["witness"]}};

        checks.push_back({"duality mp<=gb", mp, gb, mp <= gb});
        checks.push_back({"theorem1 gb<=2mp+3", gb, 2 * mp + 3, gb <= 2 * mp + 3});
        checks.push_back({"conjecture1 gb<=2mp", gb, 2 * mp, gb <= 2 * mp});
        if (mp >= 2)
            checks.push_back({"hartnell-mynhardt gb<=3mp-2", gb, 3 * mp - 2, gb <= 3 * mp - 2});
        if (mp == 3) checks.push_back({"mp3 gb<=6", gb, 6, gb <= 6});
        if (mp >= 4) checks.push_back({"mp4 gb<=3mp-4", gb, 3 * mp - 4, gb <= 3 * mp - 4});
        checks.push_back({"diam-rad mp>=ceil(d/6+r/3-3/2)", mp, guarantee_floor(diameter, radius),
                          mp >= guarantee_floor(diameter, radius)});
        checks.push_back({"radius-chain gb<=rad", gb, radius, gb <= radius});
        for (const auto& c : checks)
            if (!c.pass && c.name.starts_with("conjecture1")) ++conjecture_violations;
    } else {
        // Interval mode: verified approx packing bounds mp from below,
        // the radius bounds gb (and hence mp) from above.
        json ap = approx_json(gh.g);
        int lower = ap["size"];
        report["mp"] = {{"lower", lower}, {"upper", radius}};
        report["gb"] = {{"lower", lower}, {"upper", radius}};
        report["approx"] = ap;
        // pass = not refuted by the interval endpoints.
        checks.push_back({"duality mp<=gb", lower, radius, lower <= radius});
        checks.push_back({"theorem1 gb<=2mp+3", lower, 2L * radius + 3, lower <= 2L * radius + 3});
        checks.push_back({"diam-rad mp>=ceil(d/6+r/3-3/2)", lower,
                          guarantee_floor(diameter, radius),
                          lower >= guarantee_floor(diameter, radius)});
    }
    report["mode"] = exact ? "exact" : "interval";
    json jchecks = json::array();
    for (const auto& c : checks)
        jchecks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    report["checks"] = jchecks;

    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "n=" << n << " radius=" << radius << " diameter=" << diameter << "\n";
        if (exact) {
            std::cout << "mp = " << report["mp"]["exact"] << "   gb = " << report["gb"]["exact"]
                      << "\n";
        } else {
            std::cout << "mp in [" << report["mp"]["lower"] << ", " << report["mp"]["upper"]
                      << "]   gb in [" << report["gb"]["lower"] << ", " << report["gb"]["upper"]
                      << "]   (cap " << effective_cap << " exceeded, interval mode)\n";
        }
        for (const auto& c : checks)
            std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name << "   (" << c.lhs
                      << " vs " << c.rhs << ")\n";
    }
    return conjecture_violations > 0 ? 1 : 0;
}

// --- sweep ---------------------------------------------------------------

struct SweepRecord {
    long id = 0;
    std::string g6;
    bool skipped = false;
    std::string skip_reason;
    int mp = 0, gb = 0;
    long millis = 0;
    json mp_witness, gb_witness;
};

double ratio_of(const SweepRecord& r) {
    return r.mp > 0 ? static_cast<double>(r.gb) / r.mp : 0.0;
}

std::string status_of(const SweepRecord& r) {
    if (r.gb > 2 * r.mp) return "violation";
    if (r.gb == 2 * r.mp) return "tight";
    return "ok";
}

SweepRecord sweep_one(long id, const std::string& g6, int cap) {
    SweepRecord rec;
    rec.id = id;
    rec.g6 = g6;
    bmp_graph* g = nullptr;
    if (bmp_graph_from_graph6(g6.c_str(), &g) != BMP_OK) {
        rec.skipped = true;
        rec.skip_reason = bmp_last_error();
        return rec;
    }
    GraphHandle gh(g);
    char* out = nullptr;
    auto start = std::chrono::steady_clock::now();
    if (bmp_solve_mp(gh.g, cap, &out) != BMP_OK) {
        rec.skipped = true;
        rec.skip_reason = bmp_last_error();
        return rec;
    }
    json mp_r = json::parse(take_string(out));
    if (bmp_solve_gb(gh.g, cap, &out) != BMP_OK) {
        rec.skipped = true;
        rec.skip_reason = bmp_last_error();
        return rec;
    }
    json gb_r = json::parse(take_string(out));
    rec.mp = mp_r["value"];
    rec.gb = gb_r["value"];
    rec.mp_witness = mp_r["witness"];
    rec.gb_witness = gb_r["witness"];
    rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return rec;
}

// All labeled graphs on n vertices (edge subsets), connected only.
std::vector<std::string> enumerate_connected(int n) {
    if (n < 1 || n > 6) fail("--enum supports 1 <= n <= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<std::string> out;
    for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<int> endpoints;
        for (size_t b = 0; b < pairs.size(); ++b) {
            if (mask & (1u << b)) {
                endpoints.push_back(pairs[b].first);
                endpoints.push_back(pairs[b].second);
            }
        }
        bmp_graph* g = nullptr;
        if (bmp_graph_create(n, endpoints.data(), static_cast<int>(endpoints.size() / 2), &g) !=
            BMP_OK)
            fail_api();
        GraphHandle gh(g);
        if (bmp_graph_component_count(gh.g) == 1) out.push_back(graph6_of(gh.g));
    }
    return out;
}

int cmd_sweep(const std::string& input, int enum_n, const std::string& gnp_spec, uint64_t seed,
              int cap, int jobs, bool as_json) {
    std::vector<std::string> inputs;
    int sources = (!input.empty()) + (enum_n > 0) + (!gnp_spec.empty());
    if (sources != 1) fail("sweep needs exactly one of --input, --enum, --gnp");

    if (enum_n > 0) {
        inputs = enumerate_connected(enum_n);
    } else if (!gnp_spec.empty()) {
        // n,p,count — seeds are seed, seed+1, ...
        int n, count;
        double p;
        char c1, c2;
        std::istringstream ss(gnp_spec);
        if (!(ss >> n >> c1 >> p >> c2 >> count) || c1 != ',' || c2 != ',')
            fail("--gnp expects n,p,count");
        for (int i = 0; i < count; ++i) {
            std::string desc = "gnp:" + std::to_string(n) + "," + std::to_string(p) + "," +
                               std::to_string(seed + static_cast<uint64_t>(i));
            bmp_graph* g = nullptr;
            if (bmp_graph_generate(desc.c_str(), &g) != BMP_OK) fail_api();
            GraphHandle gh(g);
            inputs.push_back(graph6_of(gh.g));
        }
    } else {
        std::istringstream ss(read_input(input));
        std::string line;
        while (std::getline(ss, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            inputs.push_back(line); // empty lines recorded, skipped below
        }
    }

    std::vector<SweepRecord> records(inputs.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < inputs.size(); ++i)
            records[i] = sweep_one(static_cast<long>(i), inputs[i], cap);
    } else {
        std::vector<std::thread> workers;
        for (int t = 0; t < jobs; ++t) {
            workers.emplace_back([&, t] {
                for (size_t i = t; i < inputs.size(); i += jobs)
                    records[i] = sweep_one(static_cast<long>(i), inputs[i], cap);
            });
        }
        for (auto& w : workers) w.join();
    }

    long done = 0, skipped = 0;
    double max_ratio = 0.0;
    std::map<std::string, long> histogram;
    std::vector<std::string> extremal;
    const SweepRecord* violation = nullptr;

    for (const auto& rec : records) {
        if (rec.skipped) {
            ++skipped;
            if (as_json)
                std::cout << json{{"id", rec.id}, {"skip", rec.skip_reason}}.dump() << "\n";
            else
                std::cout << "# line " << rec.id << " skipped: " << rec.skip_reason << "\n";
            continue;
        }
        ++done;
        double ratio = ratio_of(rec);
        max_ratio = std::max(max_ratio, ratio);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", ratio);
        ++histogram[buf];
        std::string status = status_of(rec);
        if (status == "tight") extremal.push_back(rec.g6);
        if (status == "violation" && !violation) violation = &rec;

        if (as_json) {
            std::cout << json{{"id", rec.id},     {"graph6", rec.g6}, {"mp", rec.mp},
                              {"gb", rec.gb},     {"ratio", ratio},   {"status", status},
                              {"millis", rec.millis}}
                             .dump()
                      << "\n";
        } else {
            std::cout << rec.id << "  " << rec.g6 << "  mp=" << rec.mp << " gb=" << rec.gb
                      << "  ratio=" << buf << "  " << status << "\n";
        }
    }

    if (as_json) {
        json summary{{"graphs", done},
                     {"skipped", skipped},
                     {"max_ratio", max_ratio},
                     {"histogram", histogram},
                     {"extremal_count", extremal.size()}};
        json ex = json::array();
        for (size_t i = 0; i < extremal.size() && i < 50; ++i) ex.push_back(extremal[i]);
        summary["extremal"] = ex;
        std::cout << json{{"summary", summary}}.dump() << "\n";
    } else {
        std::cout << "---\ngraphs: " << done << "  skipped: " << skipped << "\n";
        std::cout << "max ratio gb/mp: ";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", max_ratio);
        std::cout << buf << "\n";
        std::cout << "ratio histogram:\n";
        for (const auto& [key, count] : histogram)
            std::cout << "  " << key << ": " << count << "\n";
        std::cout << "graphs with gb = 2*mp: " << extremal.size() << "\n";
        for (size_t i = 0; i < extremal.size() && i < 50; ++i)
            std::cout << "  " << extremal[i] << "\n";
        if (extremal.size() > 50) std::cout << "  ... (" << extremal.size() - 50 << " more)\n";
    }

    if (violation) {
        // The single most valuable possible output: dump everything.
        std::cerr << "CONJECTURE VIOLATION: gb > 2*mp\n"
                  << "  graph6: " << violation->g6 << "\n"
                  << "  mp = " << violation->mp << "  witness " << violation->mp_witness.dump()
                  << "\n"
                  << "  gb = " << violation->gb << "  witness " << violation->gb_witness.dump()
                  << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"broadcast domination and multipacking toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    int cap = env_cap();
    app.add_option("--cap", cap, "exact solver size cap (default 24; env BMP_CAP)");
    uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for randomized sources");
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for sweep");

    GraphSource solve_src, bounds_src, approx_src, verify_src, gen_src, dist_src;

    auto* solve = app.add_subcommand("solve", "exact mp and/or gb with witnesses");
    solve_src.attach(solve);
    bool want_mp = false, want_gb = false, want_both = false;
    solve->add_flag("--mp", want_mp, "maximum multipacking");
    solve->add_flag("--gb", want_gb, "minimum dominating broadcast");
    solve->add_flag("--both", want_both, "both parameters");

    auto* bounds = app.add_subcommand("bounds", "radius/diameter, mp/gb, inequality report");
    bounds_src.attach(bounds);

    auto* approx = app.add_subcommand("approx", "constructive multipacking with guarantee");
    approx_src.attach(approx);

    auto* verify = app.add_subcommand("verify", "check a certificate file against a graph");
    verify_src.attach(verify);
    std::string cert_path;
    verify->add_option("--cert", cert_path, "certificate JSON file")->required();

    auto* sweep = app.add_subcommand("sweep", "mp/gb over a stream of graphs");
    std::string sweep_input, gnp_spec;
    int enum_n = 0;
    sweep->add_option("--input", sweep_input, "newline-delimited graph6 file (\"-\" for stdin)");
    sweep->add_option("--enum", enum_n, "all connected labeled graphs on n <= 6 vertices");
    sweep->add_option("--gnp", gnp_spec, "random sample: n,p,count (see --seed)");

    auto* gen = app.add_subcommand("gen", "emit a generated graph");
    gen_src.attach(gen);
    std::string out_format = "edgelist";
    gen->add_option("--output-format", out_format, "edgelist|graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));

    auto* dist = app.add_subcommand("dist", "all-pairs distance matrix");
    dist_src.attach(dist);

    try {
        app.parse(argc, argv);

        if (solve->parsed()) {
            if (want_both || (!want_mp && !want_gb)) want_mp = want_gb = true;
            auto gh = solve_src.load();
            if (want_mp) print_solve_result(solve_json(gh.g, true, cap), as_json);
            if (want_gb) print_solve_result(solve_json(gh.g, false, cap), as_json);
            return 0;
        }
        if (bounds->parsed()) return cmd_bounds(bounds_src, cap, as_json);
        if (approx->parsed()) {
            auto gh = approx_src.load();
            json r = approx_json(gh.g);
            const int n = bmp_graph_order(gh.g);
            const int effective_cap = cap > 0 ? cap : 24;
            if (n <= effective_cap) {
                json mp_r = solve_json(gh.g, true, cap);
                r["mp_exact"] = mp_r["value"];
                r["ratio"] = r["size"].get<int>() > 0
                                 ? static_cast<double>(mp_r["value"].get<int>()) /
                                       r["size"].get<int>()
                                 : 0.0;
            }
            if (as_json) {
                std::cout << r.dump(2) << "\n";
            } else {
                std::cout << "multipacking " << r["multipacking"].dump() << "\n"
                          << "size " << r["size"] << "  verified "
                          << (r["verified"].get<bool>() ? "yes" : "NO") << "  guarantee "
                          << r["trace"]["guarantee"] << "\n";
                if (r.contains("mp_exact"))
                    std::cout << "exact mp " << r["mp_exact"] << "\n";
            }
            return r["verified"].get<bool>() ? 0 : 1;
        }
        if (verify->parsed()) {
            auto gh = verify_src.load();
            std::string cert = read_input(cert_path);
            char* out = nullptr;
            if (bmp_verify(gh.g, cert.c_str(), &out) != BMP_OK) fail_api();
            json verdict = json::parse(take_string(out));
            std::cout << (as_json ? verdict.dump() : verdict.dump(2)) << "\n";
            return verdict["ok"].get<bool>() ? 0 : 1;
        }
        if (sweep->parsed())
            return cmd_sweep(sweep_input, enum_n, gnp_spec, seed, cap, jobs, as_json);
        if (gen->parsed()) {
            auto gh = gen_src.load();
            if (out_format == "graph6") {
                std::cout << graph6_of(gh.g) << "\n";
            } else {
                char* out = nullptr;
                if (bmp_graph_to_edgelist(gh.g, &out) != BMP_OK) fail_api();
                std::cout << take_string(out);
            }
            return 0;
        }
        if (dist->parsed()) {
            auto gh = dist_src.load();
            const int n = bmp_graph_order(gh.g);
            std::vector<int> row(static_cast<size_t>(std::max(n, 1)));
            json rows = json::array();
            for (int v = 0; v < n; ++v) {
                if (bmp_graph_distances(gh.g, v, row.data()) != BMP_OK) fail_api();
                if (as_json) {
                    rows.push_back(std::vector<int>(row.begin(), row.begin() + n));
                } else {
                    for (int u = 0; u < n; ++u) std::cout << (u ? " " : "") << row[u];
                    std::cout << "\n";
                }
            }
            if (as_json) std::cout << rows.dump() << "\n";
            return 0;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
