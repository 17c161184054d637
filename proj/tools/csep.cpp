#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "csep/dimacs.hpp"
#include "csep/errors.hpp"
#include "csep/instances.hpp"
#include "csep/oracle.hpp"
#include "csep/pipelines.hpp"
#include "csep/recognition.hpp"
#include "json.hpp"

using namespace csep;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitClass = 3;
constexpr int kExitVerify = 4;
constexpr int kExitGen = 5;

std::string ids_1based(const VertexSet& s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v + 1);
    }
    return out;
}

DecompositionTree leaf_tree(const Graph& g, const std::string& tag) {
    DecompositionTree t;
    TreeNode n;
    n.id = 0;
    n.phi = g.vertices();
    n.rule = "leaf-" + tag;
    t.nodes.push_back(std::move(n));
    return t;
}

struct SeparateOutcome {
    PipelineResult result;
    std::string chosen_class;
};

SeparateOutcome run_class(const Graph& g, const std::string& cls, bool assume) {
    SeparateOutcome out;
    if (cls == "cap-free") {
        out.result = capfree_separator(g, !assume);
        out.chosen_class = cls;
    } else if (cls == "apple-free") {
        out.result = applefree_separator(g, !assume);
        out.chosen_class = cls;
    } else if (cls == "chordal") {
        if (!assume) {
            auto r = is_chordal(g);
            if (!r.chordal)
                throw ClassError("input is not chordal: hole " + ids_1based(vs_canon(r.hole.cycle)),
                                 "hole " + ids_1based(vs_canon(r.hole.cycle)));
        }
        out.result.family = maxclique_separator(g);
        out.result.tree = leaf_tree(g, "chordal");
        out.chosen_class = cls;
    } else if (cls == "claw-free") {
        if (!assume)
            if (auto w = contains_fixed_induced(g, Pattern::Claw))
                throw ClassError("input is not claw-free: claw " + ids_1based(vs_canon(w->embedding)),
                                 "claw " + ids_1based(vs_canon(w->embedding)));
        out.result.family = bounded_alpha_neighborhood_separator(g, 2);
        out.result.tree = leaf_tree(g, "claw-free");
        out.chosen_class = cls;
    } else if (cls == "generic") {
        out.result.family = all_cuts_fallback(g);
        out.result.tree = leaf_tree(g, "generic");
        out.chosen_class = cls;
    } else if (cls == "auto") {
        if (!is_cap_free(g)) return run_class(g, "cap-free", true);
        if (!is_apple_free(g)) return run_class(g, "apple-free", true);
        return run_class(g, "generic", false);
    } else {
        throw InputError("unknown class: " + cls);
    }
    out.result.family = ensure_trivials(out.result.family);
    if (out.result.report.sep_size == 0) {
        out.result.report.sep_size = out.result.family.size();
        out.result.report.leaves = out.result.tree.leaf_count();
        out.result.report.internal_nodes = out.result.tree.internal_count();
        out.result.report.branch = out.chosen_class;
    }
    return out;
}

// nullopt = skipped; otherwise the failing witness if any
std::optional<SeparationWitness> run_verify(const Graph& g, const CutFamily& f,
                                            const std::string& mode, std::size_t samples,
                                            std::uint64_t seed) {
    if (mode == "none") return std::nullopt;
    if (mode == "exhaustive") return verify_separator_exhaustive(g, f);
    if (mode == "reduced") return verify_separator(g, f);
    if (mode == "sampled") return verify_separator_sampled(g, f, samples, seed);
    throw InputError("unknown verify mode: " + mode);
}

Graph generate(const std::string& family, int n, double p, std::uint64_t seed) {
    if (family == "random") return gen_random(n, p, seed);
    if (family == "chordal") return gen_chordal(n, p, seed);
    if (family == "triangle-free") return gen_triangle_free(n, p, seed);
    if (family == "almost-triangle-free") return gen_almost_triangle_free(n, p, seed);
    if (family == "line") return gen_line_graph(n, p, seed);
    if (family == "cap-free-amalgam") return gen_capfree_composite(n, p, seed);
    if (family == "nearly-chordal") return gen_nearly_chordal_composite(n, seed);
    throw InputError("unknown family: " + family);
}

std::string class_for_family(const std::string& family, int n) {
    if (family == "chordal") return "chordal";
    if (family == "line") return "apple-free";
    if (family == "triangle-free" || family == "almost-triangle-free" ||
        family == "cap-free-amalgam")
        return "cap-free";
    if (n <= 20) return "generic";
    throw InputError("family " + family + " has no polynomial pipeline above n = 20");
}

int worker_count() {
    if (const char* env = std::getenv("CSEP_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return k;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

int cmd_separate(const std::string& in, const std::string& cls, const std::string& out_path,
                 const std::string& tree_path, const std::string& verify_mode, bool assume,
                 std::size_t samples, std::uint64_t seed, bool timings) {
    Graph g = read_dimacs_file(in);
    SeparateOutcome oc = run_class(g, cls, assume);
    if (!out_path.empty()) write_cut_family_file(out_path, oc.result.family);
    if (!tree_path.empty()) {
        std::ofstream tf(tree_path);
        if (!tf) throw InputError("cannot open " + tree_path);
        write_tree_json(tf, oc.result.tree);
    }
    auto witness = run_verify(g, oc.result.family, verify_mode, samples, seed);
    ordered_json rep;
    rep["command"] = "separate";
    rep["class"] = oc.chosen_class;
    rep["n"] = g.n();
    rep["m"] = g.m();
    rep["sep_size"] = oc.result.family.size();
    rep["tree_internal"] = oc.result.tree.internal_count();
    rep["tree_leaves"] = oc.result.tree.leaf_count();
    rep["dedup_savings"] = oc.result.family.dedup_savings();
    rep["labels_injective"] = oc.result.report.labels_injective;
    rep["branch"] = oc.result.report.branch;
    rep["build_ms"] = timings ? oc.result.report.build_ms : 0.0;
    rep["verify_mode"] = verify_mode;
    rep["verify_ok"] = !witness.has_value();
    std::cout << rep.dump() << '\n';
    if (witness) {
        write_witness(std::cout, *witness);
        return kExitVerify;
    }
    return kExitOk;
}

int cmd_verify(const std::string& in, const std::string& sep, const std::string& mode,
               std::size_t samples, std::uint64_t seed) {
    Graph g = read_dimacs_file(in);
    CutFamily f = read_cut_family_file(sep);
    auto witness = run_verify(g, f, mode, samples, seed);
    ordered_json rep;
    rep["command"] = "verify";
    rep["n"] = g.n();
    rep["sep_size"] = f.size();
    rep["verify_mode"] = mode;
    rep["verify_ok"] = !witness.has_value();
    std::cout << rep.dump() << '\n';
    if (witness) {
        write_witness(std::cout, *witness);
        return kExitVerify;
    }
    return kExitOk;
}

int cmd_gen(const std::string& family, int n, double p, std::uint64_t seed,
            const std::string& out_path) {
    if (n <= 0) throw GenerationError("gen: n must be positive");
    Graph g = generate(family, n, p, seed);
    std::map<std::string, std::string> params{{"p", std::to_string(p)}};
    write_instance(out_path, out_path + ".json", g, family, seed, params);
    ordered_json rep;
    rep["command"] = "gen";
    rep["family"] = family;
    rep["n"] = g.n();
    rep["m"] = g.m();
    rep["seed"] = seed;
    rep["out"] = out_path;
    std::cout << rep.dump() << '\n';
    return kExitOk;
}

struct BenchRow {
    std::string family;
    int n = 0;
    std::uint64_t seed = 0;
    int m = 0;
    std::string cls;
    std::size_t sep_size = 0;
    int tree_internal = 0;
    int tree_leaves = 0;
    std::size_t dedup = 0;
    double build_ms = 0.0;
    std::string verify_mode;
    bool verify_ok = false;
};

int cmd_bench(const std::string& family, const std::string& range, int reps, double p,
              std::uint64_t seed0, const std::string& out_csv, int step, bool timings) {
    int lo = 0, hi = -1;
    {
        auto pos = range.find("..");
        if (pos == std::string::npos) throw InputError("bad --n-range, expected a..b");
        try {
            std::size_t used1 = 0, used2 = 0;
            std::string a = range.substr(0, pos), b = range.substr(pos + 2);
            lo = std::stoi(a, &used1);
            hi = std::stoi(b, &used2);
            if (used1 != a.size() || used2 != b.size()) throw std::invalid_argument(range);
        } catch (const std::exception&) {
            throw InputError("bad --n-range, expected a..b");
        }
    }
    if (step < 1) throw InputError("bad --step, must be >= 1");
    struct Task {
        int n;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (int n = lo; n <= hi; n += step)
        for (int r = 0; r < reps; ++r) tasks.push_back({n, seed0 + std::uint64_t(r)});
    std::vector<BenchRow> rows(tasks.size());
    std::vector<std::string> errors;
    std::mutex err_mu;
    std::size_t next = 0;
    std::mutex next_mu;
    auto work = [&]() {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lk(next_mu);
                if (next >= tasks.size()) return;
                i = next++;
            }
            const Task& t = tasks[i];
            try {
                Graph g = generate(family, t.n, p, t.seed);
                std::string cls = class_for_family(family, g.n());
                SeparateOutcome oc = run_class(g, cls, false);
                BenchRow row;
                row.family = family;
                row.n = g.n();
                row.seed = t.seed;
                row.m = g.m();
                row.cls = oc.chosen_class;
                row.sep_size = oc.result.family.size();
                row.tree_internal = oc.result.tree.internal_count();
                row.tree_leaves = oc.result.tree.leaf_count();
                row.dedup = oc.result.family.dedup_savings();
                row.build_ms = timings ? oc.result.report.build_ms : 0.0;
                row.verify_mode = g.n() <= 15 ? "exhaustive" : "sampled";
                row.verify_ok =
                    !run_verify(g, oc.result.family, row.verify_mode, 10000, t.seed);
                rows[i] = std::move(row);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(err_mu);
                errors.push_back("n=" + std::to_string(t.n) + " seed=" +
                                 std::to_string(t.seed) + ": " + e.what());
            }
        }
    };
    int workers = std::min<int>(worker_count(), std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (!errors.empty()) {
        for (const std::string& e : errors) std::cerr << "bench: " << e << '\n';
        return kExitGen;
    }
    std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.n != b.n) return a.n < b.n;
        return a.seed < b.seed;
    });
    std::ostringstream csv;
    csv << "family,n,m,class,sep_size,tree_internal,tree_leaves,dedup_savings,build_ms,"
           "verify_mode,verify_ok\n";
    for (const BenchRow& r : rows)
        csv << r.family << ',' << r.n << ',' << r.m << ',' << r.cls << ',' << r.sep_size << ','
            << r.tree_internal << ',' << r.tree_leaves << ',' << r.dedup << ',' << r.build_ms
            << ',' << r.verify_mode << ',' << (r.verify_ok ? "true" : "false") << '\n';
    if (out_csv.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_csv);
        if (!out) throw InputError("cannot open " + out_csv);
        out << csv.str();
        ordered_json rep;
        rep["command"] = "bench";
        rep["family"] = family;
        rep["rows"] = rows.size();
        rep["out"] = out_csv;
        std::cout << rep.dump() << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique/stable-set separator toolkit"};
    app.require_subcommand(1);

    std::string in, cls = "auto", out_path, tree_path, verify_mode = "reduced";
    bool assume = false, timings = false;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;

    auto* sep = app.add_subcommand("separate", "build a CS-separator for a DIMACS graph");
    sep->add_option("--in", in, "input DIMACS file")->required();
    sep->add_option("--class", cls,
                    "auto|apple-free|cap-free|chordal|claw-free|generic");
    sep->add_option("--out", out_path, "cut family output file");
    sep->add_option("--tree", tree_path, "decomposition tree JSON output file");
    sep->add_option("--verify", verify_mode, "exhaustive|reduced|sampled|none");
    sep->add_flag("--assume-class", assume, "skip class validation");
    sep->add_option("--samples", samples, "sample count for sampled verification");
    sep->add_option("--seed", seed, "seed for sampled verification");
    sep->add_flag("--timings", timings, "report wall time (off for reproducible output)");

    std::string v_in, v_sep, v_mode = "reduced";
    std::size_t v_samples = 10000;
    std::uint64_t v_seed = 0;
    auto* ver = app.add_subcommand("verify", "check a cut family against a graph");
    ver->add_option("--in", v_in, "input DIMACS file")->required();
    ver->add_option("--sep", v_sep, "cut family file")->required();
    ver->add_option("--mode", v_mode, "exhaustive|reduced|sampled");
    ver->add_option("--samples", v_samples, "sample count");
    ver->add_option("--seed", v_seed, "seed");

    std::string g_family, g_out;
    int g_n = 0;
    double g_p = 0.5;
    std::uint64_t g_seed = 1;
    auto* gen = app.add_subcommand("gen", "generate a test instance");
    gen->add_option("--family", g_family,
                    "random|chordal|triangle-free|almost-triangle-free|line|cap-free-amalgam|"
                    "nearly-chordal")
        ->required();
    gen->add_option("--n", g_n, "vertex count (base size for line graphs)")->required();
    gen->add_option("--p", g_p, "density/probability parameter");
    gen->add_option("--seed", g_seed, "seed");
    gen->add_option("--out", g_out, "output DIMACS path; sidecar JSON at <out>.json")
        ->required();

    std::string b_family, b_range, b_out;
    int b_reps = 1, b_step = 1;
    double b_p = 0.5;
    std::uint64_t b_seed = 1;
    bool b_timings = false;
    auto* ben = app.add_subcommand("bench", "sweep a family and emit a CSV");
    ben->add_option("--family", b_family, "instance family")->required();
    ben->add_option("--n-range", b_range, "a..b")->required();
    ben->add_option("--step", b_step, "n increment");
    ben->add_option("--reps", b_reps, "instances per n");
    ben->add_option("--p", b_p, "density/probability parameter");
    ben->add_option("--seed", b_seed, "base seed");
    ben->add_option("--out", b_out, "CSV path (stdout when omitted)");
    ben->add_flag("--timings", b_timings, "record wall times (off for reproducible CSVs)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitParse;
    }

    try {
        if (sep->parsed())
            return cmd_separate(in, cls, out_path, tree_path, verify_mode, assume, samples,
                                seed, timings);
        if (ver->parsed()) return cmd_verify(v_in, v_sep, v_mode, v_samples, v_seed);
        if (gen->parsed()) return cmd_gen(g_family, g_n, g_p, g_seed, g_out);
        if (ben->parsed())
            return cmd_bench(b_family, b_range, b_reps, b_p, b_seed, b_out, b_step, b_timings);
    } catch (const ClassError& e) {
        std::cerr << "class error: " << e.what() << '\n';
        if (!e.witness.empty()) std::cout << e.witness << '\n';
        return kExitClass;
    } catch (const GuardError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitClass;
    } catch (const EnumerationOverflow& e) {
        std::cerr << "overflow: " << e.what() << '\n';
        return kExitClass;
    } catch (const GenerationError& e) {
        std::cerr << "generation error: " << e.what() << '\n';
        return kExitGen;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitParse;
}
