#include "hetec/circuit.hpp"
#include "hetec/cost_model.hpp"
#include "hetec/scheduler.hpp"
#include "hetec/tradeoff.hpp"
#include "hetec/transpile.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hetec;

namespace {

struct RunConfig {
    std::string input;        // qasm path or benchmark name like adder_18
    std::string arch_file;
    std::string out_dir = ".";
    std::string format = "json";
    std::string max_weight = "auto"; // number, "inf", or "auto" (= S)
    std::string bus;
    uint64_t seed = 0;
    int surface_tiles = -1;
    int distance = -1;
    double p = -1;
    uint32_t rz_word_len = 30;
};

struct MissingFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw MissingFileError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool parse_bench_name(const std::string& name, BenchmarkKind& kind, uint32_t& n)
{
    auto us = name.rfind('_');
    if (us == std::string::npos)
        return false;
    std::string base = name.substr(0, us);
    try {
        n = static_cast<uint32_t>(std::stoul(name.substr(us + 1)));
    } catch (const std::exception&) {
        return false;
    }
    if (base == "adder")
        kind = BenchmarkKind::Adder;
    else if (base == "qft")
        kind = BenchmarkKind::Qft;
    else if (base == "ising")
        kind = BenchmarkKind::Ising;
    else
        return false;
    return true;
}

LogicalCircuit load_input(const RunConfig& cfg)
{
    BenchmarkKind kind;
    uint32_t n;
    if (!fs::exists(cfg.input) && parse_bench_name(cfg.input, kind, n))
        return gen_benchmark(kind, n, cfg.rz_word_len);
    LogicalCircuit c = parse_qasm(slurp(cfg.input));
    if (c.name.empty())
        c.name = fs::path(cfg.input).stem().string();
    return c;
}

ArchitectureConfig resolve_arch(const RunConfig& cfg)
{
    ArchitectureConfig arch;
    if (!cfg.arch_file.empty())
        arch = ArchitectureConfig::from_json(slurp(cfg.arch_file));
    if (const char* env = std::getenv("HETEC_COST_TABLE"); env && *env)
        arch.cost = CostTable::load_file(env);
    if (cfg.surface_tiles >= 0)
        arch.surface_tiles = static_cast<uint32_t>(cfg.surface_tiles);
    if (cfg.distance >= 0)
        arch.distance = static_cast<uint32_t>(cfg.distance);
    if (cfg.p >= 0)
        arch.p = cfg.p;
    if (!cfg.bus.empty())
        arch.bus = bus_variant_from_name(cfg.bus);
    arch.check();
    return arch;
}

size_t resolve_max_weight(const RunConfig& cfg, const ArchitectureConfig& arch)
{
    if (cfg.max_weight == "inf")
        return kUnboundedWeight;
    if (cfg.max_weight == "auto")
        return arch.surface_tiles;
    return static_cast<size_t>(std::stoull(cfg.max_weight));
}

uint64_t fnv1a(const std::string& s, uint64_t h = 0xcbf29ce484222325ull)
{
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hash_tag(const std::string& config_json, const std::string& input_id)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(input_id, fnv1a(config_json))));
    return buf;
}

// Reports are write-once: temp file + rename, refusing to clobber an
// existing report with the same content hash.
void write_report(const fs::path& path, const std::string& content)
{
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    if (fs::exists(path)) {
        std::cerr << "note: report " << path.string() << " already exists, leaving it\n";
        return;
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out)
            throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
    std::cout << "wrote " << path.string() << "\n";
}

json config_header(const RunConfig& cfg, const ArchitectureConfig& arch, size_t max_weight)
{
    json j;
    j["input"] = cfg.input;
    j["seed"] = cfg.seed;
    j["max_weight"] = max_weight == kUnboundedWeight ? json("inf") : json(max_weight);
    j["arch"] = json::parse(arch.to_json());
    return j;
}

int cmd_transpile(const RunConfig& cfg)
{
    LogicalCircuit circuit = load_input(cfg);
    ArchitectureConfig arch = resolve_arch(cfg);
    size_t w = resolve_max_weight(cfg, arch);

    PbcCircuit pruned = prune(lower_circuit(circuit), w);
    std::string text = serialize_pbc(pruned);

    json header = config_header(cfg, arch, w);
    json summary{{"config", header},
                 {"t_count", pruned.nonclifford_count()},
                 {"residual_cliffords", pruned.clifford_count()},
                 {"measurements", pruned.measurement_count()},
                 {"max_op_weight", pruned.max_op_weight()}};

    std::string tag = hash_tag(header.dump(), print_qasm(circuit));
    fs::path base = fs::path(cfg.out_dir);
    write_report(base / ("transpile_" + tag + ".pbc"), text);
    write_report(base / ("transpile_" + tag + ".json"), summary.dump(2) + "\n");
    std::cout << "t_count=" << pruned.nonclifford_count()
              << " residual_cliffords=" << pruned.clifford_count()
              << " max_op_weight=" << pruned.max_op_weight() << "\n";
    return 0;
}

json estimate_json(const RunConfig& cfg, const PipelineResult& r, size_t w)
{
    ScheduleStats st = schedule_stats(r.sched);
    json kinds;
    for (const auto& [k, n] : st.kind_counts)
        kinds[event_kind_name(k)] = n;
    return json{{"config", config_header(cfg, r.arch, w)},
                {"error_io", r.errors.io},
                {"error_clifford", r.errors.clifford},
                {"error_nonclifford", r.errors.non_clifford},
                {"error_total", r.errors.total},
                {"cycles", r.errors.cycles},
                {"physical_qubits", r.qubits},
                {"io_count", st.io_count},
                {"event_count", st.event_count},
                {"event_kinds", kinds},
                {"schedule_hash", r.sched.event_hash()}};
}

std::string sweep_header()
{
    return "S,p,error_io,error_clifford,error_nonclifford,error_total,cycles,qubits\n";
}

std::string sweep_row(const PipelineResult& r)
{
    std::ostringstream os;
    os.precision(12);
    os << r.arch.surface_tiles << ',' << r.arch.p << ',' << r.errors.io << ','
       << r.errors.clifford << ',' << r.errors.non_clifford << ',' << r.errors.total << ','
       << r.errors.cycles << ',' << r.qubits << '\n';
    return os.str();
}

int cmd_estimate(const RunConfig& cfg)
{
    LogicalCircuit circuit = load_input(cfg);
    ArchitectureConfig arch = resolve_arch(cfg);
    size_t w = resolve_max_weight(cfg, arch);

    PipelineResult r = run_pipeline(circuit, arch, w, cfg.seed);
    json rep = estimate_json(cfg, r, w);
    std::string tag = hash_tag(rep["config"].dump(), print_qasm(circuit));

    fs::path base = fs::path(cfg.out_dir);
    if (cfg.format == "csv")
        write_report(base / ("estimate_" + tag + ".csv"), sweep_header() + sweep_row(r));
    else
        write_report(base / ("estimate_" + tag + ".json"), rep.dump(2) + "\n");
    std::cout << "total_error=" << r.errors.total << " cycles=" << r.errors.cycles
              << " qubits=" << r.qubits << "\n";
    return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::vector<uint32_t>& s_list,
              const std::vector<double>& p_list, unsigned jobs)
{
    LogicalCircuit circuit = load_input(cfg);
    ArchitectureConfig arch = resolve_arch(cfg);

    struct Point {
        uint32_t s;
        double p;
    };
    std::vector<Point> grid;
    for (uint32_t s : s_list)
        for (double p : p_list)
            grid.push_back({s, p});

    std::vector<std::string> rows(grid.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
            ArchitectureConfig a = arch;
            a.surface_tiles = grid[i].s;
            a.p = grid[i].p;
            size_t w = resolve_max_weight(cfg, a);
            rows[i] = sweep_row(run_pipeline(circuit, a, w, cfg.seed));
        }
    };
    std::vector<std::future<void>> pool;
    for (unsigned j = 1; j < std::min<size_t>(jobs, grid.size()); ++j)
        pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : pool)
        f.get();

    std::string csv = sweep_header();
    for (const auto& row : rows)
        csv += row;

    json header = config_header(cfg, arch, resolve_max_weight(cfg, arch));
    header["s_list"] = s_list;
    header["p_list"] = p_list;
    std::string tag = hash_tag(header.dump(), print_qasm(circuit));
    write_report(fs::path(cfg.out_dir) / ("sweep_" + tag + ".csv"), csv);
    return 0;
}

int cmd_compare(const RunConfig& cfg)
{
    LogicalCircuit circuit = load_input(cfg);
    ArchitectureConfig arch = resolve_arch(cfg);

    TradeoffReport rep = compare(circuit, arch, cfg.seed);
    json j = json::parse(rep.to_json());
    j["config"] = config_header(cfg, arch, resolve_max_weight(cfg, arch));

    std::string tag = hash_tag(j["config"].dump(), print_qasm(circuit));
    write_report(fs::path(cfg.out_dir) / ("compare_" + tag + ".json"), j.dump(2) + "\n");
    std::cout << "qubit_improvement=" << rep.r_qub_improvement << "x slowdown=" << rep.slowdown
              << "x d_surf=" << rep.d_surf << "\n";
    return 0;
}

int cmd_bench(const std::string& out_dir, uint32_t rz_word_len)
{
    fs::create_directories(out_dir);
    const std::pair<BenchmarkKind, uint32_t> fixtures[] = {
        {BenchmarkKind::Adder, 18}, {BenchmarkKind::Ising, 8}, {BenchmarkKind::Qft, 8}};
    for (auto [kind, n] : fixtures) {
        LogicalCircuit c = gen_benchmark(kind, n, rz_word_len);
        fs::path path = fs::path(out_dir) / (c.name + ".qasm");
        std::ofstream out(path);
        out << print_qasm(c);
        std::cout << "wrote " << path.string() << " (" << c.gates.size() << " gates, t_count "
                  << c.t_count() << ")\n";
    }
    return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool needs_input)
{
    if (needs_input)
        sub->add_option("input", cfg.input,
                        "QASM file, or benchmark name (adder_18, qft_8, ising_8)")
            ->required();
    sub->add_option("--arch", cfg.arch_file, "architecture config JSON");
    sub->add_option("--surface-tiles", cfg.surface_tiles, "surface tile count S");
    sub->add_option("--distance", cfg.distance, "surface code distance d");
    sub->add_option("--p", cfg.p, "physical error rate");
    sub->add_option("--seed", cfg.seed, "scheduler tie-break seed");
    sub->add_option("--max-weight", cfg.max_weight, "prune weight cap (number, inf, auto)");
    sub->add_option("--bus", cfg.bus, "bus variant")
        ->check(CLI::IsMember({"mono", "ssip", "ckbb"}));
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--rz-word-len", cfg.rz_word_len, "T count per rotation word");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"heterogeneous QEC transpiler and resource estimator"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<uint32_t> s_list{2};
    std::vector<double> p_list{1e-3};
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string bench_dir = "benchmarks";

    auto* t = app.add_subcommand("transpile", "lower and prune a circuit to PBC form");
    add_common(t, cfg, true);
    auto* e = app.add_subcommand("estimate", "schedule a circuit and report error/cycles/qubits");
    add_common(e, cfg, true);
    auto* s = app.add_subcommand("sweep", "estimate over an (S, p) grid");
    add_common(s, cfg, true);
    s->add_option("--S", s_list, "surface tile counts")->delimiter(',');
    s->add_option("--P", p_list, "physical error rates")->delimiter(',');
    s->add_option("--jobs", jobs, "worker threads");
    auto* c = app.add_subcommand("compare", "heterogeneous vs homogeneous trade-off report");
    add_common(c, cfg, true);
    auto* b = app.add_subcommand("bench", "regenerate benchmark fixtures");
    b->add_option("--out", bench_dir, "fixture directory");
    b->add_option("--rz-word-len", cfg.rz_word_len, "T count per rotation word");

    CLI11_PARSE(app, argc, argv);

    try {
        if (t->parsed())
            return cmd_transpile(cfg);
        if (e->parsed())
            return cmd_estimate(cfg);
        if (s->parsed())
            return cmd_sweep(cfg, s_list, p_list, jobs);
        if (c->parsed())
            return cmd_compare(cfg);
        if (b->parsed())
            return cmd_bench(bench_dir, cfg.rz_word_len);
    } catch (const MissingFileError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
