// tihany: command-line front end.
//
//   tihany chi [FILE]                    chi, omega, alpha and the witness set
//   tihany split --s S --t T [FILE]      split certificate as JSON
//   tihany check [FILE]                  re-verify a certificate document
//   tihany sweep --n N [--mode M]        sweep report as JSON lines
//   tihany extremal --example K ...      extremal example as graph6
//   tihany decomp [FILE]                 Gallai-Edmonds sets and witness set
//   tihany enumerate --n N [--dedup]     graph6 stream
//
// Machine-readable output goes to stdout, diagnostics to stderr. Exit codes:
// 0 success, 1 verification failure or counterexample, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <tihany/tihany.hpp>

namespace {

using namespace tihany;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input = "-";
    std::string format = "graph6";
    bool complement_input = false;
    int s = 0;
    int t = 0;
    int n = 0;
    int n_min = 1;
    std::uint64_t seed = 1;
    std::string mode = "exhaustive";
    bool dedup = false;
    int example = 1;
    std::string out;
    std::string report;
    long long budget = 1000;
    int threads = 1;
};

int vertex_cap() {
    const char* env = std::getenv("TIHANY_MAX_N");
    if (env == nullptr || *env == '\0') return kMaxVertices;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 0 || value > kMaxVertices)
        throw UsageError("TIHANY_MAX_N must be an integer in [0, " + std::to_string(kMaxVertices) + "], got \"" +
                         std::string(env) + "\"");
    return static_cast<int>(value);
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file \"" + path + "\"");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph read_graph(const Options& opt) {
    const std::string text = read_input(opt.input);
    Graph g;
    if (opt.format == "edgelist") {
        g = parse_edgelist(text, vertex_cap());
    } else {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
        }
        if (line.empty()) throw Error(ErrorCode::MalformedInput, "no graph6 record in input");
        g = parse_graph6(line, vertex_cap());
    }
    return opt.complement_input ? complement(g) : g;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw UsageError("cannot write \"" + opt.out + "\"");
    out << text;
}

json set_json(VertexSet s) { return to_json(s); }

int run_chi(const Options& opt) {
    const Graph g = read_graph(opt);
    json j;
    j["graph"] = serialize_graph6(g);
    j["n"] = g.order();
    const int alpha = independence_number(g);
    if (alpha <= 2) {
        ChiCertificate cert = chi_alpha2(g);
        j["chi"] = cert.chi;
        j["omega"] = clique_number(g);
        j["alpha"] = alpha;
        j["witness"] = set_json(cert.witness.p);
        j["odd_components"] = cert.witness.odd_components;
        json classes = json::array();
        for (VertexSet c : materialize_coloring(g, cert)) classes.push_back(set_json(c));
        j["coloring"] = classes;
    } else {
        if (g.order() > kBruteforceChiLimit)
            throw Error(ErrorCode::AlphaTooLarge, "alpha = " + std::to_string(alpha) + " and n = " +
                                                      std::to_string(g.order()) + " is above the brute-force limit");
        j["chi"] = chi_bruteforce(g);
        j["omega"] = clique_number(g);
        j["alpha"] = alpha;
        j["witness"] = nullptr;
        std::cerr << "alpha >= 3: chi from exhaustive colouring, no witness set\n";
    }
    emit(opt, j.dump() + "\n");
    return kExitOk;
}

int run_split(const Options& opt) {
    const Graph g = read_graph(opt);
    SplitOptions split_opt;
    if (!opt.report.empty()) split_opt.report_path = opt.report;
    std::vector<Attempt> log;
    try {
        const SplitCertificate cert = split({g, opt.s, opt.t}, split_opt, &log);
        const VerificationResult res = verify_certificate(g, opt.s, opt.t, cert);
        for (const auto& a : log) std::cerr << to_string(a.branch) << ": " << a.outcome << "\n";
        emit(opt, certificate_json(g, opt.s, opt.t, cert, res.ok).dump() + "\n");
        for (const auto& v : res.violations) std::cerr << "violation: " << v << "\n";
        return res.ok ? kExitOk : kExitFailed;
    } catch (const CounterexampleError& e) {
        std::cerr << e.what() << "\n";
        emit(opt, e.record() + "\n");
        return kExitFailed;
    }
}

int run_check(const Options& opt) {
    const CertificateDocument doc = parse_certificate(read_input(opt.input), vertex_cap());
    const VerificationResult res = check_certificate(doc);
    json j;
    j["ok"] = res.ok;
    j["s_chi"] = res.s_chi;
    j["t_chi"] = res.t_chi;
    j["violations"] = res.violations;
    emit(opt, j.dump() + "\n");
    for (const auto& v : res.violations) std::cerr << "violation: " << v << "\n";
    return res.ok ? kExitOk : kExitFailed;
}

int run_sweep(const Options& opt) {
    SweepOptions sw;
    sw.n_min = opt.n_min;
    sw.n_max = opt.n;
    sw.mode = opt.mode == "random" ? SweepMode::Random : SweepMode::Exhaustive;
    sw.budget = opt.budget;
    sw.seed = opt.seed;
    sw.threads = opt.threads;
    if (sw.n_max > vertex_cap()) throw UsageError("--n exceeds the vertex cap " + std::to_string(vertex_cap()));
    const SweepReport report = sweep(sw);
    emit(opt, sweep_report_lines(report));
    std::cerr << "checked " << report.graphs_checked << " graphs, " << report.hypothesis_instances
              << " hypothesis instances, " << report.failures.size() << " failures in " << report.wall_time.count()
              << " s\n";
    return report.confirmed() ? kExitOk : kExitFailed;
}

int run_extremal(const Options& opt) {
    const Graph g = opt.example == 1 ? example1(opt.s, opt.t) : example2(opt.s, opt.t);
    if (g.order() > vertex_cap()) throw UsageError("example exceeds the vertex cap");
    emit(opt, serialize_graph6(g) + "\n");
    return kExitOk;
}

int run_decomp(const Options& opt) {
    const Graph g = read_graph(opt);
    const GallaiEdmonds ge = gallai_edmonds(g);
    const WitnessSet w = maximal_witness_set(g);
    const Matching m = maximum_matching(g);
    json j;
    j["graph"] = serialize_graph6(g);
    j["nu"] = m.nu;
    json edges = json::array();
    for (auto [u, v] : m.edges) edges.push_back(json::array({u, v}));
    j["matching"] = edges;
    j["deficiency"] = tutte_berge_deficiency(g);
    j["D"] = set_json(ge.d);
    j["A"] = set_json(ge.a);
    j["C"] = set_json(ge.c);
    j["witness"] = set_json(w.p);
    j["odd_components"] = w.odd_components;
    j["value"] = w.value;
    emit(opt, j.dump() + "\n");
    return kExitOk;
}

int run_enumerate(const Options& opt) {
    if (opt.n > vertex_cap()) throw UsageError("--n exceeds the vertex cap " + std::to_string(vertex_cap()));
    std::ofstream file;
    if (!opt.out.empty()) {
        file.open(opt.out, std::ios::binary);
        if (!file) throw UsageError("cannot write \"" + opt.out + "\"");
    }
    std::ostream& out = opt.out.empty() ? std::cout : file;
    const long long count = enumerate_alpha2(opt.n, opt.dedup, [&](const Graph& g) { out << serialize_graph6(g) << '\n'; });
    std::cerr << count << " graphs\n";
    return kExitOk;
}

bool is_usage_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::MalformedInput:
    case ErrorCode::BadParameters:
    case ErrorCode::TooLarge:
    case ErrorCode::OutOfRange: return true;
    default: return false;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Splitting graphs with independence number two"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "Input file, - for stdin")->capture_default_str();
    };
    auto add_graph_input = [&](CLI::App* cmd) {
        add_input(cmd);
        cmd->add_option("--format", opt.format, "Input format")
            ->check(CLI::IsMember({"graph6", "edgelist"}))
            ->capture_default_str();
        cmd->add_flag("--complement", opt.complement_input, "Work on the complement of the input");
    };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", opt.out, "Write output here instead of stdout"); };

    auto* chi = app.add_subcommand("chi", "Chromatic number with its witness set");
    add_graph_input(chi);
    add_out(chi);

    auto* split_cmd = app.add_subcommand("split", "Produce a split certificate");
    add_graph_input(split_cmd);
    split_cmd->add_option("--s", opt.s, "s")->required()->check(CLI::Range(2, kMaxVertices));
    split_cmd->add_option("--t", opt.t, "t")->required()->check(CLI::Range(2, kMaxVertices));
    split_cmd->add_option("--report", opt.report, "Counterexample audit file");
    add_out(split_cmd);

    auto* check = app.add_subcommand("check", "Re-verify a certificate document");
    add_input(check);
    add_out(check);

    auto* sweep_cmd = app.add_subcommand("sweep", "Run the splitting sweep");
    sweep_cmd->add_option("--n", opt.n, "Largest order")->required()->check(CLI::Range(1, kMaxVertices));
    sweep_cmd->add_option("--n-min", opt.n_min, "Smallest order")->capture_default_str()->check(CLI::Range(1, kMaxVertices));
    sweep_cmd->add_option("--mode", opt.mode, "Generation mode")
        ->check(CLI::IsMember({"exhaustive", "random"}))
        ->capture_default_str();
    sweep_cmd->add_option("--budget", opt.budget, "Graphs drawn in random mode")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    sweep_cmd->add_option("--threads", opt.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1, 256));
    add_out(sweep_cmd);

    auto* extremal = app.add_subcommand("extremal", "Emit an extremal example as graph6");
    extremal->add_option("--example", opt.example, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    extremal->add_option("--s", opt.s, "s")->required()->check(CLI::Range(2, kMaxVertices));
    extremal->add_option("--t", opt.t, "t")->required()->check(CLI::Range(2, kMaxVertices));
    add_out(extremal);

    auto* decomp = app.add_subcommand("decomp", "Gallai-Edmonds decomposition and maximal witness set");
    add_graph_input(decomp);
    add_out(decomp);

    auto* enumerate = app.add_subcommand("enumerate", "Stream every labelled alpha-2 graph on n vertices");
    enumerate->add_option("--n", opt.n, "Order")->required()->check(CLI::Range(0, kExhaustiveLimit));
    enumerate->add_flag("--dedup", opt.dedup, "One graph per isomorphism class");
    add_out(enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*chi) return run_chi(opt);
        if (*split_cmd) return run_split(opt);
        if (*check) return run_check(opt);
        if (*sweep_cmd) return run_sweep(opt);
        if (*extremal) return run_extremal(opt);
        if (*decomp) return run_decomp(opt);
        if (*enumerate) return run_enumerate(opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return is_usage_code(e.code()) ? kExitUsage : kExitFailed;
    }
    return kExitUsage;
}
