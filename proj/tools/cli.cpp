#include "cli.hpp"

#include "chibound/codec.hpp"
#include "chibound/invariants.hpp"
#include "chibound/json.hpp"
#include "chibound/recognition.hpp"
#include "chibound/structure.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace chibound::cli {
namespace {

struct RawArgs {
    std::string g6;
    std::string file;
    bool use_stdin = false;
    std::string format = "json";
    std::string anchor;
    std::string checks = "bound,structure,clique-cover,engines";
    bool exhaustive = false;
    bool random = false;
    bool default_anchor_only = false;
    std::string out;
    std::string kind;
    int size = 5;
    std::string base;
    int copies = 1;
    int n = 20;
    double p = 0.8;
    std::uint64_t seed = 0;
};

void add_input(CLI::App* sub, RawArgs& raw) {
    auto* g6 = sub->add_option("--g6", raw.g6, "Inline graph6 string");
    auto* file = sub->add_option("--file", raw.file, "File with graph6 lines or DIMACS .col text");
    auto* in = sub->add_flag("--stdin", raw.use_stdin, "Read one graph6 line per graph from stdin");
    g6->excludes(file)->excludes(in);
    file->excludes(in);
}

void add_format(CLI::App* sub, RawArgs& raw) {
    sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

Edge parse_anchor(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("missing comma");
        std::size_t used_v = 0;
        std::size_t used_w = 0;
        const int v = std::stoi(text.substr(0, comma), &used_v);
        const int w = std::stoi(text.substr(comma + 1), &used_w);
        if (used_v != comma || used_w != text.size() - comma - 1) throw std::invalid_argument("junk");
        return {v, w};
    } catch (const std::exception&) {
        throw UsageError("--anchor: expected two vertex indices 'v,w', got '" + text + "'");
    }
}

void apply_checks(const std::string& list, CampaignConfig& cfg) {
    cfg.check_bound = cfg.check_structure = cfg.check_clique_cover = cfg.check_engines = false;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "bound") cfg.check_bound = true;
        else if (item == "structure") cfg.check_structure = true;
        else if (item == "clique-cover") cfg.check_clique_cover = true;
        else if (item == "engines") cfg.check_engines = true;
        else if (!item.empty()) throw UsageError("--checks: unknown check '" + item + "'");
    }
}

GeneratorSpec make_spec(const RawArgs& raw) {
    if (raw.kind == "cycle") return CycleSpec{raw.size};
    if (raw.kind == "complete") return CompleteSpec{raw.size};
    if (raw.kind == "wheel") return WheelSpec{raw.size};
    if (raw.kind == "random") return RandomSpec{raw.n, raw.p, raw.seed};
    if (raw.base.empty()) throw UsageError("--base: join_power needs a factor graph in graph6");
    return JoinPowerSpec{graph6_decode(raw.base), raw.copies};
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool looks_like_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        return line.compare(start, 2, "p ") == 0 || line.compare(start, 2, "c ") == 0 || line.substr(start) == "c";
    }
    return false;
}

std::vector<Graph> graph6_lines(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(graph6_decode(line));
    }
    return graphs;
}

std::vector<Graph> load_graphs(const InputSource& src, std::istream& in) {
    switch (src.kind) {
        case InputSource::Kind::Inline:
            return {graph6_decode(src.value)};
        case InputSource::Kind::File: {
            const std::string text = read_file(src.value);
            if (looks_like_dimacs(text)) return {dimacs_read(text)};
            std::istringstream lines(text);
            return graph6_lines(lines);
        }
        case InputSource::Kind::Stdin:
            return graph6_lines(in);
    }
    return {};
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(const Json& record, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Json) {
        out << record.dump() << '\n';
        return;
    }
    for (const auto& [key, value] : record.items()) out << key << ": " << scalar_text(value) << '\n';
    out << '\n';
}

int run_check(const Graph& g, Json& record) {
    const auto verdict = classify_membership(g);
    record["member"] = verdict.member;
    record["witness"] = verdict.witness ? Json(*verdict.witness) : Json(nullptr);
    return kOk;
}

int run_invariants(const Graph& g, Json& record) {
    record.update(Json(invariant_report(g)));
    return kOk;
}

int run_decompose(const Command& cmd, const Graph& g, Json& record) {
    const auto verdict = classify_membership(g);
    if (!verdict.member && !cmd.force) {
        throw NotAMember("decompose: graph contains an induced " + std::string(to_string(verdict.witness->kind)) +
                         "; pass --force to decompose anyway");
    }
    require_solver_size(g, "decompose");
    record["member"] = verdict.member;
    record["witness"] = verdict.witness ? Json(*verdict.witness) : Json(nullptr);

    int code = kOk;
    const int omega = clique_number(g).size;
    record["omega"] = omega;
    if (verdict.member && g.order() > 0) {
        const CliquePartition p = cmd.anchor ? lemma1_partition(g, cmd.anchor->first, cmd.anchor->second)
                                             : lemma1_partition(g);
        const bool sound = audit_partition(g, p, omega).ok();
        record["partition"] = p;
        record["partition_sound"] = sound;
        if (!sound) code = kFinding;
    } else {
        record["partition"] = nullptr;
        record["partition_sound"] = nullptr;
    }

    const std::optional<Edge> anchor = cmd.anchor ? cmd.anchor : proof_anchor(g);
    if (!anchor) {
        record["decomposition"] = nullptr;
        record["structure"] = nullptr;
        return code;
    }
    const auto d = decompose_at(g, anchor->first, anchor->second);
    const auto report = check_structure(g, d, omega);
    record["decomposition"] = d;
    record["structure"] = report;
    if (verdict.member && !report.all_hold()) code = kFinding;
    return code;
}

int run_verify(const Command& cmd, std::ostream& out) {
    std::ofstream jsonl;
    if (cmd.out_path) {
        jsonl.open(*cmd.out_path, std::ios::binary | std::ios::trunc);
        if (!jsonl) throw InvalidInput("cannot write '" + *cmd.out_path + "'");
    }
    const CampaignReport report = run_campaign(cmd.campaign, cmd.out_path ? &jsonl : nullptr);
    if (cmd.out_path && !jsonl) throw InvalidInput("write to '" + *cmd.out_path + "' failed");
    emit(summary_json(report, cmd.timing), cmd.format, out);
    if (report.engine_disagreements > 0) return kInternal;
    return report.violations.empty() ? kOk : kFinding;
}

int run_remark(const Command& cmd, std::ostream& out) {
    int code = kOk;
    for (const auto& row : remark_experiment(cmd.k_max)) {
        if (!row.witness_valid) code = kInternal;
        emit(Json(row), cmd.format, out);
    }
    return code;
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Exact invariants and structure checks for {3K1, K1+C4}-free graphs", "chibound"};
    app.require_subcommand(1);

    Command cmd;
    RawArgs raw;

    auto* check = app.add_subcommand("check", "Decide membership; report a witness when excluded");
    auto* invariants = app.add_subcommand("invariants", "n, m, max degree, alpha, omega, chi with certificates");
    auto* decompose = app.add_subcommand("decompose", "Clique partition, neighbourhood decomposition, claims S1..S7");
    auto* verify = app.add_subcommand("verify-bound", "Exhaustive or random campaign checking the chromatic bound");
    auto* generate = app.add_subcommand("generate", "Print the graph6 string of a generated graph");
    auto* remark = app.add_subcommand("remark", "Join powers of C5 and of both wheel readings");

    for (auto* sub : {check, invariants, decompose}) add_input(sub, raw);
    for (auto* sub : {check, invariants, decompose, verify, generate, remark}) add_format(sub, raw);

    decompose->add_option("--anchor", raw.anchor, "Non-adjacent pair 'v,w' to anchor at");
    decompose->add_flag("--force", cmd.force, "Decompose non-members too (claims are reported, not asserted)");

    auto* ex = verify->add_flag("--exhaustive", raw.exhaustive, "Every labelled graph with min-n <= n <= max-n");
    auto* rnd = verify->add_flag("--random", raw.random, "Random graphs G(n, p)");
    ex->excludes(rnd);
    verify->add_option("--min-n", cmd.campaign.min_n, "Smallest order (exhaustive)")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-n", cmd.campaign.max_n, "Largest order (exhaustive)")->check(CLI::NonNegativeNumber);
    verify->add_option("--n", cmd.campaign.n, "Order of sampled graphs (random)")->check(CLI::NonNegativeNumber);
    verify->add_option("--count", cmd.campaign.count, "Number of samples (random)");
    verify->add_option("--p", cmd.campaign.p, "Edge probability (random)")->check(CLI::Range(0.0, 1.0));
    verify->add_option("--seed", cmd.campaign.seed, "Seed (random)");
    verify->add_option("--threads", cmd.campaign.threads, "Worker threads, 0 = all cores")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--checks", raw.checks, "Comma list of bound,structure,clique-cover,engines");
    verify->add_flag("--default-anchor-only", raw.default_anchor_only,
                     "Check structure only at the default anchor pair");
    verify->add_option("--out", raw.out, "JSONL file for violation, extremal and summary records");
    verify->add_flag("--timing", cmd.timing, "Include wall-clock seconds in the summary");

    generate->add_option("--kind", raw.kind, "Graph family")
        ->required()
        ->check(CLI::IsMember({"cycle", "complete", "wheel", "join_power", "random"}));
    generate->add_option("--size", raw.size, "Cycle length, clique size or wheel rim");
    generate->add_option("--base", raw.base, "Factor graph (graph6) for join_power");
    generate->add_option("--copies", raw.copies, "Copy count for join_power");
    generate->add_option("--n", raw.n, "Order (random)");
    generate->add_option("--p", raw.p, "Edge probability (random)")->check(CLI::Range(0.0, 1.0));
    generate->add_option("--seed", raw.seed, "Seed (random)");

    remark->add_option("--k-max", cmd.k_max, "Largest copy count")->check(CLI::PositiveNumber);

    std::vector<const char*> argv{"chibound"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        std::ostringstream out;
        std::ostringstream err;
        app.exit(e, out, err);
        cmd.help = out.str() + err.str();
        return cmd;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    cmd.format = raw.format == "text" ? OutputFormat::Text : OutputFormat::Json;
    if (check->parsed()) cmd.subcommand = Subcommand::Check;
    else if (invariants->parsed()) cmd.subcommand = Subcommand::Invariants;
    else if (decompose->parsed()) cmd.subcommand = Subcommand::Decompose;
    else if (verify->parsed()) cmd.subcommand = Subcommand::VerifyBound;
    else if (generate->parsed()) cmd.subcommand = Subcommand::Generate;
    else cmd.subcommand = Subcommand::Remark;

    const bool needs_graph = cmd.subcommand == Subcommand::Check || cmd.subcommand == Subcommand::Invariants ||
                             cmd.subcommand == Subcommand::Decompose;
    if (needs_graph) {
        CLI::App* sub = check->parsed() ? check : invariants->parsed() ? invariants : decompose;
        if (sub->count("--g6")) cmd.input = InputSource{InputSource::Kind::Inline, raw.g6};
        else if (sub->count("--file")) cmd.input = InputSource{InputSource::Kind::File, raw.file};
        else if (raw.use_stdin) cmd.input = InputSource{InputSource::Kind::Stdin, {}};
        else throw UsageError(sub->get_name() + ": one of --g6, --file or --stdin is required");
    }
    if (!raw.anchor.empty()) cmd.anchor = parse_anchor(raw.anchor);

    if (cmd.subcommand == Subcommand::VerifyBound) {
        if (!raw.exhaustive && !raw.random) throw UsageError("verify-bound: one of --exhaustive or --random is required");
        cmd.campaign.mode = raw.exhaustive ? CampaignMode::Exhaustive : CampaignMode::Random;
        apply_checks(raw.checks, cmd.campaign);
        cmd.campaign.all_anchor_pairs = !raw.default_anchor_only;
        if (!raw.out.empty()) cmd.out_path = raw.out;
    }
    if (cmd.subcommand == Subcommand::Generate) {
        if (raw.kind == "join_power" && raw.base.empty()) {
            throw UsageError("--base: join_power needs a factor graph in graph6");
        }
        try {
            cmd.spec = make_spec(raw);
        } catch (const UsageError&) {
            throw;
        } catch (const InvalidInput& e) {
            throw UsageError(std::string("--base: ") + e.what());
        }
    }
    return cmd;
}

int execute(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
    (void)err;
    if (cmd.help) {
        out << *cmd.help;
        return kOk;
    }
    switch (cmd.subcommand) {
        case Subcommand::VerifyBound:
            return run_verify(cmd, out);
        case Subcommand::Remark:
            return run_remark(cmd, out);
        case Subcommand::Generate: {
            const Graph g = generate(cmd.spec);
            emit(Json{{"graph6", graph6_encode(g)}, {"n", g.order()}, {"m", g.edge_count()}}, cmd.format, out);
            return kOk;
        }
        default:
            break;
    }

    int code = kOk;
    for (const Graph& g : load_graphs(*cmd.input, in)) {
        Json record{{"graph6", graph6_encode(g)}};
        int graph_code = kOk;
        switch (cmd.subcommand) {
            case Subcommand::Check: graph_code = run_check(g, record); break;
            case Subcommand::Invariants: graph_code = run_invariants(g, record); break;
            default: graph_code = run_decompose(cmd, g, record); break;
        }
        emit(record, cmd.format, out);
        code = std::max(code, graph_code);
    }
    return code;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        return execute(parse_args(args), in, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
        return kInvalidInput;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace chibound::cli
