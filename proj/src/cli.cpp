#include "wssim/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "wssim/discovery.hpp"
#include "wssim/error.hpp"
#include "wssim/graph_io.hpp"
#include "wssim/ingest.hpp"
#include "wssim/metrics.hpp"
#include "wssim/network.hpp"
#include "wssim/report_io.hpp"

namespace wssim::cli {

namespace {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Writes through `emit` to `path`, or to `out` when the path is empty or "-".
void write_output(const std::string& path, std::ostream& out,
                  const std::function<void(std::ostream&)>& emit) {
    if (path.empty() || path == "-") {
        emit(out);
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoFailure("cannot write " + path);
    emit(file);
    if (!file) throw IoFailure("error while writing " + path);
}

ParameterSet split_names(const std::string& list) {
    ParameterSet set;
    std::string item;
    std::istringstream in(list);
    while (std::getline(in, item, ',')) {
        try {
            set.emplace(item);
        } catch (const std::invalid_argument&) {
            // empty list entries are skipped
        }
    }
    return set;
}

std::string join(const ParameterSet& set) {
    std::string out = "{";
    for (const auto& p : set) {
        if (out.size() > 1) out += ',';
        out += p.text();
    }
    return out + '}';
}

const CLI::Validator kFraction(
    [](std::string& value) -> std::string {
        try {
            const double v = std::stod(value);
            if (v > 0.0 && v <= 1.0) return {};
        } catch (const std::exception&) {
        }
        return "threshold must lie in (0, 1], got " + value;
    },
    "FRACTION in (0,1]");

struct Options {
    std::string input;
    std::string output;
    std::string extract = "parts";
    std::string sim = "full";
    std::string format = "graphml";
    std::size_t er_replicates = 100;
    std::uint64_t seed = kDefaultSeed;
    double threshold = kDefaultCoverageThreshold;
    std::string inputs;
    std::string outputs;
    std::string max_level = "relation";
    bool bridges = false;
    bool exact = false;
    bool json = false;
};

int cmd_ingest(const Options& o, std::ostream& out, std::ostream& err) {
    const auto result = load_collection(o.input, *parse_extraction_mode(o.extract));
    for (const auto& w : result.warnings) err << "warning: " << w << '\n';
    if (result.collection.empty()) {
        err << "error: no operation extracted from " << o.input << '\n';
        return kIngestFailure;
    }
    write_output(o.output, out, [&](std::ostream& s) { write_canonical(result.collection, s); });
    err << "ingested " << result.collection.size() << " operations from " << result.files_read
        << " files (" << result.warnings.size() << " warnings)\n";
    return kSuccess;
}

int cmd_build(const Options& o, std::ostream& out) {
    const auto collection = read_canonical(read_file(o.input));
    const auto network = build_network(collection, *parse_similarity_kind(o.sim));
    write_output(o.output, out,
                 [&](std::ostream& s) { write_graph(network, *parse_graph_format(o.format), s); });
    return kSuccess;
}

int cmd_export(const Options& o, std::ostream& out) {
    const auto network = read_graphml(read_file(o.input));
    write_output(o.output, out,
                 [&](std::ostream& s) { write_graph(network, *parse_graph_format(o.format), s); });
    return kSuccess;
}

int cmd_analyze(const Options& o, std::ostream& out) {
    const auto network = read_graphml(read_file(o.input));
    const auto report = full_report(network, {o.threshold, o.er_replicates, o.seed});
    const auto record = to_json(report);
    if (o.json) {
        out << record.dump(2) << '\n';
    } else {
        print_report_table(report, out);
    }
    if (!o.output.empty())
        write_output(o.output, out, [&](std::ostream& s) { s << record.dump(2) << '\n'; });
    return kSuccess;
}

int cmd_communities(const Options& o, std::ostream& out) {
    const auto trimmed = trim(read_graphml(read_file(o.input)));
    const auto communities = components(trimmed);
    const auto k = topk_coverage(trimmed, o.threshold);
    if (o.json) {
        auto list = nlohmann::json::array();
        for (const auto& c : communities) {
            auto members = nlohmann::json::array();
            for (auto m : c.members) members.push_back(trimmed.node(m).id);
            list.push_back({{"ordinal", c.ordinal},
                            {"nodes", c.members.size()},
                            {"links", c.internal_links},
                            {"members", std::move(members)}});
        }
        nlohmann::json record{{"kind", to_string(trimmed.kind())},
                              {"threshold", o.threshold},
                              {"k", k ? nlohmann::json(*k) : nlohmann::json(nullptr)},
                              {"communities", std::move(list)}};
        out << record.dump(2) << '\n';
        return kSuccess;
    }
    out << "communities: " << communities.size() << '\n';
    out << "k: " << (k ? std::to_string(*k) : std::string("undefined")) << " (threshold " << o.threshold
        << ")\n";
    print_communities(trimmed, communities, out);
    return kSuccess;
}

int cmd_query(const Options& o, std::ostream& out) {
    const auto collection = read_canonical(read_file(o.input));
    const auto goal = split_names(o.outputs);
    if (goal.empty()) throw UsageFailure("--outputs must name at least one parameter");
    const Request request(split_names(o.inputs), goal);

    if (o.exact) {
        const auto ids = exact_matches(request, collection);
        if (o.json) {
            out << nlohmann::json(ids).dump(2) << '\n';
        } else {
            for (const auto& id : ids) out << "exact " << id << '\n';
        }
        return kSuccess;
    }

    const auto matches = match_request(request, collection, *parse_match_level(o.max_level));
    auto records = nlohmann::json::array();
    for (const auto& m : matches) {
        auto record = to_json(m);
        std::vector<std::string> bridges;
        if (o.bridges && m.level == MatchLevel::Relation) {
            bridges = suggest_bridge(m, collection, request);
            record["bridges"] = bridges;
        }
        if (o.json) {
            records.push_back(std::move(record));
            continue;
        }
        out << to_string(m.level) << ' ' << m.operation_id << " surplus=" << join(m.surplus_outputs)
            << " missing=" << join(m.missing_outputs) << " unmet=" << join(m.unmet_inputs) << '\n';
        for (const auto& b : bridges) out << "  bridge " << b << '\n';
    }
    if (o.json) out << records.dump(2) << '\n';
    if (!o.json && matches.empty()) out << "no match\n";
    return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Similarity networks of Web-service operations", "wssim"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> kinds{"full", "partial", "excess", "relation"};
    const std::vector<std::string> formats{"graphml", "dot", "csv"};

    auto* ingest = app.add_subcommand("ingest", "Parse a directory of WSDL files into a canonical collection");
    ingest->add_option("directory", o.input, "Corpus directory")->required();
    ingest->add_option("-o,--out", o.output, "Canonical collection file (stdout if omitted)");
    ingest->add_option("--extract", o.extract, "Parameter names: message parts or flattened elements")
        ->check(CLI::IsMember({"parts", "flatten"}));

    auto* build = app.add_subcommand("build", "Build a similarity network from a canonical collection");
    build->add_option("collection", o.input, "Canonical collection file")->required();
    build->add_option("--sim", o.sim, "Similarity function")->check(CLI::IsMember(kinds));
    build->add_option("--format", o.format, "Graph format")->check(CLI::IsMember(formats));
    build->add_option("-o,--out", o.output, "Graph file (stdout if omitted)");

    auto* export_cmd = app.add_subcommand("export", "Convert a GraphML network to another format");
    export_cmd->add_option("graph", o.input, "GraphML file")->required();
    export_cmd->add_option("--format", o.format, "Graph format")->check(CLI::IsMember(formats));
    export_cmd->add_option("-o,--out", o.output, "Output file (stdout if omitted)");

    auto* analyze = app.add_subcommand("analyze", "Report network properties with a random-graph baseline");
    analyze->add_option("graph", o.input, "GraphML file")->required();
    analyze->add_option("--er-replicates", o.er_replicates, "Random graphs drawn for the baseline (0 skips)");
    analyze->add_option("--seed", o.seed, "Seed of the random baseline");
    analyze->add_option("--threshold", o.threshold, "Community coverage threshold")->check(kFraction);
    analyze->add_option("-o,--out", o.output, "Write the machine-readable report here");
    analyze->add_flag("--json", o.json, "Print the machine-readable report instead of the table");

    auto* communities = app.add_subcommand("communities", "List communities and the coverage rank k");
    communities->add_option("graph", o.input, "GraphML file")->required();
    communities->add_option("--threshold", o.threshold, "Coverage threshold")->check(kFraction);
    communities->add_flag("--json", o.json, "Machine-readable output");

    auto* query = app.add_subcommand("query", "Find operations for a request along the relaxation ladder");
    query->add_option("collection", o.input, "Canonical collection file")->required();
    query->add_option("--inputs", o.inputs, "Available inputs, comma separated");
    query->add_option("--outputs", o.outputs, "Desired outputs, comma separated")->required();
    query->add_option("--max-level", o.max_level, "Loosest level returned")
        ->check(CLI::IsMember({"full", "excess", "partial", "relation"}));
    query->add_flag("--bridges", o.bridges, "Suggest one-hop bridges for relation matches");
    query->add_flag("--exact", o.exact, "Only operations with exactly these inputs and outputs");
    query->add_flag("--json", o.json, "Machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (ingest->parsed()) return cmd_ingest(o, out, err);
        if (build->parsed()) return cmd_build(o, out);
        if (export_cmd->parsed()) return cmd_export(o, out);
        if (analyze->parsed()) return cmd_analyze(o, out);
        if (communities->parsed()) return cmd_communities(o, out);
        if (query->parsed()) return cmd_query(o, out);
    } catch (const UsageFailure& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const EmptyGoalError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const EmptyCorpusError& e) {
        err << "error: " << e.what() << '\n';
        return kIngestFailure;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << '\n';
        return kFormatFailure;
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kIngestFailure;
    }
    return kUsage;
}

}  // namespace wssim::cli
