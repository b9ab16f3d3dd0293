#include "tensorgraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tensorgraph/bubbles.hpp"
#include "tensorgraph/checks.hpp"
#include "tensorgraph/dual.hpp"
#include "tensorgraph/io.hpp"
#include "tensorgraph/sampling.hpp"
#include "tensorgraph/topology.hpp"

namespace tensorgraph::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Outcome {
    int exit_code = 0;
    ordered_json payload = ordered_json::object();
    std::string text;
};

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownFormat:
    case ErrorCode::VersionUnsupported:
    case ErrorCode::BadParameters:
    case ErrorCode::WrongRank:
    case ErrorCode::BadCardinal:
        return 2;
    case ErrorCode::Internal:
        return 3;
    default:
        return 1;
    }
}

/// Thrown for inputs a command does not accept (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ColoredGraph require_colored(const Graph& g, const std::string& command)
{
    if (const auto* c = std::get_if<ColoredGraph>(&g))
        return *c;
    throw UsageError(command + " needs a colored-tensor-graph document");
}

std::string edge_text(const ColoredGraph& g, std::size_t e)
{
    const auto& edge = g.edges()[e];
    return std::to_string(edge.color) + ":" + g.label(edge.white) + "-" + g.label(edge.black);
}

std::string slot_text(const StrandedGraph& s, const StrandSlot& slot)
{
    return s.half_edge_label(slot.half_edge) + "~" + s.half_edge_label({slot.half_edge.vertex, slot.label});
}

ordered_json counts_json(const RibbonCounts& c)
{
    ordered_json j;
    j["V"] = c.vertices;
    j["E"] = c.edges;
    j["F"] = c.faces;
    j["chi"] = c.chi;
    j["genus"] = c.genus ? ordered_json(*c.genus) : ordered_json(nullptr);
    j["planar"] = c.planar();
    return j;
}

std::string counts_text(const RibbonCounts& c)
{
    std::ostringstream out;
    out << "V=" << c.vertices << " E=" << c.edges << " F=" << c.faces << " chi=" << c.chi;
    if (c.genus)
        out << " genus=" << *c.genus << (c.planar() ? " planar" : " non-planar");
    else
        out << " genus undefined";
    return out.str();
}

// ---------------------------------------------------------------------------

Outcome cmd_validate(const std::string& file)
{
    const ValidationReport report = validate_document(read_file(file));
    Outcome o;
    o.exit_code = report.valid() ? 0 : 1;
    o.payload["valid"] = report.valid();
    o.payload["violations"] = ordered_json::array();
    std::ostringstream text;
    text << (report.valid() ? "valid" : "invalid") << "\n";
    for (const auto& v : report.violations) {
        ordered_json j;
        j["rule"] = std::string(to_string(v.rule));
        j["element"] = v.element;
        j["message"] = v.message;
        o.payload["violations"].push_back(std::move(j));
        text << "  " << to_string(v.rule) << " at " << v.element << ": " << v.message << "\n";
    }
    o.text = text.str();
    return o;
}

Outcome cmd_faces(const std::string& file)
{
    const Graph graph = parse_graph(read_file(file));
    Outcome o;
    std::ostringstream text;
    o.payload["faces"] = ordered_json::array();
    if (const auto* g = std::get_if<ColoredGraph>(&graph)) {
        const ColorFaces faces = bicolored_faces(*g);
        o.payload["count"] = faces.count();
        text << faces.count() << " faces\n";
        for (const auto& f : faces.faces) {
            ordered_json j;
            j["colors"] = {f.first, f.second};
            j["length"] = f.edges.size();
            j["edges"] = ordered_json::array();
            text << "  {" << f.first << "," << f.second << "} length " << f.edges.size() << ":";
            for (std::size_t e : f.edges) {
                j["edges"].push_back(edge_text(*g, e));
                text << " " << edge_text(*g, e);
            }
            text << "\n";
            o.payload["faces"].push_back(std::move(j));
        }
    } else {
        const auto& s = std::get<StrandedGraph>(graph);
        const StrandFaces faces = trace_faces(s);
        o.payload["count"] = faces.count();
        text << faces.count() << " faces\n";
        for (const auto& f : faces.faces) {
            ordered_json j;
            j["length"] = f.size() / 2;
            j["slots"] = ordered_json::array();
            text << "  length " << f.size() / 2 << ":";
            for (const auto& slot : f) {
                j["slots"].push_back(slot_text(s, slot));
                text << " " << slot_text(s, slot);
            }
            text << "\n";
            o.payload["faces"].push_back(std::move(j));
        }
    }
    o.text = text.str();
    return o;
}

Outcome cmd_bubbles(const std::string& file, int k)
{
    const ColoredGraph g = require_colored(parse_graph(read_file(file)), "bubbles");
    const BubbleCensus census = bubble_census(g, k);
    Outcome o;
    std::ostringstream text;
    o.payload["k"] = k;
    o.payload["total"] = census.total;
    o.payload["planar_count"] = census.planar_count;
    o.payload["genus_histogram"] = ordered_json::object();
    for (auto [genus, count] : census.genus_histogram)
        o.payload["genus_histogram"][std::to_string(genus)] = count;
    o.payload["records"] = ordered_json::array();
    text << census.total << " bubbles, " << census.planar_count << " planar\n";
    for (const auto& r : census.records) {
        const DetachedBubble d = r.bubble.detach();
        ordered_json j;
        j["colors"] = d.colors;
        j["vertices"] = d.vertices;
        j.update(counts_json(r.counts));
        o.payload["records"].push_back(std::move(j));
        text << "  colors {";
        for (std::size_t i = 0; i < d.colors.size(); ++i)
            text << (i ? "," : "") << d.colors[i];
        text << "} " << counts_text(r.counts) << "\n";
    }
    o.text = text.str();
    return o;
}

Outcome genus_of_counts(const std::vector<long long>& counts)
{
    if (counts.size() != 3 || std::any_of(counts.begin(), counts.end(), [](long long x) { return x < 0; }))
        throw UsageError("--counts needs three non-negative integers V E F");
    const auto v = static_cast<std::size_t>(counts[0]);
    const auto e = static_cast<std::size_t>(counts[1]);
    const auto f = static_cast<std::size_t>(counts[2]);
    genus(v, e, f, Connectivity::connected); // throws OddEuler / NegativeGenus
    Outcome o;
    const RibbonCounts r = ribbon_counts(v, e, f, Connectivity::connected);
    o.payload["components"] = ordered_json::array({counts_json(r)});
    o.text = counts_text(r) + "\n";
    return o;
}

Outcome cmd_genus(const std::string& file, const std::vector<long long>& counts)
{
    if (file.empty())
        return genus_of_counts(counts);

    const Graph graph = parse_graph(read_file(file));
    std::vector<RibbonCounts> per_component;
    if (const auto* g = std::get_if<ColoredGraph>(&graph)) {
        if (g->rank() != 2)
            throw UsageError("genus takes a rank-2 graph, got rank " + std::to_string(g->rank()));
        for (const auto& b : enumerate_bubbles(*g, 3))
            per_component.push_back(bubble_ribbon(b));
    } else {
        const auto& s = std::get<StrandedGraph>(graph);
        if (s.rank() != 2)
            throw UsageError("genus takes a rank-2 graph, got rank " + std::to_string(s.rank()));
        const auto comps = stranded_components(s);
        std::vector<std::size_t> owner(s.num_vertices());
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (std::size_t v : comps[c])
                owner[v] = c;
        std::vector<std::size_t> edges(comps.size(), 0), faces(comps.size(), 0);
        for (const auto& e : s.edges())
            ++edges[owner[e.ends[0].vertex]];
        for (const auto& f : trace_faces(s).faces)
            ++faces[owner[f.front().half_edge.vertex]];
        for (std::size_t c = 0; c < comps.size(); ++c)
            per_component.push_back(ribbon_counts(comps[c].size(), edges[c], faces[c], Connectivity::connected));
    }

    Outcome o;
    o.payload["components"] = ordered_json::array();
    for (const auto& r : per_component) {
        o.payload["components"].push_back(counts_json(r));
        o.text += counts_text(r) + "\n";
        if (!r.genus)
            o.exit_code = 1;
    }
    return o;
}

Outcome cmd_dual(const std::string& file)
{
    const ColoredGraph g = require_colored(parse_graph(read_file(file)), "dual");
    const DualComplexCounts c = dual_counts(g);
    Outcome o;
    o.payload["tetrahedra"] = c.tetrahedra;
    o.payload["triangles"] = c.triangles;
    o.payload["segments"] = c.segments;
    o.payload["points"] = c.points;
    o.payload["euler"] = complex_euler(c);
    std::ostringstream text;
    text << "tetrahedra=" << c.tetrahedra << " triangles=" << c.triangles << " segments=" << c.segments
         << " points=" << c.points << " euler=" << complex_euler(c) << "\n";
    o.text = text.str();
    return o;
}

StrandedGraph as_stranded(const Graph& g)
{
    if (const auto* c = std::get_if<ColoredGraph>(&g))
        return to_stranded(*c);
    return std::get<StrandedGraph>(g);
}

Outcome cmd_colorable(const std::string& file)
{
    const StrandedGraph s = as_stranded(parse_graph(read_file(file)));
    const ColorabilityResult r = colorability(s);
    Outcome o;
    o.exit_code = r.colorable() ? 0 : 1;
    o.payload["colorable"] = r.colorable();
    if (r.colorable()) {
        o.payload["witness"] = ordered_json::parse(serialize_graph(r.coloring->witness));
        o.text = "colorable\n" + serialize_graph(r.coloring->witness);
    } else {
        o.payload["obstruction"] = r.obstruction;
        o.text = "not colorable: " + r.obstruction + "\n";
    }
    return o;
}

Outcome cmd_mo(const std::string& file, const std::string& pattern_name)
{
    const StrandedGraph s = as_stranded(parse_graph(read_file(file)));
    const SignPattern pattern = pattern_name == "block" ? SignPattern::block() : SignPattern::alternating();
    const MoResult r = mo_admissibility(s, pattern);
    Outcome o;
    o.payload["pattern"] = pattern_name;
    o.payload["admissible"] = r.admissible();
    if (r.admissible()) {
        std::ostringstream text;
        text << "admissible (" << pattern_name << ")\n";
        o.payload["signs"] = ordered_json::object();
        for (std::size_t v = 0; v < s.num_vertices(); ++v) {
            std::string signs;
            for (int p = 0; p < 4; ++p)
                signs += r.assignment->sign({v, p}) == Sign::positive ? '+' : '-';
            ordered_json j;
            j["rotation"] = r.assignment->rotations[v];
            j["signs"] = signs;
            o.payload["signs"][s.vertices()[v].id] = std::move(j);
            text << "  " << s.vertices()[v].id << " " << signs << "\n";
        }
        o.text = text.str();
    } else {
        o.exit_code = 1;
        const auto& ev = *r.evidence;
        ordered_json evidence;
        evidence["component"] = ordered_json::array();
        for (std::size_t v : ev.component)
            evidence["component"].push_back(s.vertices()[v].id);
        evidence["conflict_edges"] = ordered_json::array();
        for (std::size_t e : ev.conflict_edges)
            evidence["conflict_edges"].push_back(
                {s.half_edge_label(s.edges()[e].ends[0]), s.half_edge_label(s.edges()[e].ends[1])});
        evidence["message"] = ev.message;
        o.payload["evidence"] = std::move(evidence);
        o.text = "NotAdmissible: " + ev.message + "\n";
    }
    return o;
}

void write_output(const std::string& path, const std::string& content, Outcome& o)
{
    if (path.empty()) {
        o.text = content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + path);
    out << content;
    o.text = "wrote " + path + "\n";
}

ordered_json census_json(const CensusReport& r)
{
    ordered_json j;
    j["rank"] = r.rank;
    j["n"] = r.n;
    j["samples"] = r.samples;
    j["generator_id"] = r.generator;
    j["ensemble"] = "independent uniform permutation per color";
    j["mean_faces"] = r.mean_faces.to_string();
    j["bubble_count_distribution"] = ordered_json::object();
    for (auto [count, freq] : r.bubble_count_distribution)
        j["bubble_count_distribution"][std::to_string(count)] = freq;
    j["genus_histogram"] = ordered_json::object();
    for (auto [genus, count] : r.genus_histogram)
        j["genus_histogram"][std::to_string(genus)] = count;
    j["planar_fraction"] = r.planar_fraction.to_string();
    j["connected_fraction"] = r.connected_fraction.to_string();
    return j;
}

std::string render(const Outcome& o, bool as_json, const std::string& command)
{
    if (!as_json)
        return o.text;
    ordered_json doc;
    doc["meta"] = {{"tool", tool_name}, {"version", tool_version}};
    doc["command"] = command;
    for (auto& [key, value] : o.payload.items())
        doc[key] = value;
    return doc.dump(2) + "\n";
}

} // namespace

CommandResult run(const std::vector<std::string>& args)
{
    CLI::App app{"Combinatorics of colored and stranded tensor graphs", tool_name};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    std::string file;
    std::string output;
    int k = 3;
    std::vector<long long> counts;
    std::string pattern = "alternating";
    int rank = 3;
    std::size_t size = 1;
    std::uint64_t seed = 0;
    bool connected = false;
    std::size_t max_attempts = 1000;
    std::size_t samples = 1000;
    unsigned jobs = 1;

    auto* validate = app.add_subcommand("validate", "Check a graph document");
    validate->add_option("file", file, "Graph document")->required();

    auto* faces = app.add_subcommand("faces", "List faces (closed strand circuits)");
    faces->add_option("file", file, "Graph document")->required();

    auto* bubbles = app.add_subcommand("bubbles", "Enumerate bubbles of a colored graph");
    bubbles->add_option("file", file, "Colored graph document")->required();
    bubbles->add_option("--k", k, "Number of colors per bubble")->capture_default_str();

    auto* genus_cmd = app.add_subcommand("genus", "Genus of a ribbon graph: rank-2 document or --counts V E F");
    genus_cmd->add_option("file", file, "Rank-2 graph document");
    genus_cmd->add_option("--counts", counts, "Vertex, edge and face counts")->expected(3);

    auto* dual = app.add_subcommand("dual", "Simplex counts of the dual triangulation");
    dual->add_option("file", file, "Rank-3 colored graph document")->required();

    auto* check = app.add_subcommand("check", "Decide structural properties");
    check->require_subcommand(1);
    auto* colorable_cmd = check->add_subcommand("colorable", "Search for a coloring");
    colorable_cmd->add_option("file", file, "Graph document")->required();
    auto* mo = check->add_subcommand("mo", "Multi-orientability");
    mo->add_option("file", file, "Graph document")->required();
    mo->add_option("--pattern", pattern, "Corner sign pattern")
        ->check(CLI::IsMember({"alternating", "block"}))
        ->capture_default_str();

    auto* random = app.add_subcommand("random", "Sample a colored graph");
    random->add_option("--rank", rank)->capture_default_str();
    random->add_option("--size", size, "Number of white vertices")->capture_default_str();
    random->add_option("--seed", seed)->capture_default_str();
    random->add_flag("--connected", connected, "Reject disconnected samples");
    random->add_option("--max-attempts", max_attempts)->capture_default_str();
    random->add_option("-o,--output", output, "Output file (default stdout)");

    auto* census_cmd = app.add_subcommand("census", "Monte Carlo census of the random ensemble");
    census_cmd->add_option("--rank", rank)->capture_default_str();
    census_cmd->add_option("--size", size)->capture_default_str();
    census_cmd->add_option("--samples", samples)->capture_default_str();
    census_cmd->add_option("--seed", seed)->capture_default_str();
    census_cmd->add_option("--jobs", jobs, "Worker threads; never changes the output")->capture_default_str();

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
    dot->add_option("file", file, "Graph document")->required();
    dot->add_option("-o,--output", output, "Output file (default stdout)");

    for (auto* sub : {validate, faces, bubbles, genus_cmd, dual, colorable_cmd, mo, census_cmd})
        sub->add_flag("--json", as_json, "Machine-readable output");

    CommandResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::ParseError& err) {
        result.exit_code = 2;
        result.err = std::string(err.what()) + "\n";
        return result;
    }

    std::string command;
    try {
        Outcome o;
        if (*validate) {
            command = "validate";
            o = cmd_validate(file);
        } else if (*faces) {
            command = "faces";
            o = cmd_faces(file);
        } else if (*bubbles) {
            command = "bubbles";
            o = cmd_bubbles(file, k);
        } else if (*genus_cmd) {
            command = "genus";
            if (file.empty() == counts.empty())
                throw UsageError("genus needs either a document or --counts V E F");
            o = cmd_genus(file, counts);
        } else if (*dual) {
            command = "dual";
            o = cmd_dual(file);
        } else if (*colorable_cmd) {
            command = "check colorable";
            o = cmd_colorable(file);
        } else if (*mo) {
            command = "check mo";
            o = cmd_mo(file, pattern);
        } else if (*random) {
            command = "random";
            const ColoredGraph g = connected ? random_connected(rank, size, Seed{seed}, max_attempts)
                                             : random_colored(rank, size, Seed{seed});
            write_output(output, serialize_graph(g), o);
            as_json = false;
        } else if (*census_cmd) {
            command = "census";
            const CensusReport r = census(rank, size, samples, Seed{seed}, jobs);
            o.payload = census_json(r);
            for (auto& [key, value] : o.payload.items())
                o.text += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
        } else if (*dot) {
            command = "export-dot";
            write_output(output, export_dot(parse_graph(read_file(file))), o);
            as_json = false;
        }
        result.exit_code = o.exit_code;
        result.out = render(o, as_json, command);
    } catch (const UsageError& err) {
        result.exit_code = 2;
        result.err = std::string(err.what()) + "\n";
    } catch (const Error& err) {
        result.exit_code = exit_code_for(err.code());
        result.err = std::string(err.what()) + "\n";
    } catch (const std::exception& err) {
        result.exit_code = 3;
        result.err = std::string("internal error: ") + err.what() + "\n";
    }
    return result;
}

} // namespace tensorgraph::cli
