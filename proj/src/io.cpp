#include "tensorgraph/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "tensorgraph/checks.hpp"

namespace tensorgraph {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const json& field(const json& object, const char* key, const std::string& where)
{
    if (!object.is_object())
        throw Error(ErrorCode::ParseError, where + ": expected an object");
    auto it = object.find(key);
    if (it == object.end())
        throw Error(ErrorCode::ParseError, where + ": missing field '" + key + "'");
    return *it;
}

int integer(const json& value, const std::string& where)
{
    if (!value.is_number_integer())
        throw Error(ErrorCode::ParseError, where + ": expected an integer");
    const auto x = value.get<long long>();
    if (x < -(1LL << 30) || x > (1LL << 30))
        throw Error(ErrorCode::ParseError, where + ": integer out of range");
    return static_cast<int>(x);
}

std::string text(const json& value, const std::string& where)
{
    if (!value.is_string())
        throw Error(ErrorCode::ParseError, where + ": expected a string");
    return value.get<std::string>();
}

const json& array(const json& value, const std::string& where)
{
    if (!value.is_array())
        throw Error(ErrorCode::ParseError, where + ": expected an array");
    return value;
}

std::vector<std::string> labels(const json& value, const std::string& where)
{
    std::vector<std::string> out;
    const json& list = array(value, where);
    for (std::size_t i = 0; i < list.size(); ++i)
        out.push_back(text(list[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

struct Header {
    std::string format;
    int rank;
};

json parse_json(std::string_view document)
{
    try {
        return json::parse(document);
    } catch (const json::parse_error& err) {
        throw Error(ErrorCode::ParseError, "malformed JSON at byte " + std::to_string(err.byte) + ": " + err.what());
    }
}

Header read_header(const json& doc)
{
    const std::string format = text(field(doc, "format", "document"), "format");
    if (format != colored_format && format != stranded_format)
        throw Error(ErrorCode::UnknownFormat, "unrecognized format '" + format + "'");
    const int version = integer(field(doc, "version", "document"), "version");
    if (version != document_version)
        throw Error(ErrorCode::VersionUnsupported, "version " + std::to_string(version) + " is not supported");
    return {format, integer(field(doc, "rank", "document"), "rank")};
}

struct ColoredBody {
    std::vector<std::string> whites;
    std::vector<std::string> blacks;
    std::vector<ColoredEdgeSpec> edges;
};

ColoredBody read_colored(const json& doc)
{
    ColoredBody body{labels(field(doc, "whites", "document"), "whites"),
                     labels(field(doc, "blacks", "document"), "blacks"),
                     {}};
    const json& edges = array(field(doc, "edges", "document"), "edges");
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string where = "edges[" + std::to_string(k) + "]";
        body.edges.push_back({integer(field(edges[k], "color", where), where + ".color"),
                              text(field(edges[k], "white", where), where + ".white"),
                              text(field(edges[k], "black", where), where + ".black")});
    }
    return body;
}

StrandedGraph read_stranded(const json& doc, int rank)
{
    std::vector<StrandedVertex> vertices;
    const json& vs = array(field(doc, "vertices", "document"), "vertices");
    for (std::size_t v = 0; v < vs.size(); ++v) {
        const std::string where = "vertices[" + std::to_string(v) + "]";
        vertices.push_back({text(field(vs[v], "id", where), where + ".id"),
                            labels(field(vs[v], "halfedges", where), where + ".halfedges")});
    }
    std::vector<StrandedEdgeSpec> edges;
    const json& es = array(field(doc, "edges", "document"), "edges");
    for (std::size_t k = 0; k < es.size(); ++k) {
        const std::string where = "edges[" + std::to_string(k) + "]";
        auto ends = labels(field(es[k], "halfedges", where), where + ".halfedges");
        if (ends.size() != 2)
            throw Error(ErrorCode::ParseError, where + ".halfedges: expected exactly two labels");
        StrandedEdgeSpec spec{{ends[0], ends[1]}, {}};
        if (auto it = es[k].find("strand_permutation"); it != es[k].end()) {
            const json& perm = array(*it, where + ".strand_permutation");
            for (std::size_t i = 0; i < perm.size(); ++i)
                spec.strand_permutation.push_back(integer(perm[i], where + ".strand_permutation[" + std::to_string(i) + "]"));
            if (spec.strand_permutation.empty())
                throw Error(ErrorCode::BadPermutation, where + ": empty strand permutation");
        }
        edges.push_back(std::move(spec));
    }
    return build_stranded(rank, std::move(vertices), edges);
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

Graph parse_graph(std::string_view document)
{
    const json doc = parse_json(document);
    const Header header = read_header(doc);
    if (header.format == colored_format) {
        ColoredBody body = read_colored(doc);
        return build_colored(header.rank, std::move(body.whites), std::move(body.blacks), body.edges);
    }
    return read_stranded(doc, header.rank);
}

ValidationReport validate_document(std::string_view document)
{
    const json doc = parse_json(document);
    const Header header = read_header(doc);
    ValidationReport report;
    if (header.format == stranded_format) {
        try {
            read_stranded(doc, header.rank);
        } catch (const Error& err) {
            if (err.code() == ErrorCode::ParseError)
                throw;
            report.violations.push_back({err.code(), "graph", err.what()});
        }
        return report;
    }

    ColoredBody body = read_colored(doc);
    std::unordered_map<std::string, VertexRef> index;
    for (std::size_t i = 0; i < body.whites.size(); ++i)
        index.emplace(body.whites[i], VertexRef{Parity::white, i});
    for (std::size_t i = 0; i < body.blacks.size(); ++i)
        index.emplace(body.blacks[i], VertexRef{Parity::black, i});

    std::vector<ColoredEdge> edges;
    for (std::size_t k = 0; k < body.edges.size(); ++k) {
        const auto& spec = body.edges[k];
        auto w = index.find(spec.white);
        auto b = index.find(spec.black);
        if (w == index.end() || b == index.end()) {
            report.violations.push_back({ErrorCode::UnknownNode, "edges[" + std::to_string(k) + "]",
                                         "undeclared vertex " + (w == index.end() ? spec.white : spec.black)});
            continue;
        }
        edges.push_back({spec.color, w->second, b->second});
    }
    // indices in messages below refer to the resolved edge list
    const auto g = ColoredGraph::unchecked(header.rank, std::move(body.whites), std::move(body.blacks), std::move(edges));
    for (auto& v : validate_colored(g).violations)
        report.violations.push_back(std::move(v));
    return report;
}

std::string serialize_graph(const ColoredGraph& g)
{
    ordered_json doc;
    doc["format"] = colored_format;
    doc["version"] = document_version;
    doc["rank"] = g.rank();
    doc["whites"] = g.whites();
    doc["blacks"] = g.blacks();
    doc["edges"] = ordered_json::array();
    for (const auto& e : g.edges()) {
        ordered_json edge;
        edge["color"] = e.color;
        edge["white"] = g.label(e.white);
        edge["black"] = g.label(e.black);
        doc["edges"].push_back(std::move(edge));
    }
    return doc.dump(2) + "\n";
}

std::string serialize_graph(const StrandedGraph& s)
{
    ordered_json doc;
    doc["format"] = stranded_format;
    doc["version"] = document_version;
    doc["rank"] = s.rank();
    doc["vertices"] = ordered_json::array();
    for (const auto& v : s.vertices()) {
        ordered_json vertex;
        vertex["id"] = v.id;
        vertex["halfedges"] = v.half_edges;
        doc["vertices"].push_back(std::move(vertex));
    }
    doc["edges"] = ordered_json::array();
    for (const auto& e : s.edges()) {
        ordered_json edge;
        edge["halfedges"] = {s.half_edge_label(e.ends[0]), s.half_edge_label(e.ends[1])};
        edge["strand_permutation"] = e.strand_permutation;
        doc["edges"].push_back(std::move(edge));
    }
    return doc.dump(2) + "\n";
}

std::string serialize_graph(const Graph& g)
{
    return std::visit([](const auto& x) { return serialize_graph(x); }, g);
}

std::string export_dot(const ColoredGraph& g)
{
    std::ostringstream out;
    out << "graph colored_tensor_graph {\n";
    for (const auto& w : g.whites())
        out << "  " << quoted(w) << " [shape=circle, style=solid];\n";
    for (const auto& b : g.blacks())
        out << "  " << quoted(b) << " [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
    for (const auto& e : g.edges())
        out << "  " << quoted(g.label(e.white)) << " -- " << quoted(g.label(e.black)) << " [colorscheme=set19, color="
            << e.color + 1 << ", label=\"" << e.color << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string export_dot(const StrandedGraph& s)
{
    const auto twists = is_untwisted(s);
    std::vector<bool> twisted(s.num_edges(), false);
    for (std::size_t e : twists.offending_edges)
        twisted[e] = true;

    std::ostringstream out;
    out << "graph stranded_tensor_graph {\n";
    for (const auto& v : s.vertices())
        out << "  " << quoted(v.id) << " [shape=circle];\n";
    for (std::size_t e = 0; e < s.num_edges(); ++e) {
        const auto& [a, b] = s.edges()[e].ends;
        out << "  " << quoted(s.vertices()[a.vertex].id) << " -- " << quoted(s.vertices()[b.vertex].id)
            << " [taillabel=" << quoted(s.half_edge_label(a)) << ", headlabel=" << quoted(s.half_edge_label(b))
            << (twisted[e] ? ", style=dashed" : "") << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const Graph& g)
{
    return std::visit([](const auto& x) { return export_dot(x); }, g);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace tensorgraph
