#ifndef TENSORGRAPH_IO_HPP
#define TENSORGRAPH_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "tensorgraph/core.hpp"

namespace tensorgraph {

inline constexpr std::string_view colored_format = "colored-tensor-graph";
inline constexpr std::string_view stranded_format = "stranded-tensor-graph";
inline constexpr int document_version = 1;

using Graph = std::variant<ColoredGraph, StrandedGraph>;

/// Reads a JSON graph document. Throws ParseError, UnknownFormat,
/// VersionUnsupported, or the builder's error for invalid graphs.
Graph parse_graph(std::string_view document);

/// Like parse_graph, but invalid graphs come back as violations instead of
/// an exception. Colored documents report every violation.
ValidationReport validate_document(std::string_view document);

std::string serialize_graph(const ColoredGraph& g);
std::string serialize_graph(const StrandedGraph& s);
std::string serialize_graph(const Graph& g);

/// Whites are hollow circles, blacks filled; each edge has colorscheme set19,
/// color ColorId + 1 (schemes are 1-based) and label ColorId.
std::string export_dot(const ColoredGraph& g);
/// Edges carry their half-edge labels; twisted edges are dashed.
std::string export_dot(const StrandedGraph& s);
std::string export_dot(const Graph& g);

std::string read_file(const std::string& path);

} // namespace tensorgraph

#endif // TENSORGRAPH_IO_HPP
