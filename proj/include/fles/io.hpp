#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "fles/event_structure.hpp"
#include "fles/reductions.hpp"

namespace fles {

inline constexpr int kFormatVersion = 1;

/// Thrown on malformed documents; validation failures surface as
/// InvalidStructure instead.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical JSON: keys sorted, events by id, causes and conflicts sorted.
std::string serialize_fles(const EventStructure& s);
StructurePtr parse_fles(const std::string& text);

StructurePtr load_fles(const std::filesystem::path& path);
void save_fles(const EventStructure& s, const std::filesystem::path& path);

using GraphDocument = std::variant<DiGraph, UGraph>;

/// `directed` selects DiGraph or UGraph; `B` is only read for undirected
/// graphs. Self-loops are kept; callers decide whether to strip them.
GraphDocument parse_graph(const std::string& text);
GraphDocument load_graph(const std::filesystem::path& path);
std::string serialize_graph(const GraphDocument& g);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace fles
