#pragma once

// JSON documents for spaces and mappings.
//
// Space document (format 1):
//   {
//     "format": 1,
//     "universe": { "points": ["x", ...], "parameters": ["a1", ...] },
//     "opens": [ { "name": "F", "sets": { "a1": ["z"], "a2": ["z"] } }, ... ],
//     "metadata": { ... }
//   }
// Every parameter appears in every "sets" object, rows list points in
// universe order, and canonical documents sort opens by flattened bit value.
//
// Mapping document (format 1):
//   { "format": 1, "source": "a.json", "target": "b.json",
//     "point_map": { "x": "p", ... }, "param_map": { "a1": "b1", ... },
//     "metadata": { ... } }

#include "softtop/topology.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace softtop {

using ordered_json = nlohmann::ordered_json;

struct NamedSet
{
    std::string name;
    SoftSet set;
};

struct SpaceDocument
{
    UniversePtr universe;
    std::vector< NamedSet > opens;
    ordered_json metadata = ordered_json::object();
};

/// Throws ParseError on malformed text, unknown labels or a bad format tag.
[[nodiscard]] SpaceDocument parse_space_document( std::string_view text );
[[nodiscard]] SpaceDocument read_space_document( const std::filesystem::path& path );
[[nodiscard]] std::string serialize_space_document( const SpaceDocument& document );

/// Opens sorted by bit value, duplicates dropped (the first name is kept).
[[nodiscard]] SpaceDocument canonicalize( const SpaceDocument& document );

/// Validates the family, or closes it when `generate` is set. Without
/// `generate` a non-topology raises TopologyViolation naming the offending
/// pair by their document names.
[[nodiscard]] SoftSpace space_from_document( const SpaceDocument& document, bool generate = false );

/// Canonical document for a space. Opens keep their names from `names`
/// where the bit patterns match; remaining sets are named 0_A, 1_A or U1, U2, ...
[[nodiscard]] SpaceDocument document_from_space( const SoftSpace& space, ordered_json metadata = ordered_json::object(),
                                                 const std::vector< NamedSet >& names = {} );

[[nodiscard]] SoftSpace parse_space( std::string_view text, bool generate = false );
[[nodiscard]] std::string serialize_space( const SoftSpace& space );

struct MappingDocument
{
    std::string source;
    std::string target;
    std::map< std::string, std::string > point_map;
    std::map< std::string, std::string > param_map;
    ordered_json metadata = ordered_json::object();
};

[[nodiscard]] MappingDocument parse_mapping_document( std::string_view text );
[[nodiscard]] MappingDocument read_mapping_document( const std::filesystem::path& path );
[[nodiscard]] std::string serialize_mapping_document( const MappingDocument& document );
[[nodiscard]] SoftMapping mapping_from_document( const MappingDocument& document, const UniversePtr& source,
                                                 const UniversePtr& target );

[[nodiscard]] std::string read_text_file( const std::filesystem::path& path );
void write_text_file( const std::filesystem::path& path, std::string_view text );

} // namespace softtop
