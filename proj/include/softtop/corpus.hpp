#pragma once

// Verification of a directory of fixture documents.
//
// Space fixtures carry metadata.expected, a map from axiom or T(0,alpha)
// names to booleans. Listed entries are pass/fail; the rest of the profile is
// informational. metadata.printed_family_closed (default true) states whether
// the printed family is already a topology; classification always runs on the
// generated closure. metadata.reflection = { "classes": [[...]], "quotient":
// FILE } compares the computed reflection against another fixture.
//
// Mapping fixtures (documents with "point_map") name their source and target
// fixtures and carry metadata.expected over MapProperty names.

#include "softtop/document.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace softtop {

struct CorpusCheck
{
    std::string label;
    bool expected = true;
    bool actual = false;

    [[nodiscard]] bool passed() const { return expected == actual; }
};

struct CorpusEntry
{
    std::string file;
    std::string name;
    bool mapping = false;
    /// Printed family already closed under union and intersection.
    bool printed_closed = true;
    /// Why the printed family fails, naming the pair.
    std::string closure_violation;
    /// Sets the generated closure adds to the printed family.
    std::vector< SoftSet > closure_additions;
    std::vector< CorpusCheck > checks;
    /// Informational: full axiom profile of the classified space.
    std::vector< std::pair< std::string, bool > > profile;

    [[nodiscard]] bool passed() const;
};

struct CorpusReport
{
    std::vector< CorpusEntry > entries;

    [[nodiscard]] bool passed() const;
};

/// Throws Error when the directory is missing, holds no fixtures, or a
/// fixture is corrupt.
[[nodiscard]] CorpusReport verify_corpus( const std::filesystem::path& dir );

[[nodiscard]] std::string format_table( const CorpusReport& report );
[[nodiscard]] ordered_json to_json( const CorpusReport& report );

} // namespace softtop
