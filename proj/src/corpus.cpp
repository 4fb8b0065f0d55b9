#include "softtop/corpus.hpp"

#include "softtop/morphisms.hpp"
#include "softtop/reflection.hpp"
#include "softtop/separation.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace softtop {

namespace {

struct LoadedSpace
{
    SpaceDocument document;
    SoftSpace space;
};

std::string name_of( const SpaceDocument& document, Mask bits )
{
    for ( const auto& entry : document.opens )
        if ( entry.set.bits() == bits )
            return entry.name;
    return to_string( SoftSet{ document.universe, bits } );
}

std::string violation_text( const SpaceDocument& document, const ValidationReport& report )
{
    using Status = ValidationReport::Status;
    if ( report.status != Status::union_escapes && report.status != Status::intersection_escapes )
        return report.message();
    const bool uni = report.status == Status::union_escapes;
    const Mask joined = uni ? ( report.first->bits() | report.second->bits() )
                            : ( report.first->bits() & report.second->bits() );
    return std::string( uni ? "union" : "intersection" ) + " of " + name_of( document, report.first->bits() ) + " and "
           + name_of( document, report.second->bits() ) + " = " + to_string( SoftSet{ document.universe, joined } )
           + " is missing";
}

const ordered_json& expected_of( const ordered_json& metadata, const std::string& file )
{
    static const ordered_json empty = ordered_json::object();
    if ( !metadata.contains( "expected" ) )
        return empty;
    const auto& expected = metadata[ "expected" ];
    if ( !expected.is_object() )
        throw ParseError( file + ": metadata.expected must be an object" );
    for ( const auto& [ key, value ] : expected.items() )
        if ( !value.is_boolean() )
            throw ParseError( file + ": expected value for '" + key + "' must be a boolean" );
    return expected;
}

class Verifier
{
public:
    explicit Verifier( std::filesystem::path dir ) : _dir{ std::move( dir ) } {}

    const LoadedSpace& load( const std::string& file )
    {
        auto it = _spaces.find( file );
        if ( it != _spaces.end() )
            return it->second;
        auto document = read_space_document( _dir / file );
        auto space = space_from_document( document, true );
        return _spaces.emplace( file, LoadedSpace{ std::move( document ), std::move( space ) } ).first->second;
    }

    CorpusEntry verify_space( const std::string& file )
    {
        const auto& loaded = load( file );
        const auto& document = loaded.document;
        const auto& space = loaded.space;

        CorpusEntry entry;
        entry.file = file;
        entry.name = document.metadata.value( "name", file );

        std::vector< SoftSet > family;
        for ( const auto& named : document.opens )
            family.push_back( named.set );
        const auto report = validate_topology( document.universe, family );
        entry.printed_closed = report.ok();
        if ( !entry.printed_closed )
        {
            entry.closure_violation = violation_text( document, report );
            for ( auto bits : space.opens() )
                if ( std::none_of( family.begin(), family.end(), [ & ]( const SoftSet& s ) { return s.bits() == bits; } ) )
                    entry.closure_additions.emplace_back( document.universe, bits );
        }
        const bool closed_expected = document.metadata.value( "printed_family_closed", true );
        entry.checks.push_back( { "printed family closed", closed_expected, entry.printed_closed } );

        const auto profile = classify( space, file );
        for ( auto axiom : all_axioms )
            entry.profile.emplace_back( std::string( name( axiom ) ), profile[ axiom ] );

        const bool t0u = profile[ Axiom::T0U ];
        for ( const auto& [ key, value ] : expected_of( document.metadata, file ).items() )
        {
            if ( auto axiom = parse_axiom( key ) )
            {
                entry.checks.push_back( { key, value.get< bool >(), profile[ *axiom ] } );
            }
            else if ( auto alpha = parse_alpha( key ) )
            {
                if ( !t0u )
                {
                    entry.checks.push_back( { key + " (space is not T0U)", value.get< bool >(), !value.get< bool >() } );
                    continue;
                }
                const bool via_quotient = check_t0_alpha( space, *alpha );
                const bool direct = check_t0_alpha_direct( space, *alpha );
                entry.checks.push_back( { key, value.get< bool >(), via_quotient } );
                if ( via_quotient != direct )
                    entry.checks.push_back( { key + " direct route agrees", true, false } );
            }
            else
            {
                throw ParseError( file + ": unknown axiom name '" + key + "' in metadata.expected" );
            }
        }

        if ( document.metadata.contains( "reflection" ) )
            verify_reflection( entry, space, document.metadata[ "reflection" ] );
        return entry;
    }

    CorpusEntry verify_mapping( const std::string& file )
    {
        const auto document = read_mapping_document( _dir / file );
        if ( document.source.empty() || document.target.empty() )
            throw ParseError( file + ": mapping fixtures need \"source\" and \"target\"" );
        const auto& src = load( document.source );
        const auto& tgt = load( document.target );
        const auto mapping = mapping_from_document( document, src.space.universe(), tgt.space.universe() );

        CorpusEntry entry;
        entry.file = file;
        entry.mapping = true;
        entry.name = document.metadata.value( "name", file );
        for ( const auto& [ key, value ] : expected_of( document.metadata, file ).items() )
        {
            const auto property = parse_map_property( key );
            if ( !property )
                throw ParseError( file + ": unknown map property '" + key + "' in metadata.expected" );
            entry.checks.push_back(
                { key, value.get< bool >(), check_map( mapping, src.space, tgt.space, *property ).holds } );
        }
        return entry;
    }

private:
    void verify_reflection( CorpusEntry& entry, const SoftSpace& space, const ordered_json& spec )
    {
        if ( !spec.is_object() || !spec.contains( "classes" ) || !spec.contains( "quotient" ) )
            throw ParseError( entry.file + ": metadata.reflection needs \"classes\" and \"quotient\"" );
        const auto reflection = compute_reflection( space );
        const auto& points = space.universe()->points();

        std::vector< std::vector< std::string > > computed;
        for ( const auto& cls : reflection.classes )
        {
            computed.emplace_back();
            for ( auto x : cls )
                computed.back().push_back( points[ x ] );
        }
        std::vector< std::vector< std::string > > expected;
        for ( const auto& cls : spec[ "classes" ] )
            expected.push_back( cls.get< std::vector< std::string > >() );
        std::sort( computed.begin(), computed.end() );
        std::sort( expected.begin(), expected.end() );
        entry.checks.push_back( { "reflection classes", true, computed == expected } );

        const auto& quotient = load( spec[ "quotient" ].get< std::string >() );
        const bool same = *quotient.space.universe() == *reflection.quotient.universe()
                          && quotient.space.opens() == reflection.quotient.opens();
        entry.checks.push_back( { "reflection quotient = " + spec[ "quotient" ].get< std::string >(), true, same } );
    }

    std::filesystem::path _dir;
    std::map< std::string, LoadedSpace > _spaces;
};

bool is_mapping_file( const std::filesystem::path& path )
{
    const auto text = read_text_file( path );
    try
    {
        const auto json = ordered_json::parse( text );
        return json.is_object() && json.contains( "point_map" );
    }
    catch ( const nlohmann::json::exception& e )
    {
        throw ParseError( path.filename().string() + ": malformed JSON: " + e.what() );
    }
}

} // namespace

bool CorpusEntry::passed() const
{
    return std::all_of( checks.begin(), checks.end(), []( const CorpusCheck& c ) { return c.passed(); } );
}

bool CorpusReport::passed() const
{
    return std::all_of( entries.begin(), entries.end(), []( const CorpusEntry& e ) { return e.passed(); } );
}

CorpusReport verify_corpus( const std::filesystem::path& dir )
{
    if ( !std::filesystem::is_directory( dir ) )
        throw Error( "corpus directory '" + dir.string() + "' does not exist" );
    std::vector< std::string > spaces;
    std::vector< std::string > mappings;
    for ( const auto& item : std::filesystem::directory_iterator( dir ) )
    {
        if ( !item.is_regular_file() || item.path().extension() != ".json" )
            continue;
        ( is_mapping_file( item.path() ) ? mappings : spaces ).push_back( item.path().filename().string() );
    }
    if ( spaces.empty() )
        throw Error( "corpus directory '" + dir.string() + "' holds no space fixtures" );
    std::sort( spaces.begin(), spaces.end() );
    std::sort( mappings.begin(), mappings.end() );

    Verifier verifier{ dir };
    CorpusReport report;
    for ( const auto& file : spaces )
        report.entries.push_back( verifier.verify_space( file ) );
    for ( const auto& file : mappings )
        report.entries.push_back( verifier.verify_mapping( file ) );
    return report;
}

std::string format_table( const CorpusReport& report )
{
    std::size_t file_width = 4;
    std::size_t check_width = 5;
    for ( const auto& entry : report.entries )
    {
        file_width = std::max( file_width, entry.file.size() );
        for ( const auto& check : entry.checks )
            check_width = std::max( check_width, check.label.size() );
    }

    std::ostringstream os;
    os << std::left << std::setw( int( file_width ) ) << "file" << "  " << std::setw( int( check_width ) ) << "check"
       << "  expected  actual  result\n";
    for ( const auto& entry : report.entries )
        for ( const auto& check : entry.checks )
            os << std::setw( int( file_width ) ) << entry.file << "  " << std::setw( int( check_width ) ) << check.label
               << "  " << std::setw( 8 ) << ( check.expected ? "true" : "false" ) << "  " << std::setw( 6 )
               << ( check.actual ? "true" : "false" ) << "  " << ( check.passed() ? "PASS" : "FAIL" ) << "\n";

    os << "\nclosure discrepancies:\n";
    bool any = false;
    for ( const auto& entry : report.entries )
    {
        if ( entry.mapping || entry.printed_closed )
            continue;
        any = true;
        os << "  " << entry.file << ": " << entry.closure_violation << "; closure adds";
        for ( const auto& set : entry.closure_additions )
            os << " " << to_string( set );
        os << "\n";
    }
    if ( !any )
        os << "  none\n";
    os << "\n" << ( report.passed() ? "corpus: PASS" : "corpus: FAIL" ) << "\n";
    return os.str();
}

ordered_json to_json( const CorpusReport& report )
{
    ordered_json out = ordered_json::object();
    out[ "passed" ] = report.passed();
    out[ "entries" ] = ordered_json::array();
    for ( const auto& entry : report.entries )
    {
        ordered_json e = ordered_json::object();
        e[ "file" ] = entry.file;
        e[ "name" ] = entry.name;
        e[ "kind" ] = entry.mapping ? "mapping" : "space";
        e[ "passed" ] = entry.passed();
        if ( !entry.mapping )
        {
            e[ "printed_family_closed" ] = entry.printed_closed;
            if ( !entry.printed_closed )
            {
                e[ "closure_violation" ] = entry.closure_violation;
                e[ "closure_additions" ] = ordered_json::array();
                for ( const auto& set : entry.closure_additions )
                    e[ "closure_additions" ].push_back( to_string( set ) );
            }
            e[ "profile" ] = ordered_json::object();
            for ( const auto& [ key, value ] : entry.profile )
                e[ "profile" ][ key ] = value;
        }
        e[ "checks" ] = ordered_json::array();
        for ( const auto& check : entry.checks )
            e[ "checks" ].push_back( { { "check", check.label },
                                       { "expected", check.expected },
                                       { "actual", check.actual },
                                       { "passed", check.passed() } } );
        out[ "entries" ].push_back( std::move( e ) );
    }
    return out;
}

} // namespace softtop
