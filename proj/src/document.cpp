#include "softtop/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace softtop {

namespace {

constexpr int format_version = 1;

ordered_json parse_json( std::string_view text )
{
    try
    {
        return ordered_json::parse( text.begin(), text.end() );
    }
    catch ( const nlohmann::json::exception& e )
    {
        throw ParseError( std::string( "malformed JSON: " ) + e.what() );
    }
}

void require_format( const ordered_json& doc )
{
    if ( !doc.is_object() )
        throw ParseError( "document must be a JSON object" );
    if ( !doc.contains( "format" ) || doc[ "format" ] != format_version )
        throw ParseError( "document must carry \"format\": 1" );
}

std::vector< std::string > string_list( const ordered_json& node, std::string_view what )
{
    if ( !node.is_array() )
        throw ParseError( std::string( what ) + " must be an array of strings" );
    std::vector< std::string > out;
    for ( const auto& item : node )
    {
        if ( !item.is_string() )
            throw ParseError( std::string( what ) + " must be an array of strings" );
        out.push_back( item.get< std::string >() );
    }
    return out;
}

std::map< std::string, std::string > string_map( const ordered_json& node, std::string_view what )
{
    if ( !node.is_object() )
        throw ParseError( std::string( what ) + " must be an object of label pairs" );
    std::map< std::string, std::string > out;
    for ( const auto& [ key, value ] : node.items() )
    {
        if ( !value.is_string() )
            throw ParseError( std::string( what ) + " values must be strings" );
        out[ key ] = value.get< std::string >();
    }
    return out;
}

ordered_json set_to_json( const SoftSet& set )
{
    ordered_json rows = ordered_json::object();
    const auto& params = set.universe()->parameters();
    for ( std::size_t a = 0; a < params.size(); ++a )
        rows[ params[ a ] ] = set.row_labels( a );
    return rows;
}

} // namespace

std::string read_text_file( const std::filesystem::path& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw Error( "cannot read '" + path.string() + "'" );
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file( const std::filesystem::path& path, std::string_view text )
{
    std::ofstream out( path, std::ios::binary );
    if ( !out )
        throw Error( "cannot write '" + path.string() + "'" );
    out << text;
}

SpaceDocument parse_space_document( std::string_view text )
{
    const auto doc = parse_json( text );
    require_format( doc );
    if ( !doc.contains( "universe" ) || !doc[ "universe" ].is_object() )
        throw ParseError( "space document needs a \"universe\" object" );
    const auto& uni = doc[ "universe" ];
    if ( !uni.contains( "points" ) || !uni.contains( "parameters" ) )
        throw ParseError( "universe needs \"points\" and \"parameters\"" );

    SpaceDocument out;
    try
    {
        out.universe = Universe::make( string_list( uni[ "points" ], "points" ),
                                       string_list( uni[ "parameters" ], "parameters" ) );
    }
    catch ( const ParseError& )
    {
        throw;
    }
    catch ( const Error& e )
    {
        throw ParseError( std::string( "bad universe: " ) + e.what() );
    }

    if ( !doc.contains( "opens" ) || !doc[ "opens" ].is_array() )
        throw ParseError( "space document needs an \"opens\" array" );
    for ( const auto& entry : doc[ "opens" ] )
    {
        if ( !entry.is_object() || !entry.contains( "name" ) || !entry[ "name" ].is_string() || !entry.contains( "sets" )
             || !entry[ "sets" ].is_object() )
            throw ParseError( "each open needs a string \"name\" and a \"sets\" object" );
        std::map< std::string, std::vector< std::string > > rows;
        for ( const auto& [ param, points ] : entry[ "sets" ].items() )
            rows[ param ] = string_list( points, "soft set row" );
        try
        {
            out.opens.push_back( { entry[ "name" ].get< std::string >(), SoftSet::from_map( out.universe, rows ) } );
        }
        catch ( const UnknownLabel& e )
        {
            throw ParseError( "open '" + entry[ "name" ].get< std::string >() + "': " + e.what() );
        }
    }
    if ( doc.contains( "metadata" ) )
    {
        if ( !doc[ "metadata" ].is_object() )
            throw ParseError( "\"metadata\" must be an object" );
        out.metadata = doc[ "metadata" ];
    }
    return out;
}

SpaceDocument read_space_document( const std::filesystem::path& path )
{
    return parse_space_document( read_text_file( path ) );
}

std::string serialize_space_document( const SpaceDocument& document )
{
    ordered_json doc = ordered_json::object();
    doc[ "format" ] = format_version;
    doc[ "universe" ] = { { "points", document.universe->points() },
                          { "parameters", document.universe->parameters() } };
    doc[ "opens" ] = ordered_json::array();
    for ( const auto& [ name, set ] : document.opens )
        doc[ "opens" ].push_back( { { "name", name }, { "sets", set_to_json( set ) } } );
    doc[ "metadata" ] = document.metadata;
    return doc.dump( 2 ) + "\n";
}

SpaceDocument canonicalize( const SpaceDocument& document )
{
    SpaceDocument out{ document.universe, {}, document.metadata };
    for ( const auto& entry : document.opens )
    {
        const bool seen = std::any_of( out.opens.begin(), out.opens.end(),
                                       [ & ]( const NamedSet& n ) { return n.set.bits() == entry.set.bits(); } );
        if ( !seen )
            out.opens.push_back( entry );
    }
    std::stable_sort( out.opens.begin(), out.opens.end(),
                      []( const NamedSet& l, const NamedSet& r ) { return l.set.bits() < r.set.bits(); } );
    return out;
}

SoftSpace space_from_document( const SpaceDocument& document, bool generate )
{
    std::vector< SoftSet > family;
    family.reserve( document.opens.size() );
    for ( const auto& entry : document.opens )
        family.push_back( entry.set );
    if ( generate )
        return SoftSpace{ generate_topology( document.universe, family ) };

    const auto report = validate_topology( document.universe, family );
    if ( report.ok() )
        return SoftSpace{ SoftTopology{ document.universe, [ & ] {
                                           std::vector< Mask > m;
                                           for ( const auto& s : family )
                                               m.push_back( s.bits() );
                                           return m;
                                       }(),
                                        SoftTopology::trusted } };

    auto name_of = [ & ]( const SoftSet& set ) {
        for ( const auto& entry : document.opens )
            if ( entry.set.bits() == set.bits() )
                return entry.name;
        return to_string( set );
    };
    std::string message = "not a soft topology: ";
    switch ( report.status )
    {
    case ValidationReport::Status::union_escapes:
        message += "union of " + name_of( *report.first ) + " and " + name_of( *report.second ) + " = "
                   + to_string( soft_union( *report.first, *report.second ) ) + " is missing";
        break;
    case ValidationReport::Status::intersection_escapes:
        message += "intersection of " + name_of( *report.first ) + " and " + name_of( *report.second ) + " = "
                   + to_string( soft_intersection( *report.first, *report.second ) ) + " is missing";
        break;
    default:
        message += report.message();
    }
    throw TopologyViolation( message );
}

SpaceDocument document_from_space( const SoftSpace& space, ordered_json metadata, const std::vector< NamedSet >& names )
{
    SpaceDocument out{ space.universe(), {}, std::move( metadata ) };
    std::size_t fresh = 0;
    for ( auto bits : space.opens() )
    {
        std::string label;
        for ( const auto& n : names )
            if ( n.set.bits() == bits )
            {
                label = n.name;
                break;
            }
        if ( label.empty() )
        {
            if ( bits == 0 )
                label = "0_A";
            else if ( bits == space.universe()->full() )
                label = "1_A";
            else
                label = "U" + std::to_string( ++fresh );
        }
        out.opens.push_back( { std::move( label ), SoftSet{ space.universe(), bits } } );
    }
    return out;
}

SoftSpace parse_space( std::string_view text, bool generate )
{
    return space_from_document( parse_space_document( text ), generate );
}

std::string serialize_space( const SoftSpace& space )
{
    return serialize_space_document( document_from_space( space ) );
}

MappingDocument parse_mapping_document( std::string_view text )
{
    const auto doc = parse_json( text );
    require_format( doc );
    if ( !doc.contains( "point_map" ) || !doc.contains( "param_map" ) )
        throw ParseError( "mapping document needs \"point_map\" and \"param_map\"" );
    MappingDocument out;
    for ( const char* key : { "source", "target" } )
        if ( doc.contains( key ) && !doc[ key ].is_string() )
            throw ParseError( std::string( "\"" ) + key + "\" must be a file name" );
    out.source = doc.value( "source", "" );
    out.target = doc.value( "target", "" );
    out.point_map = string_map( doc[ "point_map" ], "point_map" );
    out.param_map = string_map( doc[ "param_map" ], "param_map" );
    if ( doc.contains( "metadata" ) )
    {
        if ( !doc[ "metadata" ].is_object() )
            throw ParseError( "\"metadata\" must be an object" );
        out.metadata = doc[ "metadata" ];
    }
    return out;
}

MappingDocument read_mapping_document( const std::filesystem::path& path )
{
    return parse_mapping_document( read_text_file( path ) );
}

std::string serialize_mapping_document( const MappingDocument& document )
{
    ordered_json doc = ordered_json::object();
    doc[ "format" ] = format_version;
    doc[ "source" ] = document.source;
    doc[ "target" ] = document.target;
    doc[ "point_map" ] = ordered_json::object();
    for ( const auto& [ k, v ] : document.point_map )
        doc[ "point_map" ][ k ] = v;
    doc[ "param_map" ] = ordered_json::object();
    for ( const auto& [ k, v ] : document.param_map )
        doc[ "param_map" ][ k ] = v;
    doc[ "metadata" ] = document.metadata;
    return doc.dump( 2 ) + "\n";
}

SoftMapping mapping_from_document( const MappingDocument& document, const UniversePtr& source,
                                   const UniversePtr& target )
{
    try
    {
        return SoftMapping::from_labels( source, target, document.point_map, document.param_map );
    }
    catch ( const Error& e )
    {
        throw ParseError( std::string( "bad mapping: " ) + e.what() );
    }
}

} // namespace softtop
