#include "oracles.hpp"

#include <doctest.h>

using namespace softtop;

namespace {

std::vector< SoftSpace > shape( std::size_t n, std::size_t m )
{
    return enumerate_spaces( EnumerationSpec::exhaustive( n, m ) );
}

// A spread of spaces over the shapes with |X|, |A| <= 2.
std::vector< SoftSpace > mixed_spaces()
{
    std::vector< SoftSpace > out;
    for ( auto [ n, m ] : { std::pair{ 1, 1 }, std::pair{ 1, 2 }, std::pair{ 2, 1 } } )
        for ( const auto& sp : shape( n, m ) )
            out.push_back( sp );
    const auto big = shape( 2, 2 );
    for ( std::size_t i = 0; i < big.size(); i += 11 )
        out.push_back( big[ i ] );
    return out;
}

} // namespace

TEST_CASE( "property names round-trip" )
{
    for ( auto p : all_map_properties )
        CHECK( parse_map_property( name( p ) ) == p );
    CHECK_FALSE( parse_map_property( "Proper" ).has_value() );
}

TEST_CASE( "canonical surjection of example1" )
{
    const auto e1 = oracle::corpus_space( "example1.json" );
    const auto e8 = oracle::corpus_space( "example8.json" );
    const SoftMapping g0{ e1.universe(), e8.universe(), { 0, 0, 1 }, { 0, 1 } };
    const auto report = check_all( g0, e1, e8, "g0" );
    CHECK( report.mapping_id == "g0" );
    for ( auto p : { MapProperty::Continuous, MapProperty::Open, MapProperty::Closed, MapProperty::Initial,
                     MapProperty::InitialViaClosure, MapProperty::Quasihomomorphism, MapProperty::Surjective } )
        CHECK_MESSAGE( report[ p ], name( p ) );
    CHECK_FALSE( report[ MapProperty::Injective ] );
    CHECK_FALSE( report[ MapProperty::Homeomorphism ] );
}

TEST_CASE( "identity maps have every property" )
{
    for ( const auto& sp : mixed_spaces() )
    {
        const auto report = check_all( SoftMapping::identity( sp.universe() ), sp, sp );
        for ( auto p : all_map_properties )
            CHECK_MESSAGE( report[ p ], name( p ) );
    }
}

TEST_CASE( "subspace inclusion is initial but not onto" )
{
    const auto e3 = oracle::corpus_space( "example3.json" );
    const auto sub = subspace( e3, { "x", "y" } );
    const SoftMapping incl{ sub.universe(), e3.universe(), { 0, 1 }, { 0, 1 } };
    CHECK( check_map( incl, sub, e3, MapProperty::Initial ).holds );
    CHECK_FALSE( check_map( incl, sub, e3, MapProperty::Surjective ).holds );
}

TEST_CASE( "witnesses name the offending set" )
{
    const auto e1 = oracle::corpus_space( "example1.json" );
    const auto e9 = oracle::corpus_space( "example9.json" );
    const SoftMapping id_points{ e1.universe(), e9.universe(), { 0, 1, 2 }, { 0, 1 } };
    const auto cont = check_map( id_points, e1, e9, MapProperty::Continuous );
    REQUIRE_FALSE( cont.holds );
    REQUIRE( cont.witness.size() == 1 );
    CHECK( is_open( e9, cont.witness.front() ) );
    CHECK_FALSE( is_open( e1, preimage( id_points, cont.witness.front() ) ) );
    // initiality is gated on continuity and reports the same witness
    const auto init = check_map( id_points, e1, e9, MapProperty::Initial );
    CHECK_FALSE( init.holds );
    CHECK( init.witness == cont.witness );
    const auto other = Universe::make( { "p" }, { "a" } );
    const SoftMapping bad{ other, e9.universe(), { 0 }, { 0 } };
    CHECK_THROWS_AS( (void)check_map( bad, e1, e9, MapProperty::Continuous ), UniverseMismatch );
}

TEST_CASE( "decisions agree with the definitional oracle" )
{
    const auto spaces = mixed_spaces();
    std::size_t maps = 0;
    for ( const auto& dom : spaces )
        for ( const auto& cod : spaces )
        {
            if ( dom.universe()->cell_count() * cod.universe()->cell_count() > 8 )
                continue;
            for ( const auto& m : oracle::all_mappings( dom.universe(), cod.universe() ) )
            {
                ++maps;
                const auto report = check_all( m, dom, cod );
                for ( auto p : all_map_properties )
                    CHECK_MESSAGE( report[ p ] == oracle::map_property( m, dom, cod, p ), name( p ) );
                if ( report[ MapProperty::Initial ] )
                    CHECK( report[ MapProperty::Continuous ] );
                CHECK( report[ MapProperty::Homeomorphism ]
                       == ( report[ MapProperty::Continuous ] && report[ MapProperty::Injective ]
                            && report[ MapProperty::Surjective ]
                            && is_continuous( oracle::inverse( m ), cod, dom ) ) );
            }
        }
    MESSAGE( "mappings checked: " << maps );
}

TEST_CASE( "two of three" )
{
    const auto e1 = oracle::corpus_space( "example1.json" );
    const auto id = SoftMapping::identity( e1.universe() );
    CHECK( two_of_three( id, id, e1, e1, e1 ).consistent() );

    const auto r = compute_reflection( e1 );
    const auto q = r.quotient;
    const SoftMapping swap{ q.universe(), q.universe(), { 1, 0 }, { 0, 1 } };
    REQUIRE( check_map( swap, q, q, MapProperty::Homeomorphism ).holds );
    const auto report = two_of_three( r.surjection, swap, e1, q, q );
    CHECK( report.first );
    CHECK( report.second );
    CHECK( report.composite );

    const auto e9 = oracle::corpus_space( "example9.json" );
    const SoftMapping discontinuous{ e1.universe(), e9.universe(), { 0, 1, 2 }, { 0, 1 } };
    CHECK_THROWS_AS( (void)two_of_three( discontinuous, SoftMapping::identity( e9.universe() ), e1, e9, e9 ),
                     MappingPrecondition );
    CHECK_THROWS_AS( (void)two_of_three( id, swap, e1, e1, q ), UniverseMismatch );
}

TEST_CASE( "two of three over composable continuous pairs on 1x2 and 2x1 shapes" )
{
    std::vector< SoftSpace > spaces;
    for ( auto [ n, m ] : { std::pair{ 1, 1 }, std::pair{ 1, 2 }, std::pair{ 2, 1 } } )
        for ( const auto& sp : shape( n, m ) )
            spaces.push_back( sp );
    std::size_t checked = 0;
    for ( const auto& x : spaces )
        for ( const auto& y : spaces )
            for ( const auto& z : spaces )
                for ( const auto& f : oracle::all_mappings( x.universe(), y.universe() ) )
                {
                    if ( !is_continuous( f, x, y ) )
                        continue;
                    for ( const auto& g : oracle::all_mappings( y.universe(), z.universe() ) )
                    {
                        if ( !is_continuous( g, y, z ) )
                            continue;
                        ++checked;
                        CHECK( two_of_three( f, g, x, y, z ).consistent() );
                    }
                }
    MESSAGE( "pairs checked: " << checked );
}

TEST_CASE( "quasihomomorphisms out of T0 and onto T1k spaces" )
{
    const auto spaces = mixed_spaces();
    for ( const auto& dom : spaces )
        for ( const auto& cod : spaces )
            for ( const auto& m : oracle::all_mappings( dom.universe(), cod.universe() ) )
            {
                if ( !is_quasihomomorphism( m, dom, cod ) )
                    continue;
                const bool a = check_axiom( dom, Axiom::T0 ) && m.params_injective();
                const bool b = check_axiom( cod, Axiom::T1k ) && m.params_surjective();
                if ( a )
                    CHECK( m.is_injective() );
                if ( b )
                    CHECK( m.is_surjective() );
                if ( a && b )
                    CHECK( check_map( m, dom, cod, MapProperty::Homeomorphism ).holds );
            }
}
