#include "oracles.hpp"

#include <doctest.h>

using namespace softtop;

namespace {

SoftSet rows( const UniversePtr& u, std::vector< std::vector< std::string > > r )
{
    return SoftSet::from_rows( u, std::move( r ) );
}

SoftSpace space( const UniversePtr& u, std::vector< SoftSet > opens )
{
    opens.push_back( SoftSet::null( u ) );
    opens.push_back( SoftSet::absolute( u ) );
    return make_space( u, opens );
}

std::vector< std::vector< std::string > > class_labels( const Reflection& r )
{
    std::vector< std::vector< std::string > > out;
    for ( const auto& cls : r.classes )
    {
        out.emplace_back();
        for ( auto x : cls )
            out.back().push_back( r.source.universe()->points()[ x ] );
    }
    return out;
}

std::vector< SoftSpace > t0u_corpus()
{
    std::vector< SoftSpace > out;
    for ( const auto& sp : oracle::small_corpus() )
        if ( check_axiom( sp, Axiom::T0U ) )
            out.push_back( sp );
    return out;
}

} // namespace

TEST_CASE( "reflection of example1 is example8" )
{
    const auto r = compute_reflection( oracle::corpus_space( "example1.json" ) );
    CHECK( r.verified );
    CHECK( class_labels( r ) == std::vector< std::vector< std::string > >{ { "x", "y" }, { "z" } } );
    const auto e8 = oracle::corpus_space( "example8.json" );
    CHECK( *r.quotient.universe() == *e8.universe() );
    CHECK( r.quotient.opens() == e8.opens() );
    CHECK( r.surjection.params_injective() );
    CHECK( r.surjection.points_surjective() );
}

TEST_CASE( "reflection of example9" )
{
    const auto r = compute_reflection( oracle::corpus_space( "example9.json" ) );
    CHECK( class_labels( r ) == std::vector< std::vector< std::string > >{ { "x" }, { "y", "z" } } );
    const auto& q = r.quotient.universe();
    CHECK( q->points() == std::vector< std::string >{ "[x]", "[y]" } );
    const auto expected = space( q, { rows( q, { { "[x]" }, {} } ), rows( q, { { "[x]" }, { "[x]" } } ) } );
    CHECK( r.quotient == expected );
}

TEST_CASE( "reflection of a T0 space is the space itself" )
{
    for ( const auto& sp : oracle::small_corpus() )
    {
        if ( !check_axiom( sp, Axiom::T0 ) )
            continue;
        const auto r = compute_reflection( sp );
        CHECK( r.classes.size() == sp.universe()->point_count() );
        CHECK( r.quotient.opens() == sp.opens() );
    }
}

TEST_CASE( "non-T0U spaces are refused unless forced" )
{
    const auto u = Universe::make( { "x", "y" }, { "a1", "a2" } );
    const auto sp = space( u, { rows( u, { { "x" }, {} } ) } );
    CHECK_FALSE( check_axiom( sp, Axiom::T0U ) );
    CHECK_THROWS_AS( (void)compute_reflection( sp ), NotT0U );
    const auto forced = compute_reflection( sp, true );
    CHECK_FALSE( forced.verified );
    CHECK( forced.classes.size() == 1 );
    CHECK_THROWS_AS( (void)check_t0_alpha( forced, Alpha::One ), NotT0U );
    CHECK_THROWS_AS( (void)check_t0_alpha( sp, Alpha::One ), NotT0U );
    CHECK_THROWS_AS( (void)check_t0_alpha_direct( sp, Alpha::One ), NotT0U );
}

TEST_CASE( "induced maps" )
{
    const auto e1 = oracle::corpus_space( "example1.json" );
    const auto r1 = compute_reflection( e1 );
    const auto id = induced_map( r1, r1, SoftMapping::identity( e1.universe() ) );
    CHECK( id == SoftMapping::identity( r1.quotient.universe() ) );

    // g0 viewed into the (already T0) quotient
    const auto rq = compute_reflection( r1.quotient );
    const auto iso = induced_map( r1, rq, r1.surjection );
    CHECK( iso.is_injective() );
    CHECK( iso.is_surjective() );
    CHECK( check_map( iso, r1.quotient, rq.quotient, MapProperty::Homeomorphism ).holds );

    // constant map from example9 to z in example1
    const auto e9 = oracle::corpus_space( "example9.json" );
    const auto r9 = compute_reflection( e9 );
    const SoftMapping constant{ e9.universe(), e1.universe(), { 2, 2, 2 }, { 0, 1 } };
    const auto induced = induced_map( r9, r1, constant );
    CHECK( induced.point_map() == std::vector< std::size_t >{ 1, 1 } );
    CHECK( compose( r1.surjection, constant ) == compose( induced, r9.surjection ) );

    const SoftMapping discontinuous{ e1.universe(), e9.universe(), { 0, 1, 2 }, { 0, 1 } };
    CHECK_THROWS_AS( (void)induced_map( r1, r9, discontinuous ), MappingPrecondition );
}

TEST_CASE( "continuity does not preserve indistinguishability off the parameter image" )
{
    // Source: two indistinguishable points, one parameter. Target: K has
    // K(b1) = {p, q} and K(b2) = {p}, so p and q are distinguishable, but the
    // map only sees b1 and stays continuous.
    const auto x = Universe::make( { "x1", "x2" }, { "a" } );
    const auto src = space( x, {} );
    const auto y = Universe::make( { "p", "q" }, { "b1", "b2" } );
    const auto tgt = space( y, { rows( y, { { "p", "q" }, { "p" } } ) } );
    const SoftMapping m{ x, y, { 0, 1 }, { 0 } };
    REQUIRE( is_continuous( m, src, tgt ) );
    REQUIRE( check_axiom( tgt, Axiom::T0 ) );
    const auto rs = compute_reflection( src );
    const auto rt = compute_reflection( tgt );
    CHECK_THROWS_AS( (void)induced_map( rs, rt, m ), MappingPrecondition );
    CHECK_THROWS_AS( (void)factor_through_reflection( rs, m, tgt ), MappingPrecondition );
    // with a surjective parameter map the same points cannot be split
    const auto x2 = Universe::make( { "x1", "x2" }, { "a1", "a2" } );
    const SoftMapping onto{ x2, y, { 0, 1 }, { 0, 1 } };
    CHECK_FALSE( is_continuous( onto, space( x2, {} ), tgt ) );
}

TEST_CASE( "factorization through the reflection" )
{
    const auto e1 = oracle::corpus_space( "example1.json" );
    const auto r1 = compute_reflection( e1 );
    const auto f = factor_through_reflection( r1, r1.surjection, r1.quotient );
    CHECK( f.mapping == SoftMapping::identity( r1.quotient.universe() ) );
    CHECK( f.open );

    const auto e8 = oracle::corpus_space( "example8.json" );
    const SoftMapping g0{ e1.universe(), e8.universe(), { 0, 0, 1 }, { 0, 1 } };
    const auto f8 = factor_through_reflection( r1, g0, e8 );
    CHECK( f8.mapping.point_map() == std::vector< std::size_t >{ 0, 1 } );

    const auto e9 = oracle::corpus_space( "example9.json" );
    const auto r9 = compute_reflection( e9 );
    const auto pq = Universe::make( { "p", "q" }, { "a1", "a2" } );
    const auto two = space( pq, { rows( pq, { { "p" }, { "p" } } ) } );
    const SoftMapping m{ e9.universe(), pq, { 0, 1, 1 }, { 0, 1 } };
    const auto f9 = factor_through_reflection( r9, m, two );
    CHECK( f9.mapping.point_map() == std::vector< std::size_t >{ 0, 1 } );
    CHECK( compose( f9.mapping, r9.surjection ) == m );

    // uniqueness: no other point map out of the classes reproduces m
    for ( std::size_t a = 0; a < 2; ++a )
        for ( std::size_t b = 0; b < 2; ++b )
        {
            const SoftMapping h{ r9.quotient.universe(), pq, { a, b }, { 0, 1 } };
            CHECK( ( compose( h, r9.surjection ) == m ) == ( h == f9.mapping ) );
        }

    CHECK_THROWS_AS( (void)factor_through_reflection( r9, SoftMapping::identity( e9.universe() ), e9 ),
                     MappingPrecondition ); // target not T0
    const SoftMapping wrong{ e9.universe(), pq, { 1, 0, 0 }, { 0, 1 } };
    CHECK_THROWS_AS( (void)factor_through_reflection( r9, wrong, two ), MappingPrecondition ); // not continuous
}

TEST_CASE( "point class soft sets" )
{
    const auto r1 = compute_reflection( oracle::corpus_space( "example1.json" ) );
    CHECK( point_class_soft_set( r1, "x" ) == rows( r1.source.universe(), { { "x", "y" }, { "x", "y" } } ) );
    const auto r9 = compute_reflection( oracle::corpus_space( "example9.json" ) );
    CHECK( point_class_soft_set( r9, "y" ) == rows( r9.source.universe(), { { "y", "z" }, { "y", "z" } } ) );
    const auto r3 = compute_reflection( oracle::corpus_space( "example3.json" ) );
    for ( std::size_t x = 0; x < 3; ++x )
        CHECK( point_class_soft_set( r3, x ) == point_soft_set( x, r3.source.universe() ) );
    CHECK_THROWS_AS( (void)point_class_soft_set( r3, "w" ), UnknownLabel );
}

TEST_CASE( "T(0,alpha) on the fixtures" )
{
    for ( auto alpha : all_alphas )
        CHECK( parse_alpha( name( alpha ) ) == alpha );
    CHECK_FALSE( parse_alpha( "T(0,4)" ).has_value() );

    const auto e9 = oracle::corpus_space( "example9.json" );
    CHECK( check_t0_alpha( e9, Alpha::ZeroK ) );
    CHECK_FALSE( check_t0_alpha( e9, Alpha::One ) );
    CHECK_FALSE( check_t0_alpha( e9, Alpha::TS ) );
    CHECK( check_t0_alpha_direct( e9, Alpha::ZeroK ) );
    CHECK_FALSE( check_t0_alpha_direct( e9, Alpha::One ) );

    const auto e1 = oracle::corpus_space( "example1.json" );
    for ( auto alpha : all_alphas )
    {
        CHECK( check_t0_alpha( e1, alpha ) );
        CHECK( check_t0_alpha_direct( e1, alpha ) );
    }

    // indiscrete with parameter-uniform opens: one class, every alpha holds
    const auto u = enumeration_universe( 3, 2 );
    const auto ind = space( u, {} );
    for ( auto alpha : all_alphas )
        CHECK( check_t0_alpha( ind, alpha ) );
}

TEST_CASE( "reflection laws on every T0U space up to four cells" )
{
    for ( const auto& sp : t0u_corpus() )
    {
        const auto r = compute_reflection( sp );
        const auto& g0 = r.surjection;
        for ( auto f : sp.opens() )
            CHECK( g0.preimage_bits( g0.image_bits( f ) ) == f );
        CHECK( check_map( g0, sp, r.quotient, MapProperty::Open ).holds );
        CHECK( check_map( g0, sp, r.quotient, MapProperty::Closed ).holds );
        CHECK( check_map( g0, sp, r.quotient, MapProperty::Quasihomomorphism ).holds );
        CHECK( check_axiom( r.quotient, Axiom::T0 ) );
        // quotient topology by the preimage definition, brute force
        std::vector< Mask > expected;
        for ( const auto& s : oracle::all_soft_sets( r.quotient.universe() ) )
            if ( sp.is_open_bits( preimage( g0, s ).bits() ) )
                expected.push_back( s.bits() );
        CHECK( r.quotient.opens() == expected );
        for ( auto alpha : all_alphas )
            CHECK_MESSAGE( check_t0_alpha( r, alpha ) == check_t0_alpha_direct( sp, alpha ), name( alpha ) );
    }
}

TEST_CASE( "T(0,alpha) passes to subspaces that stay T0U" )
{
    for ( const auto& sp : t0u_corpus() )
    {
        const auto r = compute_reflection( sp );
        const Mask all = ( Mask{ 1 } << sp.universe()->point_count() ) - 1;
        for ( Mask y = 1; y <= all; ++y )
        {
            const auto sub = subspace_bits( sp, y );
            if ( !check_axiom( sub, Axiom::T0U ) )
                continue;
            const auto rs = compute_reflection( sub );
            for ( auto alpha : all_alphas )
                if ( check_t0_alpha( r, alpha ) )
                    CHECK_MESSAGE( check_t0_alpha( rs, alpha ), name( alpha ) );
        }
    }
}

TEST_CASE( "T(0,alpha) transfers along onto quasihomomorphisms" )
{
    std::vector< SoftSpace > spaces;
    for ( const auto& sp : t0u_corpus() )
        if ( sp.universe()->point_count() <= 2 && sp.universe()->parameter_count() <= 2 )
            spaces.push_back( sp );
    std::vector< Reflection > refl;
    for ( const auto& sp : spaces )
        refl.push_back( compute_reflection( sp ) );

    std::size_t onto = 0;
    for ( std::size_t i = 0; i < spaces.size(); ++i )
        for ( std::size_t k = 0; k < spaces.size(); ++k )
            for ( const auto& m : oracle::all_mappings( spaces[ i ].universe(), spaces[ k ].universe() ) )
            {
                if ( !m.is_surjective() || !is_quasihomomorphism( m, spaces[ i ], spaces[ k ] ) )
                    continue;
                ++onto;
                for ( auto alpha : all_alphas )
                    CHECK_MESSAGE( check_t0_alpha( refl[ i ], alpha ) == check_t0_alpha( refl[ k ], alpha ),
                                   name( alpha ) );
                const auto t0m = induced_map( refl[ i ], refl[ k ], m );
                if ( m.params_injective() )
                    CHECK( check_map( t0m, refl[ i ].quotient, refl[ k ].quotient, MapProperty::Homeomorphism ).holds );
            }
    CHECK( onto > 1000 );
}

TEST_CASE( "T(0,alpha) need not transfer along quasihomomorphisms that miss points" )
{
    // One point, each parameter isolated, mapped onto p of a two point space
    // whose opens are <{p},{}> and <{q},{p,q}>, with the parameters swapped.
    const auto x = Universe::make( { "x" }, { "a1", "a2" } );
    const auto src = space( x, { rows( x, { { "x" }, {} } ), rows( x, { {}, { "x" } } ) } );
    const auto y = Universe::make( { "p", "q" }, { "a1", "a2" } );
    const auto tgt = space( y, { rows( y, { { "p" }, {} } ), rows( y, { { "q" }, { "p", "q" } } ) } );
    const SoftMapping m{ x, y, { 0 }, { 1, 0 } };
    REQUIRE( is_quasihomomorphism( m, src, tgt ) );
    REQUIRE( check_axiom( tgt, Axiom::T0 ) );
    const auto rs = compute_reflection( src );
    const auto rt = compute_reflection( tgt );
    for ( auto alpha : { Alpha::OneK, Alpha::Two, Alpha::ThreeK, Alpha::TSK } )
    {
        CHECK_MESSAGE( check_t0_alpha( rs, alpha ), name( alpha ) );
        CHECK_FALSE_MESSAGE( check_t0_alpha( rt, alpha ), name( alpha ) );
    }
    const auto t0m = induced_map( rs, rt, m );
    CHECK_FALSE( check_map( t0m, rs.quotient, rt.quotient, MapProperty::Homeomorphism ).holds );
}
