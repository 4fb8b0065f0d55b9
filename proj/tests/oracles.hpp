#pragma once

// Slow reference implementations used as test oracles. They read the
// definitions literally, quantifying over every open, closed or clopen soft
// set, and share no decision code with the library.

#include "softtop/document.hpp"
#include "softtop/explorer.hpp"
#include "softtop/morphisms.hpp"
#include "softtop/reflection.hpp"
#include "softtop/separation.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using namespace softtop;

inline std::filesystem::path corpus_dir()
{
    return SOFTTOP_CORPUS_DIR;
}

inline SoftSpace corpus_space( const std::string& file )
{
    return space_from_document( read_space_document( corpus_dir() / file ), true );
}

inline std::vector< SoftSet > opens( const SoftSpace& sp )
{
    std::vector< SoftSet > out;
    for ( auto m : sp.opens() )
        out.emplace_back( sp.universe(), m );
    return out;
}

inline std::vector< SoftSet > closeds( const SoftSpace& sp )
{
    std::vector< SoftSet > out;
    for ( const auto& g : opens( sp ) )
        out.push_back( complement( g ) );
    return out;
}

inline bool contains_set( const std::vector< SoftSet >& family, const SoftSet& s )
{
    return std::find( family.begin(), family.end(), s ) != family.end();
}

inline std::vector< SoftSet > clopens( const SoftSpace& sp )
{
    std::vector< SoftSet > out;
    const auto cl = closeds( sp );
    for ( const auto& g : opens( sp ) )
        if ( contains_set( cl, g ) )
            out.push_back( g );
    return out;
}

/// Same total memberships in every open.
inline bool approx( const SoftSpace& sp, std::size_t x, std::size_t y )
{
    for ( const auto& g : opens( sp ) )
        if ( member( x, g ) != member( y, g ) )
            return false;
    return true;
}

inline bool excluded( std::size_t x, const SoftSet& s )
{
    return member( x, complement( s ) );
}

inline bool exists( const std::vector< SoftSet >& family, const std::function< bool( const SoftSet& ) >& pred )
{
    return std::any_of( family.begin(), family.end(), pred );
}

inline bool distinct_pairs( const SoftSpace& sp, const std::function< bool( std::size_t, std::size_t ) >& pred )
{
    const std::size_t n = sp.universe()->point_count();
    for ( std::size_t x = 0; x < n; ++x )
        for ( std::size_t y = 0; y < n; ++y )
            if ( x != y && !pred( x, y ) )
                return false;
    return true;
}

inline bool regular_like( const SoftSpace& sp, bool k )
{
    const auto os = opens( sp );
    for ( const auto& f : closeds( sp ) )
        for ( std::size_t x = 0; x < sp.universe()->point_count(); ++x )
        {
            const bool triggered = k ? excluded( x, f ) : !member( x, f );
            if ( !triggered )
                continue;
            bool found = false;
            for ( const auto& g : os )
                for ( const auto& h : os )
                    found = found || ( member( x, g ) && is_subset( f, h ) && is_disjoint( g, h ) );
            if ( !found )
                return false;
        }
    return true;
}

inline bool axiom( const SoftSpace& sp, Axiom ax )
{
    const auto os = opens( sp );
    const std::size_t n = sp.universe()->point_count();
    const std::size_t m = sp.universe()->parameter_count();
    // one open (from `family`) contains x and leaves y out (or excludes y when k)
    auto sep = [ & ]( const std::vector< SoftSet >& family, std::size_t x, std::size_t y, bool k ) {
        return exists( family, [ & ]( const SoftSet& g ) {
            return member( x, g ) && ( k ? excluded( y, g ) : !member( y, g ) );
        } );
    };
    switch ( ax )
    {
    case Axiom::T0:
        return distinct_pairs( sp, [ & ]( auto x, auto y ) { return sep( os, x, y, false ) || sep( os, y, x, false ); } );
    case Axiom::T0U:
        for ( std::size_t x = 0; x < n; ++x )
            for ( std::size_t y = 0; y < n; ++y )
                if ( oracle::approx( sp, x, y ) )
                    for ( std::size_t a = 0; a < m; ++a )
                        for ( const auto& g : os )
                            if ( member_at( x, a, g ) != member_at( y, a, g ) )
                                return false;
        return true;
    case Axiom::T1:
        return distinct_pairs( sp, [ & ]( auto x, auto y ) { return sep( os, x, y, false ) && sep( os, y, x, false ); } );
    case Axiom::T2:
        return distinct_pairs( sp, [ & ]( auto x, auto y ) {
            for ( const auto& f : os )
                for ( const auto& g : os )
                    if ( member( x, f ) && member( y, g ) && is_disjoint( f, g ) )
                        return true;
            return false;
        } );
    case Axiom::Regular:
        return regular_like( sp, false );
    case Axiom::T3:
        return regular_like( sp, false ) && axiom( sp, Axiom::T1 );
    case Axiom::T0k:
        return distinct_pairs( sp, [ & ]( auto x, auto y ) { return sep( os, x, y, true ) || sep( os, y, x, true ); } );
    case Axiom::T1k:
        return distinct_pairs( sp, [ & ]( auto x, auto y ) { return sep( os, x, y, true ) && sep( os, y, x, true ); } );
    case Axiom::KRegular:
        return regular_like( sp, true );
    case Axiom::T3k:
        return regular_like( sp, true ) && axiom( sp, Axiom::T1k );
    case Axiom::TotallySeparated: {
        const auto cl = clopens( sp );
        return distinct_pairs( sp, [ & ]( auto x, auto y ) { return sep( cl, x, y, false ) || sep( cl, y, x, false ); } );
    }
    case Axiom::KTotallySeparated: {
        const auto cl = clopens( sp );
        return distinct_pairs( sp, [ & ]( auto x, auto y ) { return sep( cl, x, y, true ) || sep( cl, y, x, true ); } );
    }
    }
    return false;
}

/// Pairwise union / intersection iterated to a fixed point.
inline std::vector< Mask > pairwise_closure( std::vector< Mask > family, Mask full )
{
    std::set< Mask > fam( family.begin(), family.end() );
    fam.insert( 0 );
    fam.insert( full );
    for ( bool grew = true; grew; )
    {
        grew = false;
        const std::vector< Mask > snapshot( fam.begin(), fam.end() );
        for ( auto a : snapshot )
            for ( auto b : snapshot )
            {
                grew = fam.insert( a | b ).second || grew;
                grew = fam.insert( a & b ).second || grew;
            }
    }
    return { fam.begin(), fam.end() };
}

/// Classical topology on a finite point set given as bitsets.
inline bool is_point_set_topology( const std::vector< Mask >& family, Mask full )
{
    const std::set< Mask > fam( family.begin(), family.end() );
    if ( !fam.count( 0 ) || !fam.count( full ) )
        return false;
    for ( auto a : fam )
        for ( auto b : fam )
            if ( !fam.count( a | b ) || !fam.count( a & b ) )
                return false;
    return true;
}

/// All soft sets over a universe with at most 20 cells.
inline std::vector< SoftSet > all_soft_sets( const UniversePtr& u )
{
    std::vector< SoftSet > out;
    for ( Mask m = 0; m < ( Mask{ 1 } << u->cell_count() ); ++m )
        out.emplace_back( u, m );
    return out;
}

/// Every topology on a set of `cells` points by brute force over families.
/// Only usable for cells <= 4 (2^16 candidate families).
inline std::size_t count_topologies_brute( std::size_t cells )
{
    const Mask full = ( Mask{ 1 } << cells ) - 1;
    const std::size_t sets = std::size_t{ 1 } << cells;
    std::size_t count = 0;
    for ( std::uint64_t fam = 0; fam < ( std::uint64_t{ 1 } << sets ); ++fam )
    {
        if ( !( fam & 1 ) || !( ( fam >> full ) & 1 ) )
            continue;
        bool ok = true;
        for ( std::size_t a = 0; a < sets && ok; ++a )
            if ( ( fam >> a ) & 1 )
                for ( std::size_t b = a + 1; b < sets && ok; ++b )
                    if ( ( fam >> b ) & 1 )
                        ok = ( ( fam >> ( a | b ) ) & 1 ) && ( ( fam >> ( a & b ) ) & 1 );
        count += ok;
    }
    return count;
}

/// Every soft mapping between two universes.
inline std::vector< SoftMapping > all_mappings( const UniversePtr& from, const UniversePtr& to )
{
    std::vector< SoftMapping > out;
    const std::size_t n = from->point_count(), m = from->parameter_count();
    const std::size_t p = to->point_count(), q = to->parameter_count();
    std::size_t point_maps = 1, param_maps = 1;
    for ( std::size_t i = 0; i < n; ++i )
        point_maps *= p;
    for ( std::size_t i = 0; i < m; ++i )
        param_maps *= q;
    for ( std::size_t f = 0; f < point_maps; ++f )
        for ( std::size_t e = 0; e < param_maps; ++e )
        {
            std::vector< std::size_t > fm( n ), em( m );
            for ( std::size_t i = 0, c = f; i < n; ++i, c /= p )
                fm[ i ] = c % p;
            for ( std::size_t i = 0, c = e; i < m; ++i, c /= q )
                em[ i ] = c % q;
            out.emplace_back( from, to, std::move( fm ), std::move( em ) );
        }
    return out;
}

inline SoftSet closure( const SoftSpace& sp, const SoftSet& s )
{
    auto out = SoftSet::absolute( sp.universe() );
    for ( const auto& f : closeds( sp ) )
        if ( is_subset( s, f ) )
            out = soft_intersection( out, f );
    return out;
}

inline bool continuous( const SoftMapping& m, const SoftSpace& dom, const SoftSpace& cod )
{
    const auto dom_opens = opens( dom );
    for ( const auto& g : opens( cod ) )
        if ( !contains_set( dom_opens, preimage( m, g ) ) )
            return false;
    return true;
}

inline bool initial( const SoftMapping& m, const SoftSpace& dom, const SoftSpace& cod )
{
    if ( !continuous( m, dom, cod ) )
        return false;
    const auto cod_opens = opens( cod );
    for ( const auto& f : opens( dom ) )
        if ( !exists( cod_opens, [ & ]( const SoftSet& g ) { return preimage( m, g ) == f; } ) )
            return false;
    return true;
}

inline bool initial_via_closure( const SoftMapping& m, const SoftSpace& dom, const SoftSpace& cod )
{
    if ( !continuous( m, dom, cod ) )
        return false;
    for ( const auto& f : closeds( dom ) )
        if ( !( preimage( m, oracle::closure( cod, image( m, f ) ) ) == f ) )
            return false;
    return true;
}

inline bool quasihomomorphism( const SoftMapping& m, const SoftSpace& dom, const SoftSpace& cod )
{
    if ( !initial( m, dom, cod ) )
        return false;
    const auto covered = image( m, SoftSet::absolute( dom.universe() ) );
    for ( const auto& g : opens( cod ) )
        for ( const auto& c : closeds( cod ) )
        {
            const auto lc = soft_intersection( g, c );
            if ( !lc.is_null() && soft_intersection( covered, lc ).is_null() )
                return false;
        }
    return true;
}

inline bool maps_family_into( const SoftMapping& m, const std::vector< SoftSet >& from, const std::vector< SoftSet >& to )
{
    return std::all_of( from.begin(), from.end(), [ & ]( const SoftSet& s ) { return contains_set( to, image( m, s ) ); } );
}

/// Inverse of a bijective mapping.
inline SoftMapping inverse( const SoftMapping& m )
{
    std::vector< std::size_t > f( m.point_map().size() ), e( m.param_map().size() );
    for ( std::size_t i = 0; i < f.size(); ++i )
        f[ m.point_map()[ i ] ] = i;
    for ( std::size_t i = 0; i < e.size(); ++i )
        e[ m.param_map()[ i ] ] = i;
    return SoftMapping{ m.target(), m.source(), std::move( f ), std::move( e ) };
}

inline bool map_property( const SoftMapping& m, const SoftSpace& dom, const SoftSpace& cod, MapProperty p )
{
    switch ( p )
    {
    case MapProperty::Continuous:
        return continuous( m, dom, cod );
    case MapProperty::Open:
        return maps_family_into( m, opens( dom ), opens( cod ) );
    case MapProperty::Closed:
        return maps_family_into( m, closeds( dom ), closeds( cod ) );
    case MapProperty::Initial:
        return initial( m, dom, cod );
    case MapProperty::InitialViaClosure:
        return initial_via_closure( m, dom, cod );
    case MapProperty::Quasihomomorphism:
        return quasihomomorphism( m, dom, cod );
    case MapProperty::Injective:
        return m.points_injective() && m.params_injective();
    case MapProperty::Surjective:
        return m.points_surjective() && m.params_surjective();
    case MapProperty::Homeomorphism:
        return m.is_injective() && m.is_surjective() && continuous( m, dom, cod )
               && continuous( inverse( m ), cod, dom );
    }
    return false;
}

/// Every space with |X|*|A| <= 4, in a fixed order.
inline std::vector< SoftSpace > small_corpus()
{
    std::vector< SoftSpace > out;
    for ( std::size_t n = 1; n <= 4; ++n )
        for ( std::size_t m = 1; n * m <= 4; ++m )
        {
            auto spaces = enumerate_spaces( EnumerationSpec::exhaustive( n, m ) );
            out.insert( out.end(), spaces.begin(), spaces.end() );
        }
    return out;
}

} // namespace oracle
