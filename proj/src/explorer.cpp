#include "softtop/explorer.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <random>
#include <thread>

namespace softtop {

std::size_t exhaustive_bound_from_env()
{
    const char* raw = std::getenv( "SOFTTOP_MAX_CELLS" );
    if ( raw == nullptr || *raw == '\0' )
        return default_exhaustive_cells;
    char* end = nullptr;
    const unsigned long value = std::strtoul( raw, &end, 10 );
    if ( end == raw || *end != '\0' || value == 0 )
        throw Error( "SOFTTOP_MAX_CELLS must be a positive integer" );
    return std::min< std::size_t >( value, hard_exhaustive_cells );
}

EnumerationSpec EnumerationSpec::exhaustive( std::size_t points, std::size_t params, std::size_t max_cells )
{
    EnumerationSpec spec;
    spec.points = points;
    spec.params = params;
    spec.mode = Mode::exhaustive;
    spec.max_cells = max_cells;
    return spec;
}

EnumerationSpec EnumerationSpec::sampled( std::size_t points, std::size_t params, std::size_t count,
                                          std::uint64_t seed )
{
    EnumerationSpec spec;
    spec.points = points;
    spec.params = params;
    spec.mode = Mode::sampled;
    spec.sample_count = count;
    spec.seed = seed;
    return spec;
}

void validate( const EnumerationSpec& spec )
{
    if ( spec.points == 0 || spec.params == 0 )
        throw Error( "enumeration needs at least one point and one parameter" );
    const std::size_t cells = spec.points * spec.params;
    if ( cells > max_cells )
        throw Error( "enumeration shape exceeds " + std::to_string( max_cells ) + " cells" );
    if ( spec.mode == EnumerationSpec::Mode::exhaustive )
    {
        const std::size_t bound = std::min( spec.max_cells, hard_exhaustive_cells );
        if ( cells > bound )
            throw Error( "exhaustive enumeration of " + std::to_string( spec.points ) + "x"
                         + std::to_string( spec.params ) + " exceeds the bound of " + std::to_string( bound )
                         + " cells" );
    }
    else if ( !spec.seed )
    {
        throw Error( "sampled enumeration requires a seed" );
    }
}

UniversePtr enumeration_universe( std::size_t points, std::size_t params )
{
    std::vector< std::string > xs;
    std::vector< std::string > as;
    for ( std::size_t i = 1; i <= points; ++i )
        xs.push_back( "x" + std::to_string( i ) );
    for ( std::size_t i = 1; i <= params; ++i )
        as.push_back( "a" + std::to_string( i ) );
    return Universe::make( std::move( xs ), std::move( as ) );
}

namespace {

// Topologies on a finite set correspond one-to-one to assignments of a least
// open neighbourhood U_c to every cell c, with c in U_c and
// d in U_c  =>  U_d subset of U_c.
class KernelSearch
{
public:
    using Sink = std::function< bool( std::vector< Mask > ) >;

    KernelSearch( std::size_t cells, Sink sink ) : _n{ cells }, _kernels( cells, 0 ), _sink{ std::move( sink ) } {}

    // Explore the subtree where U_0 = first_kernel.
    bool run_branch( Mask first_kernel )
    {
        _kernels[ 0 ] = first_kernel;
        return descend( 1 );
    }

    static std::vector< Mask > first_kernels( std::size_t cells )
    {
        std::vector< Mask > out;
        for ( Mask m = 0; m < ( Mask{ 1 } << cells ); ++m )
            if ( m & 1 )
                out.push_back( m );
        return out;
    }

private:
    bool descend( std::size_t k )
    {
        if ( k == _n )
            return _sink( opens() );
        const Mask limit = Mask{ 1 } << _n;
        for ( Mask m = 0; m < limit; ++m )
        {
            if ( !( m >> k & 1 ) || !consistent( k, m ) )
                continue;
            _kernels[ k ] = m;
            if ( !descend( k + 1 ) )
                return false;
        }
        return true;
    }

    bool consistent( std::size_t k, Mask m ) const
    {
        for ( std::size_t j = 0; j < k; ++j )
        {
            if ( ( m >> j & 1 ) && ( _kernels[ j ] & ~m ) != 0 )
                return false;
            if ( ( _kernels[ j ] >> k & 1 ) && ( m & ~_kernels[ j ] ) != 0 )
                return false;
        }
        return true;
    }

    std::vector< Mask > opens() const
    {
        std::vector< Mask > out;
        const Mask limit = Mask{ 1 } << _n;
        for ( Mask s = 0; s < limit; ++s )
        {
            bool open = true;
            for ( std::size_t c = 0; c < _n && open; ++c )
                if ( ( s >> c & 1 ) && ( _kernels[ c ] & ~s ) != 0 )
                    open = false;
            if ( open )
                out.push_back( s );
        }
        return out;
    }

    std::size_t _n;
    std::vector< Mask > _kernels;
    Sink _sink;
};

void check_cells( std::size_t cells )
{
    if ( cells == 0 || cells > hard_exhaustive_cells )
        throw Error( "exhaustive topology enumeration supports 1.." + std::to_string( hard_exhaustive_cells )
                     + " cells" );
}

} // namespace

std::vector< std::vector< Mask > > enumerate_cell_topologies( std::size_t cells, std::size_t threads )
{
    check_cells( cells );
    const auto branches = KernelSearch::first_kernels( cells );
    std::vector< std::vector< std::vector< Mask > > > per_branch( branches.size() );
    auto work = [ & ]( std::size_t worker, std::size_t stride ) {
        for ( std::size_t b = worker; b < branches.size(); b += stride )
        {
            KernelSearch search{ cells, [ & ]( std::vector< Mask > opens ) {
                                    per_branch[ b ].push_back( std::move( opens ) );
                                    return true;
                                } };
            search.run_branch( branches[ b ] );
        }
    };

    threads = std::max< std::size_t >( 1, std::min( threads, branches.size() ) );
    if ( threads == 1 )
    {
        work( 0, 1 );
    }
    else
    {
        std::vector< std::thread > pool;
        for ( std::size_t t = 0; t < threads; ++t )
            pool.emplace_back( work, t, threads );
        for ( auto& th : pool )
            th.join();
    }

    std::vector< std::vector< Mask > > out;
    for ( auto& branch : per_branch )
        for ( auto& topology : branch )
            out.push_back( std::move( topology ) );
    return out;
}

void for_each_space( const EnumerationSpec& spec, const std::function< bool( const SoftSpace& ) >& visit )
{
    validate( spec );
    const auto universe = enumeration_universe( spec.points, spec.params );
    const std::size_t cells = universe->cell_count();

    if ( spec.mode == EnumerationSpec::Mode::exhaustive )
    {
        for ( auto first : KernelSearch::first_kernels( cells ) )
        {
            KernelSearch search{ cells, [ & ]( std::vector< Mask > opens ) {
                                    return visit( SoftSpace{ SoftTopology{ universe, std::move( opens ),
                                                                           SoftTopology::trusted } } );
                                } };
            if ( !search.run_branch( first ) )
                return;
        }
        return;
    }

    std::mt19937_64 rng{ *spec.seed };
    std::uniform_int_distribution< std::size_t > family_size{ 1, 2 * cells };
    const Mask full = universe->full();
    for ( std::size_t i = 0; i < spec.sample_count; ++i )
    {
        std::vector< Mask > family( family_size( rng ) );
        for ( auto& m : family )
            m = rng() & full;
        if ( !visit( SoftSpace{ generate_topology_bits( universe, family ) } ) )
            return;
    }
}

std::vector< SoftSpace > enumerate_spaces( const EnumerationSpec& spec, std::size_t threads )
{
    validate( spec );
    std::vector< SoftSpace > out;
    if ( spec.mode == EnumerationSpec::Mode::exhaustive && threads > 1 )
    {
        const auto universe = enumeration_universe( spec.points, spec.params );
        for ( auto& opens : enumerate_cell_topologies( universe->cell_count(), threads ) )
            out.emplace_back( SoftTopology{ universe, std::move( opens ), SoftTopology::trusted } );
        return out;
    }
    for_each_space( spec, [ & ]( const SoftSpace& sp ) {
        out.push_back( sp );
        return true;
    } );
    return out;
}

std::string to_string( const Predicate& predicate )
{
    return std::visit( []( auto p ) { return std::string( name( p ) ); }, predicate );
}

std::optional< Predicate > parse_predicate( std::string_view text )
{
    while ( !text.empty() && text.front() == ' ' )
        text.remove_prefix( 1 );
    while ( !text.empty() && text.back() == ' ' )
        text.remove_suffix( 1 );
    if ( auto axiom = parse_axiom( text ) )
        return Predicate{ *axiom };
    if ( auto alpha = parse_alpha( text ) )
        return Predicate{ *alpha };
    return std::nullopt;
}

ImplicationQuery parse_implication( std::string_view text )
{
    const auto arrow = text.find( "=>" );
    if ( arrow == std::string_view::npos )
        throw ParseError( "implication must have the form ANTE=>CONS" );
    const auto lhs = text.substr( 0, arrow );
    const auto rhs = text.substr( arrow + 2 );

    auto required = [ & ]( std::string_view part ) {
        auto p = parse_predicate( part );
        if ( !p )
            throw ParseError( "unknown predicate '" + std::string( part ) + "'" );
        return *p;
    };

    ImplicationQuery query{ {}, required( rhs ) };
    std::size_t start = 0;
    while ( true )
    {
        const auto amp = lhs.find( '&', start );
        query.antecedent.push_back( required( lhs.substr( start, amp - start ) ) );
        if ( amp == std::string_view::npos )
            break;
        start = amp + 1;
    }
    return query;
}

std::string to_string( const ImplicationQuery& query )
{
    std::string out;
    for ( std::size_t i = 0; i < query.antecedent.size(); ++i )
        out += ( i ? "&" : "" ) + to_string( query.antecedent[ i ] );
    return out + "=>" + to_string( query.consequent );
}

Verdict evaluate( const SoftSpace& space, const ImplicationQuery& query )
{
    auto is_alpha = []( const Predicate& p ) { return std::holds_alternative< Alpha >( p ); };
    const bool needs_reflection = is_alpha( query.consequent )
                                  || std::any_of( query.antecedent.begin(), query.antecedent.end(), is_alpha );
    std::optional< Reflection > reflection;
    if ( needs_reflection )
    {
        if ( !check_axiom( space, Axiom::T0U ) )
            return Verdict::not_applicable;
        reflection = compute_reflection( space );
    }

    auto value = [ & ]( const Predicate& p ) {
        if ( const auto* axiom = std::get_if< Axiom >( &p ) )
            return check_axiom( space, *axiom );
        return check_t0_alpha( *reflection, std::get< Alpha >( p ) );
    };
    for ( const auto& p : query.antecedent )
        if ( !value( p ) )
            return Verdict::holds;
    return value( query.consequent ) ? Verdict::holds : Verdict::refutes;
}

ImplicationReport mine_implication( const EnumerationSpec& spec, const ImplicationQuery& query, std::size_t threads )
{
    ImplicationReport report{ query, ImplicationReport::Status::holds, std::nullopt, 0, 0 };
    // Spaces are judged in batches; within a batch the first refutation in
    // enumeration order wins, whatever the worker count.
    constexpr std::size_t batch_size = 2048;
    threads = std::max< std::size_t >( 1, threads );
    std::vector< SoftSpace > batch;

    auto flush = [ & ]() -> bool {
        std::vector< Verdict > verdicts( batch.size() );
        if ( threads == 1 )
        {
            for ( std::size_t i = 0; i < batch.size(); ++i )
                verdicts[ i ] = evaluate( batch[ i ], query );
        }
        else
        {
            std::vector< std::future< void > > jobs;
            for ( std::size_t t = 0; t < threads; ++t )
                jobs.push_back( std::async( std::launch::async, [ &, t ] {
                    for ( std::size_t i = t; i < batch.size(); i += threads )
                        verdicts[ i ] = evaluate( batch[ i ], query );
                } ) );
            for ( auto& job : jobs )
                job.get();
        }
        for ( std::size_t i = 0; i < batch.size(); ++i )
        {
            ++report.spaces_checked;
            if ( verdicts[ i ] == Verdict::not_applicable )
                ++report.skipped;
            if ( verdicts[ i ] == Verdict::refutes )
            {
                report.status = ImplicationReport::Status::refuted;
                report.witness = batch[ i ];
                return false;
            }
        }
        batch.clear();
        return true;
    };

    bool keep_going = true;
    for_each_space( spec, [ & ]( const SoftSpace& sp ) {
        batch.push_back( sp );
        if ( batch.size() == batch_size )
            keep_going = flush();
        return keep_going;
    } );
    if ( keep_going && !batch.empty() )
        flush();
    return report;
}

std::optional< SoftSpace > find_counterexample( const EnumerationSpec& spec, const ImplicationQuery& query,
                                                std::size_t threads )
{
    return mine_implication( spec, query, threads ).witness;
}

} // namespace softtop
