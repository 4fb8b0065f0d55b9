// softtop: command-line front end.
//
// Exit codes: 0 all checks pass, 1 counterexample or expectation mismatch,
// 2 input or usage error, 3 internal consistency failure.

#include "softtop/corpus.hpp"
#include "softtop/document.hpp"
#include "softtop/explorer.hpp"
#include "softtop/morphisms.hpp"
#include "softtop/reflection.hpp"
#include "softtop/separation.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace softtop;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;
constexpr int exit_internal = 3;

struct Options
{
    std::string report;

    std::string file;
    std::vector< std::string > axioms;
    bool generate = false;

    std::string out;
    bool force = false;

    std::string domain;
    std::string codomain;
    std::vector< std::string > props;

    std::size_t points = 0;
    std::size_t params = 0;
    bool exhaustive = false;
    std::size_t sample = 0;
    std::uint64_t seed = 0;
    std::string implication;
    std::string witness;
    std::size_t threads = 0;
};

std::string yes_no( bool value )
{
    return value ? "true" : "false";
}

void write_report( const Options& opt, const ordered_json& report )
{
    if ( !opt.report.empty() )
        write_text_file( opt.report, report.dump( 2 ) + "\n" );
}

std::vector< Predicate > parse_predicates( const std::vector< std::string >& names )
{
    std::vector< Predicate > out;
    for ( const auto& n : names )
    {
        auto p = parse_predicate( n );
        if ( !p )
            throw ParseError( "unknown axiom '" + n + "'" );
        out.push_back( *p );
    }
    return out;
}

int run_classify( const Options& opt )
{
    const auto document = read_space_document( opt.file );
    const auto space = space_from_document( document, opt.generate );

    std::vector< Predicate > selected;
    if ( opt.axioms.empty() )
    {
        for ( auto ax : all_axioms )
            selected.emplace_back( ax );
        for ( auto alpha : all_alphas )
            selected.emplace_back( alpha );
    }
    else
    {
        selected = parse_predicates( opt.axioms );
    }

    const auto profile = classify( space, opt.file );
    const bool t0u = profile[ Axiom::T0U ];
    std::optional< Reflection > reflection;
    if ( t0u )
        reflection = compute_reflection( space );

    const ordered_json expected = document.metadata.value( "expected", ordered_json::object() );
    ordered_json rows = ordered_json::array();
    bool mismatch = false;

    std::cout << std::left << std::setw( 18 ) << "axiom" << "  " << std::setw( 6 ) << "value" << "  expected\n";
    for ( const auto& predicate : selected )
    {
        const std::string label = to_string( predicate );
        std::optional< bool > value;
        if ( const auto* ax = std::get_if< Axiom >( &predicate ) )
            value = profile[ *ax ];
        else if ( reflection )
            value = check_t0_alpha( *reflection, std::get< Alpha >( predicate ) );

        std::string expectation = "-";
        if ( expected.contains( label ) && expected[ label ].is_boolean() )
        {
            const bool want = expected[ label ].get< bool >();
            const bool ok = value && *value == want;
            mismatch = mismatch || !ok;
            expectation = yes_no( want ) + ( ok ? "  ok" : "  MISMATCH" );
        }
        std::cout << std::setw( 18 ) << label << "  " << std::setw( 6 ) << ( value ? yes_no( *value ) : "n/a" ) << "  "
                  << expectation << "\n";
        ordered_json row = { { "axiom", label } };
        row[ "value" ] = value ? ordered_json( *value ) : ordered_json( nullptr );
        rows.push_back( std::move( row ) );
    }
    write_report( opt, { { "file", opt.file }, { "profile", rows }, { "passed", !mismatch } } );
    return mismatch ? exit_fail : exit_pass;
}

int run_reflect( const Options& opt )
{
    const auto space = parse_space( read_text_file( opt.file ) );
    const auto reflection = compute_reflection( space, opt.force );
    const auto& points = space.universe()->points();

    ordered_json classes = ordered_json::array();
    std::cout << "classes:\n";
    for ( std::size_t c = 0; c < reflection.classes.size(); ++c )
    {
        std::vector< std::string > members;
        for ( auto x : reflection.classes[ c ] )
            members.push_back( points[ x ] );
        std::cout << "  " << reflection.quotient.universe()->points()[ c ] << " = {";
        for ( std::size_t i = 0; i < members.size(); ++i )
            std::cout << ( i ? "," : "" ) << members[ i ];
        std::cout << "}\n";
        classes.push_back( members );
    }
    std::cout << "quotient opens:\n";
    for ( const auto& set : reflection.quotient.topology().open_sets() )
        std::cout << "  " << to_string( set ) << "\n";
    if ( !reflection.verified )
        std::cout << "warning: source is not soft T0U; the quotient is unverified\n";

    ordered_json metadata = { { "name", "reflection of " + opt.file }, { "verified", reflection.verified } };
    if ( !opt.out.empty() )
        write_text_file( opt.out, serialize_space_document( document_from_space( reflection.quotient, metadata ) ) );
    write_report( opt, { { "file", opt.file }, { "classes", classes }, { "verified", reflection.verified } } );
    return exit_pass;
}

int run_check_map( const Options& opt )
{
    const auto document = read_mapping_document( opt.file );
    const auto base = std::filesystem::path( opt.file ).parent_path();
    auto resolve = [ & ]( const std::string& given, const std::string& fallback, const char* what ) {
        if ( !given.empty() )
            return std::filesystem::path( given );
        if ( fallback.empty() )
            throw ParseError( std::string( "no " ) + what + " given and the mapping document names none" );
        return base / fallback;
    };
    const auto dom = parse_space( read_text_file( resolve( opt.domain, document.source, "domain" ) ), true );
    const auto cod = parse_space( read_text_file( resolve( opt.codomain, document.target, "codomain" ) ), true );
    const auto mapping = mapping_from_document( document, dom.universe(), cod.universe() );

    std::vector< MapProperty > selected;
    for ( const auto& p : opt.props )
    {
        auto prop = parse_map_property( p );
        if ( !prop )
            throw ParseError( "unknown map property '" + p + "'" );
        selected.push_back( *prop );
    }
    const bool asserted = !selected.empty();
    if ( !asserted )
        selected.assign( all_map_properties.begin(), all_map_properties.end() );

    const ordered_json expected = document.metadata.value( "expected", ordered_json::object() );
    bool failed = false;
    ordered_json rows = ordered_json::array();
    std::cout << std::left << std::setw( 18 ) << "property" << "  " << std::setw( 6 ) << "value" << "  note\n";
    for ( auto prop : selected )
    {
        const auto result = check_map( mapping, dom, cod, prop );
        const std::string label{ name( prop ) };
        std::string note;
        if ( asserted && !result.holds )
        {
            failed = true;
            note = "FAILS";
        }
        else if ( expected.contains( label ) && expected[ label ].is_boolean() )
        {
            const bool ok = expected[ label ].get< bool >() == result.holds;
            failed = failed || !ok;
            note = ok ? "expected" : "MISMATCH";
        }
        if ( !result.holds && !result.detail.empty() )
            note += ( note.empty() ? "" : ": " ) + result.detail;
        std::cout << std::setw( 18 ) << label << "  " << std::setw( 6 ) << yes_no( result.holds ) << "  " << note
                  << "\n";
        ordered_json row = { { "property", label }, { "holds", result.holds } };
        if ( !result.holds )
        {
            row[ "witness" ] = ordered_json::array();
            for ( const auto& w : result.witness )
                row[ "witness" ].push_back( to_string( w ) );
        }
        rows.push_back( std::move( row ) );
    }
    write_report( opt, { { "file", opt.file }, { "properties", rows }, { "passed", !failed } } );
    return failed ? exit_fail : exit_pass;
}

int run_generate( const Options& opt )
{
    const auto document = read_space_document( opt.file );
    const auto space = space_from_document( document, true );
    const auto out = document_from_space( space, document.metadata, document.opens );
    write_text_file( opt.out, serialize_space_document( out ) );
    std::cout << "generated " << space.opens().size() << " opens from " << document.opens.size() << " sets; wrote " << opt.out
              << "\n";
    write_report( opt, { { "file", opt.file },
                         { "out", opt.out },
                         { "printed", document.opens.size() },
                         { "opens", space.opens().size() } } );
    return exit_pass;
}

int run_mine( const Options& opt )
{
    EnumerationSpec spec = opt.exhaustive
                               ? EnumerationSpec::exhaustive( opt.points, opt.params, exhaustive_bound_from_env() )
                               : EnumerationSpec::sampled( opt.points, opt.params, opt.sample, opt.seed );
    validate( spec );
    const auto query = parse_implication( opt.implication );
    const std::size_t threads = opt.threads ? opt.threads : std::max( 1u, std::thread::hardware_concurrency() );
    const auto report = mine_implication( spec, query, threads );

    const bool refuted = report.status == ImplicationReport::Status::refuted;
    std::cout << "implication: " << to_string( query ) << "\n"
              << "spaces checked: " << report.spaces_checked << "\n"
              << "skipped (not T0U): " << report.skipped << "\n"
              << "status: " << ( refuted ? "refuted" : "holds" ) << "\n";

    ordered_json out = { { "implication", to_string( query ) },
                         { "spaces_checked", report.spaces_checked },
                         { "skipped", report.skipped },
                         { "status", refuted ? "refuted" : "holds" } };
    if ( refuted )
    {
        ordered_json expected = ordered_json::object();
        for ( const auto& p : query.antecedent )
            expected[ to_string( p ) ] = true;
        expected[ to_string( query.consequent ) ] = false;
        ordered_json metadata = { { "name", "counterexample" },
                                  { "note", "refutes " + to_string( query ) },
                                  { "expected", expected } };
        const auto text = serialize_space_document( document_from_space( *report.witness, metadata ) );
        if ( !opt.witness.empty() )
        {
            write_text_file( opt.witness, text );
            std::cout << "witness: " << opt.witness << "\n";
            out[ "witness_path" ] = opt.witness;
        }
        else
        {
            std::cout << "witness:\n" << text;
        }
        out[ "witness" ] = ordered_json::parse( text );
    }
    write_report( opt, out );
    return refuted ? exit_fail : exit_pass;
}

int run_verify_corpus( const Options& opt )
{
    const auto report = verify_corpus( opt.file );
    std::cout << format_table( report );
    write_report( opt, to_json( report ) );
    return report.passed() ? exit_pass : exit_fail;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Soft topological spaces: separation axioms, T0 reflections, soft maps." };
    app.require_subcommand( 1 );
    app.fallthrough();
    Options opt;
    app.add_option( "--report", opt.report, "Write a JSON report to this file" );

    auto* classify_cmd = app.add_subcommand( "classify", "Decide the separation axioms of a space" );
    classify_cmd->add_option( "file", opt.file, "Space document" )->required()->check( CLI::ExistingFile );
    classify_cmd->add_option( "--axioms", opt.axioms, "Comma-separated axiom names" )->delimiter( ',' );
    classify_cmd->add_flag( "--generate", opt.generate, "Close the family instead of validating it" );

    auto* reflect_cmd = app.add_subcommand( "reflect", "Compute the soft T0 reflection" );
    reflect_cmd->add_option( "file", opt.file, "Space document" )->required()->check( CLI::ExistingFile );
    reflect_cmd->add_option( "--out", opt.out, "Write the quotient space document here" );
    reflect_cmd->add_flag( "--force", opt.force, "Build the quotient even when the space is not soft T0U" );

    auto* map_cmd = app.add_subcommand( "check-map", "Decide properties of a soft mapping" );
    map_cmd->add_option( "mapfile", opt.file, "Mapping document" )->required()->check( CLI::ExistingFile );
    map_cmd->add_option( "--domain", opt.domain, "Domain space document" )->check( CLI::ExistingFile );
    map_cmd->add_option( "--codomain", opt.codomain, "Codomain space document" )->check( CLI::ExistingFile );
    map_cmd->add_option( "--props", opt.props, "Comma-separated properties that must hold" )->delimiter( ',' );

    auto* generate_cmd = app.add_subcommand( "generate", "Close a family into the topology it generates" );
    generate_cmd->add_option( "file", opt.file, "Space document" )->required()->check( CLI::ExistingFile );
    generate_cmd->add_option( "--out", opt.out, "Output document" )->required();

    auto* mine_cmd = app.add_subcommand( "mine", "Test an implication over enumerated spaces" );
    mine_cmd->add_option( "--points", opt.points, "Number of points" )->required()->check( CLI::PositiveNumber );
    mine_cmd->add_option( "--params", opt.params, "Number of parameters" )->required()->check( CLI::PositiveNumber );
    auto* exhaustive = mine_cmd->add_flag( "--exhaustive", opt.exhaustive, "Enumerate every soft topology" );
    auto* sample = mine_cmd->add_option( "--sample", opt.sample, "Number of random families" )
                       ->check( CLI::PositiveNumber );
    auto* seed = mine_cmd->add_option( "--seed", opt.seed, "Random seed" );
    exhaustive->excludes( sample )->excludes( seed );
    sample->needs( seed );
    seed->needs( sample );
    mine_cmd->add_option( "--implication", opt.implication, "ANTE=>CONS, antecedents joined by &" )->required();
    mine_cmd->add_option( "--witness", opt.witness, "Write a refuting space here" );
    mine_cmd->add_option( "--threads", opt.threads, "Worker threads (default: hardware)" );

    auto* corpus_cmd = app.add_subcommand( "verify-corpus", "Check fixture documents against their expectations" );
    corpus_cmd->add_option( "dir", opt.file, "Corpus directory" )->required()->check( CLI::ExistingDirectory );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::Success& e )
    {
        return app.exit( e );
    }
    catch ( const CLI::ParseError& e )
    {
        app.exit( e );
        if ( e.get_exit_code() != 0 )
            std::cerr << app.help();
        return exit_input;
    }

    try
    {
        if ( mine_cmd->parsed() && !opt.exhaustive && opt.sample == 0 )
            throw ParseError( "mine needs --exhaustive or --sample K --seed S" );
        if ( *classify_cmd )
            return run_classify( opt );
        if ( *reflect_cmd )
            return run_reflect( opt );
        if ( *map_cmd )
            return run_check_map( opt );
        if ( *generate_cmd )
            return run_generate( opt );
        if ( *mine_cmd )
            return run_mine( opt );
        return run_verify_corpus( opt );
    }
    catch ( const InternalError& e )
    {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    catch ( const std::exception& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}
