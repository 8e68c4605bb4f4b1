// entropia: command-line front end for the prime/entropy experiments and the
// twenty-questions game server.
#include <iostream>
#include <vector>
#include <string>

#include <CLI11.hpp>

#include "entropia/error.hpp"
#include "entropia/game_server.hpp"
#include "entropia/harness.hpp"

namespace {

std::vector<std::string> experiment_names() {
    std::vector<std::string> names;
    for (auto e : entropia::kAllExperiments) names.emplace_back(entropia::experiment_name(e));
    return names;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime and entropy experiments"};
    app.require_subcommand(1);

    entropia::RunConfig config;
    config.out_dir = entropia::default_out_dir();
    std::string format = "json";
    std::string cache;
    std::string dist;

    auto* report = app.add_subcommand("report", "run one experiment and write its report");
    std::string experiment;
    report->add_option("experiment", experiment, "experiment name")
        ->required()
        ->check(CLI::IsMember(experiment_names()));
    report->add_option("--n", config.n_limit, "upper limit N")->capture_default_str();
    report->add_option("--sample", config.sample_size, "erdos-kac sample size (0: automatic)")->capture_default_str();
    report->add_option("--epsilon", config.epsilon, "hardy-ramanujan window")->capture_default_str();
    report->add_option("--seed", config.seed, "random seed")->capture_default_str();
    report->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    report->add_option("--cache", cache, "prime table cache file");
    report->add_option("--out", config.out_dir, "report directory (default $ENTROPIA_OUT or ./reports)");
    report->add_option("--dist", dist, "source-coding distribution CSV (symbol,weight)")->check(CLI::ExistingFile);

    std::uint64_t sieve_n = entropia::kDefaultLimit;
    auto* sieve = app.add_subcommand("sieve", "build (or load) the prime table and print pi(N)");
    sieve->add_option("--n", sieve_n, "upper limit N")->capture_default_str();
    sieve->add_option("--cache", cache, "prime table cache file");

    std::string alphabet;
    std::string host = "127.0.0.1";
    int port = 8080;
    entropia::game::ServerOptions server_options;
    auto* game = app.add_subcommand("game", "twenty-questions game");
    game->require_subcommand(1);
    auto* serve = game->add_subcommand("serve", "serve the HTTP API");
    serve->add_option("--alphabet", alphabet, "alphabet CSV (symbol,weight)")->required()->check(CLI::ExistingFile);
    serve->add_option("--host", host)->capture_default_str();
    serve->add_option("--port", port)->check(CLI::Range(1, 65535))->capture_default_str();
    serve->add_option("--cors-origin", server_options.cors_origin)->capture_default_str();
    serve->add_option("--ui", server_options.ui_dir, "static UI bundle to serve at /")->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (*report) {
        config.experiment = *entropia::parse_experiment(experiment);
        config.output_format = format == "csv" ? entropia::OutputFormat::csv : entropia::OutputFormat::json;
        if (!cache.empty()) config.cache_path = cache;
        if (!dist.empty()) config.distribution_path = dist;
        return entropia::run(config, std::cout, std::cerr);
    }
    if (*sieve) {
        std::optional<std::filesystem::path> cache_path;
        if (!cache.empty()) cache_path = cache;
        return entropia::run_sieve(sieve_n, cache_path, std::cout, std::cerr);
    }
    try {
        const auto deck = entropia::game::load_alphabet(alphabet);
        std::cerr << "alphabet: " << deck.entries().size() << " entries, H = " << deck.entropy_bits()
                  << " bits, expected questions = " << deck.expected_questions() << "\n"
                  << "listening on http://" << host << ':' << port << "\n";
        if (!entropia::game::serve(deck, host, port, server_options)) {
            std::cerr << "error: cannot bind " << host << ':' << port << "\n";
            return 1;
        }
        return 0;
    } catch (const entropia::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
