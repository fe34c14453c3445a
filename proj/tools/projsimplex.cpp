#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "projsimplex/commands.hpp"

int main(int argc, char** argv) {
    using namespace projsimplex;

    CLI::App app{"Determinants and Fubini-Study distances of projective simplices"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::size_t workers = 1;

    std::size_t max_n = 4, samples = 1000;
    auto* verify = app.add_subcommand("verify", "Run the randomized identity and inequality suites");
    verify->add_option("--max-n", max_n, "Largest projective dimension n")->capture_default_str();
    verify->add_option("--samples", samples, "Random cases per suite and dimension")->capture_default_str();
    verify->add_option("--seed", seed, "Master seed")->capture_default_str();

    double s = 0.6;
    auto* example = app.add_subcommand("example", "Report on the isosceles triangle with parameter s");
    example->add_option("--s", s, "Parameter s in (0, 1]")->capture_default_str();

    std::size_t fig_n = 2, count = 2000;
    std::string csv_path = "figure.csv";
    std::string svg_path;
    auto* figure = app.add_subcommand("figure", "Write |D| versus d_min scatter data (CSV, optional SVG)");
    figure->add_option("--n", fig_n, "Projective dimension")->capture_default_str();
    figure->add_option("--count", count, "Number of random simplices")->capture_default_str();
    figure->add_option("--seed", seed, "Master seed")->capture_default_str();
    figure->add_option("--out", csv_path, "CSV output path")->capture_default_str();
    figure->add_option("--svg", svg_path, "Optional SVG output path");
    figure->add_option("--workers", workers, "Sampling threads")->capture_default_str();

    std::size_t cj_n = 2, restarts = 20, budget = 20000;
    double target = 0.5;
    auto* conjecture = app.add_subcommand("conjecture", "Search for the largest d_min at a fixed |D|");
    conjecture->add_option("--n", cj_n, "Projective dimension")->capture_default_str();
    conjecture->add_option("--target", target, "Target |D| in (0, 1]")->capture_default_str();
    conjecture->add_option("--restarts", restarts, "Random restarts")->capture_default_str();
    conjecture->add_option("--budget", budget, "Objective evaluations per restart")->capture_default_str();
    conjecture->add_option("--seed", seed, "Master seed")->capture_default_str();
    conjecture->add_option("--workers", workers, "Restart threads")->capture_default_str();

    std::string config_path;
    bool renormalize = false;
    auto* distance = app.add_subcommand("distance", "Distances for vectors read from a JSON file");
    distance->add_option("config", config_path, "JSON file with mode and vectors")->required();
    distance->add_flag("--normalize", renormalize, "Rescale input vectors to unit length first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (*verify) return cmd_verify(max_n, samples, seed, std::cout, std::cerr);
    if (*example) return cmd_example(s, std::cout, std::cerr);
    if (*figure)
        return cmd_figure(fig_n, count, seed, csv_path,
                          svg_path.empty() ? std::nullopt : std::optional<std::string>(svg_path), std::cout,
                          std::cerr, workers);
    if (*conjecture) return cmd_conjecture(cj_n, target, restarts, budget, seed, std::cout, std::cerr, workers);
    if (*distance) return cmd_distance(config_path, renormalize, std::cout, std::cerr);
    return kExitUsage;
}
