// Experiment runner CLI. Examples:
//   staghunt --experiment monotonicity-beta-k --n 14 --theta 0.3
//   staghunt --experiment beta-min --n 14 --theta 0.3 --delta 0.1
//   staghunt --experiment verify-suite
// Writes a CSV plus a JSON sidecar with the resolved config and seeds.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "staghunt/experiments.hpp"

int main(int argc, char** argv) {
    using namespace staghunt;
    try {
        const std::vector<std::string> args(argv + 1, argv + argc);
        const ExperimentConfig config = parse_config(args);
        const SeriesOutput out = run_experiment(config);
        const std::string path =
            config.output.empty() ? default_output_path(config) : config.output;
        write_series(out, path);
        std::cout << "wrote " << out.rows.size() << " rows to " << path << std::endl;
        return 0;
    } catch (const HelpRequested& help) {
        std::cout << help.text;
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
