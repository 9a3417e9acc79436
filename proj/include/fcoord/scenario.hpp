#pragma once

#include <string>
#include <vector>

#include "fcoord/coordnet.hpp"
#include "fcoord/sim.hpp"

namespace fcoord::scenario {

// A fully described study: network, device parameters, disturbance, and the
// knobs for dataset generation / training / coordination. Loaded from layered
// JSON files (a "base" key pulls in another scenario, override keys win).
struct Scenario {
    std::string name = "scenario";
    std::string network_file;
    std::string preset = "standard-wscc";
    sim::System system;            // assembled but not initialized
    sim::SimConfig sim_config;
    std::string weights_file;      // required for coordinated runs
    double alpha = -1.0;           // training-target gain, u_c = alpha * deltaP
    std::vector<double> sweep_fractions{0.05, 0.10, 0.15};
    long n_samples = 50000;
    int n_hidden = 10;
    coordnet::TrainConfig train_config;
};

// Named machine-constant profiles for the three-generator test system.
// `position` is the generator's index in declaration order.
void apply_generator_preset(machines::SgUnit& unit, const std::string& preset, int position);

// Parses the scenario file, resolving relative paths against its directory.
// An empty preset_override keeps the file's own preset.
Scenario load_scenario(const std::string& path, const std::string& preset_override = {});

struct ComparisonReport {
    sim::Metrics none;
    sim::Metrics inertial;
    sim::Metrics coordinated;
    double f_nominal = 60.0;
    // Coordinated vs inertial, positive = better.
    double nadir_improvement = 0.0;  // (dev_in - dev_co) / |dev_in|
    double rocof_improvement = 0.0;  // (|r_in| - |r_co|) / |r_in|
    double area_improvement = 0.0;
    double uc_final = 0.0;           // |u_c| at t_end
};

struct CompareRuns {
    sim::SimResult none;
    sim::SimResult inertial;
    sim::SimResult coordinated;
    ComparisonReport report;
};

// Runs the scenario in all three controller modes (in parallel) and scores
// the coordinated run against the inertial baseline.
CompareRuns compare_modes(const Scenario& sc, const coordnet::Mlp& mlp);

std::string format_report(const ComparisonReport& report);

// Runs the sweep of load-step magnitudes in inertial mode and assembles the
// training set. Sweep members replace the scenario's own load-step fraction.
coordnet::Dataset build_training_set(const Scenario& sc);

// Atomic text write (temp + rename).
void write_text_file(const std::string& path, const std::string& content);

} // namespace fcoord::scenario
