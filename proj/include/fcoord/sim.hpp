#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fcoord/coordnet.hpp"
#include "fcoord/machines.hpp"
#include "fcoord/netmodel.hpp"
#include "fcoord/windfarm.hpp"

namespace fcoord::sim {

enum class ControllerMode { none, inertial, coordinated };
enum class Integrator { trapezoidal, rk4 };
enum class FreqSource { bus, coi };

struct SimConfig {
    double dt = 1e-3;
    double t_end = 20.0;
    Integrator integrator = Integrator::trapezoidal;
    ControllerMode mode = ControllerMode::none;
    std::vector<net::Event> events;
    const coordnet::Mlp* coordinator = nullptr;  // required in coordinated mode
    double uc_clamp = 0.01;       // pu, safety envelope on the coordination signal
    double uc_rate_limit = 1.0;   // pu/s
    FreqSource washout_freq_source = FreqSource::bus;
    double freq_filter_tc = 0.02; // s, bus-frequency estimator
    double rocof_window = 0.5;    // s
    double load_freq_sensitivity = 0.0;  // D_f, off by default
};

struct SimTrace {
    double dt = 0.0;
    double event_time = 0.0;
    double f_nominal = 60.0;
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols;

    int col(const std::string& name) const;  // throws ConfigError when absent
    size_t size() const { return cols.empty() ? 0 : cols[0].size(); }
    void write_csv(const std::string& path) const;
};

struct Metrics {
    double f_nadir = 0.0;  // Hz
    double t_nadir = 0.0;  // s
    double rocof = 0.0;    // Hz/s, most negative windowed slope
    double f_ss = 0.0;     // Hz
    double area_s = 0.0;   // Hz*s
    double rocof_window = 0.5;
};

struct SimResult {
    SimTrace trace;
    Eigen::VectorXd final_state;
    bool uc_saturated = false;
    bool rotor_voltage_saturated = false;
};

// Fully assembled study system. Call initialize() before run_scenario().
struct System {
    net::Network network;
    std::vector<machines::SgUnit> sgs;
    windfarm::DfigUnit farm;
    bool has_farm = false;
    double farm_p_mw = 14.0;  // total farm dispatch
    double v_wind = 11.0;     // m/s

    // Derived by initialize():
    net::CMat ybus;
    net::PowerFlowSolution pf;
    net::NetworkState load_state;
    std::vector<machines::SgInit> sg_init;
    windfarm::DfigState farm_init;
    bool initialized = false;
};

// Solves the power flow (farm dispatch injected at its bus) and back-solves
// every device to equilibrium.
void initialize(System& sys, double pf_tolerance = 1e-10, int pf_max_iter = 20);

SimResult run_scenario(const System& sys, const SimConfig& config);

// Inertia-weighted mean speed; weights H_i * S_i.
double coi_frequency(std::span<const double> omega, std::span<const double> h,
                     std::span<const double> mva_base);

// e(t) = integral of max(0, f_target - f_coi) dt, trapezoidal.
std::vector<double> running_area_error(std::span<const double> f_coi, double dt,
                                       double f_ss_target);

Metrics compute_metrics(const SimTrace& trace, double rocof_window);

// Assembles training samples from inertial-mode traces: one row per step,
// inputs [farm P_out, per-SG speed, e(t)], target alpha * deltaP(t). Rows are
// downsampled uniformly to n_samples when the traces hold more.
coordnet::Dataset generate_dataset(const std::vector<SimTrace>& traces, double alpha,
                                   long n_samples);

} // namespace fcoord::sim
