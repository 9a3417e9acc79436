#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace fcoord::net {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

enum class BusKind { slack, pv, pq };

struct Bus {
    int id = 0;
    BusKind kind = BusKind::pq;
    double vm = 1.0;      // voltage magnitude setpoint (slack/pv) or initial guess, pu
    double va = 0.0;      // voltage angle, rad (slack only)
    double p_load = 0.0;  // pu on system base
    double q_load = 0.0;
    double p_gen = 0.0;   // scheduled generation, pu
    double q_gen = 0.0;
};

struct Branch {
    int from = 0;
    int to = 0;
    Complex z{0.0, 0.0};     // series impedance, pu
    double b_shunt = 0.0;    // total line charging susceptance, pu
    double tap = 1.0;        // off-nominal tap on the from side
};

struct Network {
    double mva_base = 100.0;
    double f_nominal = 60.0;
    std::vector<Bus> buses;
    std::vector<Branch> branches;

    // Index into buses for a bus id; throws ConfigError when absent.
    int index_of(int bus_id) const;
    int slack_index() const;
    void validate() const;
};

struct PowerFlowSolution {
    CVec v;             // complex bus voltage
    CVec injection;     // net complex power injection S = V (YV)*
    int iterations = 0;
    double max_mismatch = 0.0;
};

// Nodal admittance assembly. Loads are not included; they are converted to
// constant admittance separately at simulation start.
CMat build_ybus(const std::vector<Bus>& buses, const std::vector<Branch>& branches);

// Newton-Raphson on polar mismatch equations; flat start. Throws
// NumericalError on non-convergence or a singular Jacobian.
PowerFlowSolution solve_power_flow(const Network& network, double tolerance = 1e-10,
                                   int max_iter = 20);

// Constant-impedance conversion: y = (p - jq) / |v|^2.
Complex load_to_admittance(double p_load, double q_load, double v_mag);

// Disturbance events.
struct LoadStep {
    int bus = 0;
    double fraction = 0.0;  // load scaled by (1 + fraction)
    double time = 0.0;
};
struct GeneratorTrip {
    std::string unit;
    double time = 0.0;
};
using Event = std::variant<LoadStep, GeneratorTrip>;

double event_time(const Event& e);

// Mutable per-simulation network state: the constant-admittance loads.
struct NetworkState {
    CVec load_admittance;  // one entry per bus
};

// Applies a load_step to the admittance vector. Generator trips are handled
// by the simulator (they remove a device, not a load).
void apply_event(NetworkState& state, const Event& event, const Network& network);

// Line-oriented network file with [system], [bus], [branch] sections.
Network load_network_file(const std::string& path);

} // namespace fcoord::net
