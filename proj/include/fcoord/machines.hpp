#pragma once

#include <complex>
#include <string>

namespace fcoord::machines {

using Complex = std::complex<double>;

struct SgParams {
    double H = 5.0;        // inertia constant, s
    double Xd = 1.0;       // d-axis synchronous reactance, pu
    double Xq = 0.8;       // q-axis synchronous reactance, pu
    double Xd_t = 0.2;     // d-axis transient reactance, pu
    double Xq_t = 0.3;     // q-axis transient reactance, pu (unused by one-axis model)
    double Tdo_t = 6.0;    // d-axis transient open-circuit time constant, s
    double T_fw = 0.0;     // friction-windage torque, pu
    double mva_base = 100.0;
    double omega_s = 2.0 * M_PI * 60.0;  // synchronous speed, rad/s
};

struct ExciterParams {
    double KA = 20.0;
    double TA = 0.2;
    double KE = 1.0;
    double TE = 0.314;
    double KF = 0.063;
    double TF = 0.35;
    double se_a = 0.0039;  // saturation SE = se_a * exp(se_b * |Efd|)
    double se_b = 1.555;
    double efd_ceiling = 6.0;
};

struct GovernorParams {
    double T1 = 0.1;
    double T2 = 1.2;
    double T3 = 5.0;
    double T4 = 0.5;
    double K1 = 30.0;
    double Pmin = 0.0;
    double Pmax = 2.5;
};

struct SgState {
    double delta = 0.0;  // rotor angle, rad
    double omega = 0.0;  // electrical angular speed, rad/s
    double eq_t = 0.0;   // q-axis transient internal voltage, pu
};

struct ExciterState {
    double efd = 0.0;  // field voltage
    double vr = 0.0;   // regulator output
    double rf = 0.0;   // rate feedback
};

struct GovernorState {
    double y1 = 0.0;
    double y3 = 0.0;
    double tm = 0.0;  // mechanical torque
};

struct SgDerivs {
    double d_delta = 0.0;
    double d_omega = 0.0;
    double d_eq_t = 0.0;
    double d_efd = 0.0;
    double d_vr = 0.0;
    double d_rf = 0.0;
    double d_y1 = 0.0;
    double d_y3 = 0.0;
    double d_tm = 0.0;
};

struct SgInputs {
    double id = 0.0;   // d-axis stator current, pu
    double iq = 0.0;   // q-axis stator current, pu
    double vt = 0.0;   // terminal voltage magnitude, pu
    double u_c = 0.0;  // coordination offset, pu of synchronous speed
    double vref = 0.0;
    double pc = 0.0;   // governor power setpoint
};

struct StatorCurrents {
    double id = 0.0;
    double iq = 0.0;
    double vd = 0.0;
    double vq = 0.0;
};

// Resistance-free one-axis stator algebraics: Vd = Xq Iq, Vq = E'q - Xd' Id.
StatorCurrents stator_currents(const SgState& s, Complex bus_voltage, const SgParams& p);

// SE(Efd) = se_a * exp(se_b * |Efd|).
double exciter_saturation(double efd, double se_a, double se_b);

// Torque-demand clamp: PC - y2 restricted to [Pmin, Pmax].
double governor_limiter(double y2i, double pc, double pmin, double pmax);

SgDerivs sg_derivatives(const SgState& s, const ExciterState& e, const GovernorState& g,
                        const SgInputs& in, const SgParams& p, const ExciterParams& ep,
                        const GovernorParams& gp);

struct SgInit {
    SgState sg;
    ExciterState exciter;
    GovernorState governor;
    double vref = 0.0;
    double pc = 0.0;
};

// Back-solves the equilibrium for terminal conditions (V phasor, P, Q on the
// machine base) so that sg_derivatives vanishes. Throws ConfigError when the
// required field voltage falls outside [0, efd_ceiling].
SgInit sg_init_from_powerflow(Complex v_terminal, double p, double q, const SgParams& p_sg,
                              const ExciterParams& p_ex, const GovernorParams& p_gov);

// One dispatchable unit attached to a network bus. All per-unit quantities on
// the machine base; conversion to system base happens at the network boundary.
struct SgUnit {
    std::string name;
    int bus = 0;
    SgParams params;
    ExciterParams exciter_params;
    GovernorParams governor_params;
    double vref = 0.0;
    double pc = 0.0;
    bool online = true;
};

} // namespace fcoord::machines
