#pragma once

#include <complex>
#include <string>

namespace fcoord::windfarm {

using Complex = std::complex<double>;

struct DfigParams {
    double H_D = 1.23;   // turbine-generator inertia, s
    double Xm = 1.0;     // magnetizing reactance, pu
    double Xs = 3.37;    // stator reactance, pu
    double Xr = 3.47;    // rotor reactance, pu
    double Rs = 0.005;   // stator resistance, pu
    double Rr = 0.0055;  // rotor resistance, pu
    double K_P = 0.398;  // speed/power-loop gains (reserved for the full model)
    double K_I = 0.066;
    double K_P1 = 1.0, K_P2 = 1.0, K_P3 = 1.0, K_P4 = 1.0;
    double K_I1 = 5.0, K_I2 = 5.0, K_I3 = 5.0, K_I4 = 5.0;
    int n_turbines = 5;
    double mva_base = 3.6;  // per turbine, MVA
    double k_opt = 0.6727;  // MPPT cubic coefficient
    double Qref = 0.0;      // pu on turbine base
    double v_rated = 11.0;  // m/s
    double c_cal = 0.778;   // aero calibration, pu at rated wind
    double cp_sigma = 0.30; // width of the normalized power-coefficient curve
    double omega_s = 2.0 * M_PI * 60.0;
    double vr_ceiling = 1e3;    // rotor voltage command limit, pu
    double p_cmd_max = 1.2;     // electrical power command limit, pu

    double x_transient() const { return Xs - Xm * Xm / Xr; }
    double t_open() const { return Xr / (omega_s * Rr); }
};

struct WashoutParams {
    double K_w = 10.0;     // pu power per pu frequency deviation
    double T_w = 5.0;      // s
    double deadband = 0.0; // Hz
    double f_nominal = 60.0;
};

struct DfigState {
    double omega_r = 1.0;  // rotor speed, pu
    double ed_t = 0.0;     // two-axis internal voltages, network frame
    double eq_t = 0.0;
    double x_p = 0.0;      // outer active-power PI integrator
    double x_q = 0.0;      // outer reactive-power PI integrator
    double x_iq = 0.0;     // inner q-current PI integrator
    double x_id = 0.0;     // inner d-current PI integrator
    double washout_state = 0.0;  // low-pass internal state, pu frequency
};

struct DfigDerivs {
    double d_omega_r = 0.0;
    double d_ed_t = 0.0;
    double d_eq_t = 0.0;
    double d_x_p = 0.0;
    double d_x_q = 0.0;
    double d_x_iq = 0.0;
    double d_x_id = 0.0;
    bool rotor_voltage_saturated = false;
    Complex stator_current{0.0, 0.0};  // pu on turbine base, generator convention
    double p_out = 0.0;                // electrical output, pu on turbine base
    double q_out = 0.0;
};

// P_ref = k_opt * omega_r^3, clipped to [0, 1].
double mppt_reference(double omega_r, double k_opt);

// Washout -K_w * T_w s / (1 + T_w s) on the per-unit frequency deviation
// (f - f_nom)/f_nom. Under-frequency gives dP > 0. Discrete trapezoidal update.
struct WashoutStep {
    double delta_p = 0.0;
    double state = 0.0;
};
WashoutStep washout_delta_p(double f_input_hz, double washout_state, const WashoutParams& p,
                            double dt);

// Continuous form used inside the coupled integrator.
double washout_input(double f_input_hz, const WashoutParams& p);       // deadbanded pu deviation
double washout_output(double input_pu, double state, double k_w);      // dP = -K_w (u - w)
double washout_state_deriv(double input_pu, double state, double t_w); // dw/dt

// Normalized aerodynamic power: c_cal * (v/v_rated)^3 * Cp_norm(omega_r / omega_opt(v)).
double aero_power(double v_wind, double omega_r, const DfigParams& p);

DfigDerivs dfig_derivatives(const DfigState& s, Complex bus_voltage, double p_cmd, double q_cmd,
                            double v_wind, const DfigParams& p);

// Stator current for a given state and bus voltage: I = (E' - V) / (Rs + jX').
Complex dfig_stator_current(const DfigState& s, Complex bus_voltage, const DfigParams& p);

// Back-solves the equilibrium so dfig_derivatives vanishes at the scheduled
// injection (per-turbine pu on turbine base). Calibrates c_cal in `p`.
DfigState dfig_init(Complex s_injection, Complex v_bus, double v_wind, DfigParams& p);

struct DfigUnit {
    std::string name = "WF";
    int bus = 0;
    DfigParams params;
    WashoutParams washout;
    bool online = true;
};

} // namespace fcoord::windfarm
