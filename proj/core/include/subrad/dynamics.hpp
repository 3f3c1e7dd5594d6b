#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "subrad/spectral.hpp"

namespace subrad {

/// A named scalar readout of the density matrix.
struct Observable {
    std::string name;
    std::function<double(const Matrix&)> eval;
};

struct EvolveOptions {
    double t_final = 1.0;
    double dt = 1e-3;
    /// Record observables and diagnostics every `sample_stride` steps.
    int sample_stride = 10;
    /// dt is halved and the run restarted when diagnostics fail, up to this
    /// many times; afterwards a NumericsError is thrown.
    int max_halvings = 3;
    double trace_tol = 1e-6;
    double negativity_tol = 1e-6;
    /// Pump switch-off time; < 0 keeps the pump on throughout.
    double pulse_end = -1.0;
};

/// Time series of named observables, with trace and minimum-eigenvalue
/// diagnostics recorded at every sample.
struct Trajectory {
    std::vector<double> times;
    std::vector<std::string> names;
    std::vector<std::vector<double>> series;  // one vector per name
    Matrix final_state;
    double dt_used = 0.0;

    const std::vector<double>& at(const std::string& name) const;
};

/// Fixed-step RK4 integration of
///   drho/dt = i[rho, H + H_pump(t)] + L[rho],
/// with rho re-hermitized after every step. H_pump is dropped after
/// opts.pulse_end when that is >= 0.
Trajectory evolve(const Matrix& rho0, const Matrix& h, const Matrix& h_pump,
                  const Dissipator& diss, const EvolveOptions& opts,
                  const std::vector<Observable>& observables = {});

/// Convenience overload without a pump term.
Trajectory evolve(const Matrix& rho0, const Matrix& h, const Dissipator& diss,
                  const EvolveOptions& opts, const std::vector<Observable>& observables = {});

/// <target| rho |target> for a normalized target state.
double fidelity(const Matrix& rho, const Vector& target);

/// Named initial states used by the experiments. For three-atom V systems:
///   dark, superradiant        the permutation states
///   unpolarized               (|e1 e2> + |e2 e1>)/sqrt(2) (x) |g>
///   antisym-ground            (|e1 e2> - |e2 e1>)/sqrt(2) (x) |g>
///   antisym-excited           (|e1 e2> - |e2 e1>)/sqrt(2) (x) |e1>
///   inverted                  |e1 e2 e1>
///   ground                    |g g g>
Vector named_state(const ManifoldBasis& basis, const std::string& name);

struct ExperimentOptions {
    double t_final = 5.0;
    double dt = 1e-3;
    int sample_stride = 10;
    LindbladConvention convention = LindbladConvention::PopulationRate;
    /// Include the coherent dipole-dipole term in the evolution Hamiltonian.
    bool include_dipole_shifts = true;
};

/// Free decay from a named (or custom) initial state; records fidelities with
/// the initial, dark and superradiant states plus per-manifold populations.
Trajectory decay_experiment(const Ensemble& ens, const std::string& initial,
                            const ExperimentOptions& opts);
Trajectory decay_experiment(const Ensemble& ens, const Vector& initial,
                            const ExperimentOptions& opts, const std::string& label = "custom");

/// Purely dissipative preparation: decay of the fully inverted product state
/// |e1 e2 e1>, tracking dark / superradiant / ground / initial-state
/// fractions.
Trajectory dissipative_preparation(const Ensemble& ens, const ExperimentOptions& opts);

/// Drive-phase layouts on three-atom ensembles, two free phases each:
///   PerAtom: both transitions of atom i share the phase (0, phi1, phi2).
///   PerTransition: atom 0 drives (eta, eta); atom 1
///     (eta e^{i phi1}, eta e^{2i phi2}); atom 2 (eta e^{2i phi1},
///     eta e^{2i phi2}).
enum class PumpTemplate { PerAtom, PerTransition };

PumpConfig pump_from_template(PumpTemplate tmpl, double eta, double phi1, double phi2, int n_atoms,
                              int n_transitions);

struct SweepOptions {
    PumpTemplate pump_template = PumpTemplate::PerAtom;
    double eta = 8.5;
    double t_final = 0.3;
    double dt = 1e-3;
    int grid1 = 41;
    int grid2 = 41;
    std::string target = "dark";
    LindbladConvention convention = LindbladConvention::PopulationRate;
    bool include_dipole_shifts = true;
    int threads = 0;  // 0 = hardware concurrency
};

/// Phase-map result: values(i,j) is the target fidelity after driving from
/// the ground state with phases (phi1_i, phi2_j).
struct SweepResult {
    std::vector<double> phi1;
    std::vector<double> phi2;
    Eigen::MatrixXd values;
    std::map<std::string, std::string> metadata;

    double max_value() const { return values.maxCoeff(); }
};

SweepResult pump_sweep(const Ensemble& ens, const SweepOptions& opts);

/// Target fidelity for a single phase pair (the sweep's elementary run).
double pump_run(const Ensemble& ens, const SweepOptions& opts, double phi1, double phi2,
                double pulse_end = -1.0);

/// Continuous versus pulsed drive (pump switched off at `pulse_duration`),
/// both reporting the target fidelity over time.
std::pair<Trajectory, Trajectory> pulsed_vs_continuous(const Ensemble& ens,
                                                       const SweepOptions& opts,
                                                       double phi1, double phi2,
                                                       double pulse_duration, double t_final);

struct OptimizeOptions {
    SweepOptions sweep;
    int seed_grid = 9;
    int max_evaluations = 200;
    double xtol = 1e-3;
    double ftol = 1e-5;
};

struct OptimizeResult {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double value = 0.0;
    int evaluations = 0;
    bool budget_exhausted = false;
};

/// Coarse grid seed followed by Nelder-Mead refinement of the pump phases.
/// The returned value never falls below the best grid point.
OptimizeResult optimize_phases(const Ensemble& ens, const OptimizeOptions& opts);

/// Minimize f over R^2 with a Nelder-Mead simplex; used by optimize_phases
/// and exposed for reuse.
struct SimplexResult {
    Eigen::Vector2d x;
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;
};
SimplexResult nelder_mead_2d(const std::function<double(const Eigen::Vector2d&)>& f,
                             const Eigen::Vector2d& start, double step, int max_evaluations,
                             double xtol, double ftol);

}  // namespace subrad
