#pragma once

#include <Eigen/Dense>

#include "subrad/geometry.hpp"

namespace subrad {

/// The four scalar Green-function kernels at argument xi = k0 * r.
struct KernelValues {
    double p_r = 0.0;
    double p_i = 0.0;
    double q_r = 0.0;
    double q_i = 0.0;
};

/// Threshold below which kernels() switches from the trigonometric form to
/// the small-argument series.
inline constexpr double kKernelSeriesSwitch = 1e-2;

/// Trigonometric evaluation (internally in extended precision to keep the
/// absolute error of the strongly cancelling terms near 1e-14):
///   P_R = cos x/x - sin x/x^2 - cos x/x^3
///   P_I = sin x/x + cos x/x^2 - sin x/x^3
///   Q_R = cos x/x - 3 sin x/x^2 - 3 cos x/x^3
///   Q_I = sin x/x + 3 cos x/x^2 - 3 sin x/x^3
KernelValues kernels_direct(double xi);

/// Small-argument expansion, accurate to O(xi^7) past the listed terms:
///   P_R = -1/x^3 + 1/(2x) - (3/8)x  + (5/144)x^3 - (7/5760)x^5
///   P_I = 2/3 - (2/15)x^2 + (1/140)x^4 - (1/5670)x^6
///   Q_R = -3/x^3 - 1/(2x) - (1/8)x  + (1/48)x^3  - (1/1152)x^5
///   Q_I = -(1/15)x^2 + (1/210)x^4 - (1/7560)x^6
KernelValues kernels_series(double xi);

/// Kernel values at xi > 0; uses the series branch for xi < 1e-2 to avoid
/// catastrophic cancellation in the imaginary kernels. Throws on xi <= 0.
KernelValues kernels(double xi);

/// Coherent and dissipative coupling tensors of an ensemble, stored as
/// real symmetric matrices over the flattened index a = i * T + j
/// (atom i, transition j, T transitions per atom).
///
/// gamma carries the single-atom rates on the atom-diagonal
/// (gamma[(i,j),(i,j)] = gamma_j, zero for j != j') and the collective
/// values off the atom diagonal. omega is zero on the atom diagonal: the
/// model has no coherent self-shift.
struct CouplingTensors {
    Eigen::MatrixXd omega;
    Eigen::MatrixXd gamma;
    int n_atoms = 0;
    int n_transitions = 0;

    int index(int atom, int transition) const { return atom * n_transitions + transition; }
    int size() const { return n_atoms * n_transitions; }
};

/// Dissipative coupling Gamma^{ik}_{jj'}; for i == k this is gamma_j delta_{jj'}.
double gamma_coupling(const Ensemble& ens, int i, int j, int k, int jp);

/// Coherent coupling Omega^{ik}_{jj'}; throws for i == k.
double omega_coupling(const Ensemble& ens, int i, int j, int k, int jp);

/// Assemble all pairwise couplings. The result satisfies
/// omega = omega^T, gamma = gamma^T, and gamma is positive semidefinite
/// up to eigenvalue round-off.
CouplingTensors coupling_tensors(const Ensemble& ens);

}  // namespace subrad
