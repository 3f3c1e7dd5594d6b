#include "subrad/couplings.hpp"

#include <cmath>
#include <stdexcept>

namespace subrad {

KernelValues kernels_direct(double xi) {
    // long double keeps the absolute error of the 1/xi^3-sized terms well
    // below the 1e-10 continuity budget at the series switch-over.
    const long double x = xi;
    const long double s = sinl(x);
    const long double c = cosl(x);
    const long double x2 = x * x;
    const long double x3 = x2 * x;
    KernelValues k;
    k.p_r = static_cast<double>(c / x - s / x2 - c / x3);
    k.p_i = static_cast<double>(s / x + c / x2 - s / x3);
    k.q_r = static_cast<double>(c / x - 3.0L * s / x2 - 3.0L * c / x3);
    k.q_i = static_cast<double>(s / x + 3.0L * c / x2 - 3.0L * s / x3);
    return k;
}

KernelValues kernels_series(double xi) {
    const double x = xi;
    const double x2 = x * x;
    const double x3 = x2 * x;
    const double x4 = x2 * x2;
    const double x5 = x4 * x;
    const double x6 = x4 * x2;
    KernelValues k;
    k.p_r = -1.0 / x3 + 0.5 / x - (3.0 / 8.0) * x + (5.0 / 144.0) * x3 - (7.0 / 5760.0) * x5;
    k.p_i = 2.0 / 3.0 - (2.0 / 15.0) * x2 + (1.0 / 140.0) * x4 - (1.0 / 5670.0) * x6;
    k.q_r = -3.0 / x3 - 0.5 / x - (1.0 / 8.0) * x + (1.0 / 48.0) * x3 - (1.0 / 1152.0) * x5;
    k.q_i = -(1.0 / 15.0) * x2 + (1.0 / 210.0) * x4 - (1.0 / 7560.0) * x6;
    return k;
}

KernelValues kernels(double xi) {
    if (!(xi > 0.0)) throw std::invalid_argument("kernel argument must be > 0");
    return xi < kKernelSeriesSwitch ? kernels_series(xi) : kernels_direct(xi);
}

namespace {

struct PairGeometry {
    double xi;
    double mu_dot;
    double proj_product;
    double rate_factor;
};

PairGeometry pair_geometry(const Ensemble& ens, int i, int j, int k, int jp) {
    const Transition& ti = ens.atom(i).transitions.at(static_cast<std::size_t>(j));
    const Transition& tk = ens.atom(k).transitions.at(static_cast<std::size_t>(jp));
    const double r = ens.distance(i, k);
    if (r <= 0.0) throw std::invalid_argument("coincident atoms");
    const Eigen::Vector3d rhat = ens.separation_unit(i, k);
    // The wavenumber of a cross pair is evaluated at the mean transition
    // frequency; with the degenerate default this is just k0.
    const double kbar = ens.k0() * 0.5 * (ti.frequency + tk.frequency);
    return {kbar * r, ti.dipole.dot(tk.dipole), ti.dipole.dot(rhat) * tk.dipole.dot(rhat),
            1.5 * std::sqrt(ti.rate * tk.rate)};
}

}  // namespace

double gamma_coupling(const Ensemble& ens, int i, int j, int k, int jp) {
    if (i == k) {
        return (j == jp) ? ens.atom(i).transitions.at(static_cast<std::size_t>(j)).rate : 0.0;
    }
    const PairGeometry g = pair_geometry(ens, i, j, k, jp);
    const KernelValues kv = kernels(g.xi);
    return g.rate_factor * (g.mu_dot * kv.p_i - g.proj_product * kv.q_i);
}

double omega_coupling(const Ensemble& ens, int i, int j, int k, int jp) {
    if (i == k) throw std::invalid_argument("no coherent self-coupling: atom indices must differ");
    const PairGeometry g = pair_geometry(ens, i, j, k, jp);
    const KernelValues kv = kernels(g.xi);
    return g.rate_factor * (g.mu_dot * kv.p_r - g.proj_product * kv.q_r);
}

CouplingTensors coupling_tensors(const Ensemble& ens) {
    CouplingTensors t;
    t.n_atoms = ens.n_atoms();
    t.n_transitions = ens.n_transitions();
    const int n = t.size();
    t.omega = Eigen::MatrixXd::Zero(n, n);
    t.gamma = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < t.n_atoms; ++i)
        for (int j = 0; j < t.n_transitions; ++j)
            for (int k = 0; k < t.n_atoms; ++k)
                for (int jp = 0; jp < t.n_transitions; ++jp) {
                    const int a = t.index(i, j);
                    const int b = t.index(k, jp);
                    t.gamma(a, b) = gamma_coupling(ens, i, j, k, jp);
                    if (i != k) t.omega(a, b) = omega_coupling(ens, i, j, k, jp);
                }
    return t;
}

}  // namespace subrad
