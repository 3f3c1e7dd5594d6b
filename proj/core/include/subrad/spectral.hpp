#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subrad/hilbert.hpp"

namespace subrad {

/// Eigendecomposition of one excitation block: energies ascending, states as
/// orthonormal full-space column vectors.
struct EigenManifold {
    int n_exc = 0;
    Eigen::VectorXd energies;
    Matrix states;  // dim x block_size
};

/// Full Hermitian eigendecomposition of the n_exc block of H.
EigenManifold diagonalize(const ManifoldBasis& basis, const Matrix& h, int n_exc);

/// Totally antisymmetric state over the level labels {g, e_1, .., e_{N-1}}:
/// (1/sqrt(N!)) sum_pi sgn(pi) |s_pi(1) .. s_pi(N)>. Requires M == N.
Vector dark_state(const ManifoldBasis& basis);

/// Same bare states with all signs positive.
Vector superradiant_state(const ManifoldBasis& basis);

/// Total decay rate of a normalized pure state: -<psi| L[|psi><psi|] |psi>.
double decay_rate(const Vector& psi, const Dissipator& diss);

/// Feeding rate <lower| L[|upper><upper|] |lower>. If the two states do not
/// sit in adjacent excitation manifolds the rate is structurally zero; the
/// optional warning sink receives a note in that case.
double feeding_rate(const Vector& upper, const Vector& lower, const Dissipator& diss,
                    const ManifoldBasis& basis, std::string* warning = nullptr);

/// Hermitian positive-semidefinite dissipation matrix
/// D_ab = sum_m r_m <psi_a| c_m^+ c_m |psi_b> over the given column states.
/// Its diagonal reproduces decay_rate; diagonalizing it inside a degenerate
/// energy subspace yields basis-independent rates.
Matrix dissipation_matrix(const Matrix& states, const Dissipator& diss);

struct CascadeNode {
    std::string id;
    int manifold = 0;
    double energy = 0.0;
    double total_rate = 0.0;
};

struct CascadeEdge {
    std::string from;
    std::string to;
    double rate = 0.0;
};

/// Eigenstates of every excitation manifold with directed feeding rates
/// between adjacent manifolds. Rate balance holds node by node: the total
/// decay rate equals the sum of outgoing edge rates.
struct CascadeGraph {
    std::vector<CascadeNode> nodes;
    std::vector<CascadeEdge> edges;
    std::vector<EigenManifold> manifolds;

    std::string to_json() const;
    std::string to_dot(double min_rate = 0.0) const;
};

CascadeGraph cascade_graph(const ManifoldBasis& basis, const Ensemble& ens,
                           const CouplingTensors& tensors,
                           LindbladConvention convention = LindbladConvention::PopulationRate);

/// How the minimum over an excitation block is taken.
///  Eigenstates: decay rates of Hamiltonian eigenstates, minimized inside
///               degenerate energy subspaces via the dissipation matrix.
///  Manifold:    smallest eigenvalue of the dissipation matrix over the
///               whole block (the most subradiant state available in the
///               manifold, stationary or not).
enum class RateScope { Eigenstates, Manifold };

double lowest_decay_rate(const Ensemble& ens, int n_exc,
                         LindbladConvention convention = LindbladConvention::PopulationRate,
                         RateScope scope = RateScope::Eigenstates,
                         int dimension_cap = ManifoldBasis::kDefaultDimensionCap);

/// Relative tolerance used to group adjacent eigenvalues into degenerate
/// subspaces: |Ea - Eb| <= tol * max(1, |Ea|, |Eb|).
inline constexpr double kDegeneracyTol = 1e-8;

/// Indices [begin, end) of degenerate groups in an ascending energy list.
std::vector<std::pair<int, int>> degenerate_groups(const Eigen::VectorXd& energies,
                                                   double tol = kDegeneracyTol);

}  // namespace subrad
