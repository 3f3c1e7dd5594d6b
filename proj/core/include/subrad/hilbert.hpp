#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "subrad/couplings.hpp"
#include "subrad/geometry.hpp"

namespace subrad {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Product basis of N atoms with M levels each (level 0 = ground), grouped
/// into excitation-number blocks. States are enumerated with atom 0 as the
/// most significant base-M digit, so |e1 e2 g> for (N,M)=(3,3) has index
/// 1*9 + 2*3 + 0.
class ManifoldBasis {
public:
    /// Throws CapacityError when M^N exceeds `dimension_cap`.
    ManifoldBasis(int n_atoms, int n_levels, int dimension_cap = kDefaultDimensionCap);

    static constexpr int kDefaultDimensionCap = 4096;

    int n_atoms() const { return n_atoms_; }
    int n_levels() const { return n_levels_; }
    int dim() const { return dim_; }
    /// Highest excitation number (= N for V-type atoms).
    int max_excitation() const { return n_atoms_; }

    /// Level of `atom` in product state `state` (0 = ground).
    int level_of(int state, int atom) const { return levels_[state * n_atoms_ + atom]; }
    /// Number of excited atoms in `state`.
    int excitation_of(int state) const { return excitation_[state]; }
    /// State index from per-atom levels.
    int index_of(const std::vector<int>& levels) const;

    /// Ordered state indices of the n-excitation block.
    const std::vector<int>& block(int n_exc) const { return blocks_[n_exc]; }
    int block_size(int n_exc) const { return static_cast<int>(blocks_[n_exc].size()); }

private:
    int n_atoms_;
    int n_levels_;
    int dim_;
    std::vector<int> levels_;
    std::vector<int> excitation_;
    std::vector<std::vector<int>> blocks_;
};

/// Lowering operator of transition j (0-based) in atom i:
/// |e_{j+1}>_i -> |g>_i, zero on every other level of atom i.
Matrix sigma_minus(const ManifoldBasis& basis, int atom, int transition);

/// sigma_j^{i+} sigma_{j'}^{k-} as a dense matrix.
Matrix raise_lower(const ManifoldBasis& basis, int atom_i, int trans_j, int atom_k, int trans_jp);

/// Total excitation number operator.
Matrix excitation_number(const ManifoldBasis& basis);

/// Effective atomic Hamiltonian in the frame rotating at the reference
/// frequency: diagonal omega_ref * f_j per excitation (zero for the
/// degenerate default with omega_ref = 0) plus the dipole-dipole exchange
/// term. The exchange enters as -Omega^{ik}_{jj'} sigma^+ sigma^-: with the
/// tensor convention used here that places symmetric superpositions of
/// parallel transverse dipoles above the antisymmetric ones in the near
/// field, and the totally antisymmetric state at the bottom of its
/// excitation block.
Matrix hamiltonian(const ManifoldBasis& basis, const Ensemble& ens, const CouplingTensors& tensors,
                   double omega_ref = 0.0);

/// Per-atom, per-transition complex drive amplitudes (units of the
/// reference rate) for a resonant pump.
struct PumpConfig {
    Eigen::MatrixXcd eta;  // n_atoms x n_transitions
    double detuning = 0.0;
};

/// H_pump = sum_{ij} (eta_ij sigma^+ + conj(eta_ij) sigma^-) + detuning * N.
Matrix pump_hamiltonian(const ManifoldBasis& basis, const PumpConfig& pump);

/// Dissipator normalization. PopulationRate makes an isolated excited
/// transition decay as exp(-gamma_j t); PaperLiteral keeps the bare
/// prefactor, which doubles every rate.
enum class LindbladConvention { PopulationRate, PaperLiteral };

/// Lindblad dissipator in diagonal (collective jump operator) form.
/// Built once per (basis, tensors, convention); apply() evaluates
///   L[rho] = sum_m r_m (c_m rho c_m^+ - 1/2 {c_m^+ c_m, rho}).
class Dissipator {
public:
    Dissipator(const ManifoldBasis& basis, const CouplingTensors& tensors,
               LindbladConvention convention = LindbladConvention::PopulationRate);

    Matrix apply(const Matrix& rho) const;

    const std::vector<Matrix>& jump_operators() const { return jumps_; }
    const std::vector<double>& jump_rates() const { return rates_; }
    /// sum_m r_m c_m^+ c_m (the anticommutator half, and the operator whose
    /// expectation value is a state's total decay rate).
    const Matrix& loss_operator() const { return loss_; }
    LindbladConvention convention() const { return convention_; }
    int dim() const { return loss_.rows() > 0 ? static_cast<int>(loss_.rows()) : 0; }

private:
    std::vector<Matrix> jumps_;
    std::vector<double> rates_;
    Matrix loss_;
    LindbladConvention convention_;
};

/// One-shot dissipator application (builds the jump decomposition internally).
Matrix dissipator(const ManifoldBasis& basis, const CouplingTensors& tensors, const Matrix& rho,
                  LindbladConvention convention = LindbladConvention::PopulationRate);

/// Density-matrix diagnostics.
struct DensityDiagnostics {
    double trace_error = 0.0;      // |tr rho - 1|
    double hermiticity = 0.0;      // max |rho - rho^+|
    double min_eigenvalue = 0.0;   // smallest eigenvalue of (rho + rho^+)/2
};

DensityDiagnostics density_diagnostics(const Matrix& rho);

}  // namespace subrad
