#include "subrad/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "subrad/errors.hpp"

namespace subrad {

ManifoldBasis::ManifoldBasis(int n_atoms, int n_levels, int dimension_cap)
    : n_atoms_(n_atoms), n_levels_(n_levels) {
    if (n_atoms < 1 || n_levels < 2)
        throw std::invalid_argument("basis needs n_atoms >= 1 and n_levels >= 2");
    double d = 1.0;
    for (int i = 0; i < n_atoms; ++i) d *= n_levels;
    if (d > static_cast<double>(dimension_cap))
        throw CapacityError("Hilbert dimension " + std::to_string(static_cast<long long>(d)) +
                            " exceeds cap " + std::to_string(dimension_cap));
    dim_ = static_cast<int>(d);
    levels_.resize(static_cast<std::size_t>(dim_) * n_atoms_);
    excitation_.resize(dim_);
    blocks_.assign(n_atoms_ + 1, {});
    for (int s = 0; s < dim_; ++s) {
        int x = s;
        int exc = 0;
        for (int i = n_atoms_ - 1; i >= 0; --i) {
            const int lv = x % n_levels_;
            levels_[s * n_atoms_ + i] = lv;
            if (lv > 0) ++exc;
            x /= n_levels_;
        }
        excitation_[s] = exc;
        blocks_[exc].push_back(s);
    }
}

int ManifoldBasis::index_of(const std::vector<int>& levels) const {
    if (static_cast<int>(levels.size()) != n_atoms_)
        throw std::invalid_argument("level list length must equal the atom count");
    int s = 0;
    for (int lv : levels) {
        if (lv < 0 || lv >= n_levels_) throw std::invalid_argument("level out of range");
        s = s * n_levels_ + lv;
    }
    return s;
}

Matrix sigma_minus(const ManifoldBasis& basis, int atom, int transition) {
    if (atom < 0 || atom >= basis.n_atoms() || transition < 0 ||
        transition >= basis.n_levels() - 1)
        throw std::out_of_range("sigma_minus index out of range");
    Matrix m = Matrix::Zero(basis.dim(), basis.dim());
    const int stride = [&] {
        int s = 1;
        for (int i = atom + 1; i < basis.n_atoms(); ++i) s *= basis.n_levels();
        return s;
    }();
    for (int s = 0; s < basis.dim(); ++s)
        if (basis.level_of(s, atom) == transition + 1) m(s - (transition + 1) * stride, s) = 1.0;
    return m;
}

Matrix raise_lower(const ManifoldBasis& basis, int atom_i, int trans_j, int atom_k, int trans_jp) {
    const Matrix si = sigma_minus(basis, atom_i, trans_j);
    const Matrix sk = sigma_minus(basis, atom_k, trans_jp);
    return si.adjoint() * sk;
}

Matrix excitation_number(const ManifoldBasis& basis) {
    Matrix n = Matrix::Zero(basis.dim(), basis.dim());
    for (int s = 0; s < basis.dim(); ++s) n(s, s) = basis.excitation_of(s);
    return n;
}

Matrix hamiltonian(const ManifoldBasis& basis, const Ensemble& ens, const CouplingTensors& tensors,
                   double omega_ref) {
    if (basis.n_atoms() != ens.n_atoms() || basis.n_levels() != ens.n_levels() ||
        tensors.n_atoms != ens.n_atoms() || tensors.n_transitions != ens.n_transitions())
        throw std::invalid_argument("hamiltonian: basis/ensemble/tensor dimensions disagree");
    const int dim = basis.dim();
    Matrix h = Matrix::Zero(dim, dim);
    for (int s = 0; s < dim; ++s) {
        double e = 0.0;
        for (int i = 0; i < basis.n_atoms(); ++i) {
            const int lv = basis.level_of(s, i);
            if (lv > 0)
                e += omega_ref * ens.atom(i).transitions[static_cast<std::size_t>(lv - 1)].frequency;
        }
        h(s, s) = e;
    }
    const int T = tensors.n_transitions;
    for (int i = 0; i < tensors.n_atoms; ++i)
        for (int k = 0; k < tensors.n_atoms; ++k) {
            if (i == k) continue;
            for (int j = 0; j < T; ++j)
                for (int jp = 0; jp < T; ++jp) {
                    const double w = tensors.omega(tensors.index(i, j), tensors.index(k, jp));
                    if (w == 0.0) continue;
                    h.noalias() -= w * raise_lower(basis, i, j, k, jp);
                }
        }
    return h;
}

Matrix pump_hamiltonian(const ManifoldBasis& basis, const PumpConfig& pump) {
    if (pump.eta.rows() != basis.n_atoms() || pump.eta.cols() != basis.n_levels() - 1)
        throw std::invalid_argument("pump amplitudes must be n_atoms x n_transitions");
    if (!pump.eta.allFinite()) throw std::invalid_argument("pump amplitudes must be finite");
    Matrix h = Matrix::Zero(basis.dim(), basis.dim());
    for (int i = 0; i < basis.n_atoms(); ++i)
        for (int j = 0; j < basis.n_levels() - 1; ++j) {
            const Complex eta = pump.eta(i, j);
            if (eta == Complex{0.0, 0.0}) continue;
            const Matrix sm = sigma_minus(basis, i, j);
            h.noalias() += eta * sm.adjoint();
            h.noalias() += std::conj(eta) * sm;
        }
    if (pump.detuning != 0.0) h += pump.detuning * excitation_number(basis);
    return h;
}

Dissipator::Dissipator(const ManifoldBasis& basis, const CouplingTensors& tensors,
                       LindbladConvention convention)
    : convention_(convention) {
    if (basis.n_atoms() != tensors.n_atoms || basis.n_levels() - 1 != tensors.n_transitions)
        throw std::invalid_argument("dissipator: basis/tensor dimensions disagree");
    const double scale = (convention == LindbladConvention::PaperLiteral) ? 2.0 : 1.0;
    const Eigen::MatrixXd sym = 0.5 * (tensors.gamma + tensors.gamma.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    const double cutoff = 1e-12 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    std::vector<Matrix> lowering;
    lowering.reserve(static_cast<std::size_t>(tensors.size()));
    for (int i = 0; i < tensors.n_atoms; ++i)
        for (int j = 0; j < tensors.n_transitions; ++j)
            lowering.push_back(sigma_minus(basis, i, j));
    loss_ = Matrix::Zero(basis.dim(), basis.dim());
    for (int m = 0; m < es.eigenvalues().size(); ++m) {
        const double g = es.eigenvalues()(m);
        if (g <= cutoff) continue;
        Matrix c = Matrix::Zero(basis.dim(), basis.dim());
        for (int a = 0; a < tensors.size(); ++a) c.noalias() += es.eigenvectors()(a, m) * lowering[a];
        const double rate = scale * g;
        loss_.noalias() += rate * (c.adjoint() * c);
        jumps_.push_back(std::move(c));
        rates_.push_back(rate);
    }
}

Matrix Dissipator::apply(const Matrix& rho) const {
    if (rho.rows() != loss_.rows() || rho.cols() != loss_.cols())
        throw std::invalid_argument("dissipator: density matrix dimension mismatch");
    Matrix out = -0.5 * (loss_ * rho + rho * loss_);
    for (std::size_t m = 0; m < jumps_.size(); ++m)
        out.noalias() += rates_[m] * (jumps_[m] * rho * jumps_[m].adjoint());
    return out;
}

Matrix dissipator(const ManifoldBasis& basis, const CouplingTensors& tensors, const Matrix& rho,
                  LindbladConvention convention) {
    return Dissipator(basis, tensors, convention).apply(rho);
}

DensityDiagnostics density_diagnostics(const Matrix& rho) {
    DensityDiagnostics d;
    d.trace_error = std::abs(rho.trace() - Complex{1.0, 0.0});
    d.hermiticity = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()),
                                             Eigen::EigenvaluesOnly);
    d.min_eigenvalue = es.eigenvalues().minCoeff();
    return d;
}

}  // namespace subrad
