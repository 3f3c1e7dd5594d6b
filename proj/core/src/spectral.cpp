#include "subrad/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace subrad {

namespace {

int manifold_of(const Vector& psi, const ManifoldBasis& basis) {
    int best = -1;
    double best_w = 0.0;
    for (int n = 0; n <= basis.max_excitation(); ++n) {
        double w = 0.0;
        for (int s : basis.block(n)) w += std::norm(psi(s));
        if (w > best_w) {
            best_w = w;
            best = n;
        }
    }
    return best;
}

void require_normalized(const Vector& psi) {
    if (std::abs(psi.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("state must be normalized");
}

double clip_roundoff(double rate) {
    return (rate < 0.0 && rate > -1e-12) ? 0.0 : rate;
}

}  // namespace

EigenManifold diagonalize(const ManifoldBasis& basis, const Matrix& h, int n_exc) {
    if (h.rows() != basis.dim() || h.cols() != basis.dim())
        throw std::invalid_argument("diagonalize: operator dimension mismatch");
    if (n_exc < 0 || n_exc > basis.max_excitation())
        throw std::invalid_argument("diagonalize: excitation number out of range");
    const std::vector<int>& ix = basis.block(n_exc);
    const int m = static_cast<int>(ix.size());
    Matrix hb(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) hb(a, b) = h(ix[a], ix[b]);
    Eigen::SelfAdjointEigenSolver<Matrix> es(hb);
    EigenManifold out;
    out.n_exc = n_exc;
    out.energies = es.eigenvalues();
    out.states = Matrix::Zero(basis.dim(), m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) out.states(ix[b], a) = es.eigenvectors()(b, a);
    return out;
}

namespace {

void permutations_with_sign(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // Iterate in lexicographic order, tracking parity by counting inversions.
    do {
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        visit(perm, (inversions % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

Vector permutation_state(const ManifoldBasis& basis, bool signed_sum) {
    if (basis.n_levels() != basis.n_atoms())
        throw std::invalid_argument(
            "permutation states need as many levels as atoms (N-1 excited levels for N atoms)");
    Vector v = Vector::Zero(basis.dim());
    permutations_with_sign(basis.n_atoms(), [&](const std::vector<int>& perm, int sign) {
        v(basis.index_of(perm)) += signed_sum ? static_cast<double>(sign) : 1.0;
    });
    return v / v.norm();
}

}  // namespace

Vector dark_state(const ManifoldBasis& basis) { return permutation_state(basis, true); }

Vector superradiant_state(const ManifoldBasis& basis) { return permutation_state(basis, false); }

double decay_rate(const Vector& psi, const Dissipator& diss) {
    require_normalized(psi);
    const Matrix rho = psi * psi.adjoint();
    const double rate = -(psi.adjoint() * diss.apply(rho) * psi).value().real();
    return clip_roundoff(rate);
}

double feeding_rate(const Vector& upper, const Vector& lower, const Dissipator& diss,
                    const ManifoldBasis& basis, std::string* warning) {
    require_normalized(upper);
    require_normalized(lower);
    if (manifold_of(upper, basis) - manifold_of(lower, basis) != 1) {
        if (warning)
            *warning = "feeding_rate: states are not in adjacent excitation manifolds; "
                       "the rate is structurally zero";
        return 0.0;
    }
    const Matrix rho = upper * upper.adjoint();
    const double rate = (lower.adjoint() * diss.apply(rho) * lower).value().real();
    return clip_roundoff(rate);
}

Matrix dissipation_matrix(const Matrix& states, const Dissipator& diss) {
    const int m = static_cast<int>(states.cols());
    Matrix d = Matrix::Zero(m, m);
    for (const auto& [rate, jump] : [&] {
             std::vector<std::pair<double, const Matrix*>> v;
             for (std::size_t i = 0; i < diss.jump_operators().size(); ++i)
                 v.emplace_back(diss.jump_rates()[i], &diss.jump_operators()[i]);
             return v;
         }()) {
        const Matrix mapped = (*jump) * states;
        d.noalias() += rate * (mapped.adjoint() * mapped);
    }
    return d;
}

std::vector<std::pair<int, int>> degenerate_groups(const Eigen::VectorXd& energies, double tol) {
    std::vector<std::pair<int, int>> groups;
    int begin = 0;
    for (int i = 1; i <= energies.size(); ++i) {
        const bool split =
            i == energies.size() ||
            std::abs(energies(i) - energies(i - 1)) >
                tol * std::max({1.0, std::abs(energies(i)), std::abs(energies(i - 1))});
        if (split) {
            groups.emplace_back(begin, i);
            begin = i;
        }
    }
    return groups;
}

CascadeGraph cascade_graph(const ManifoldBasis& basis, const Ensemble& ens,
                           const CouplingTensors& tensors, LindbladConvention convention) {
    const Matrix h = hamiltonian(basis, ens, tensors);
    const Dissipator diss(basis, tensors, convention);
    CascadeGraph g;
    for (int n = 0; n <= basis.max_excitation(); ++n) {
        if (basis.block_size(n) == 0) continue;
        g.manifolds.push_back(diagonalize(basis, h, n));
    }
    auto node_id = [](int n, int a) {
        return "n" + std::to_string(n) + "_" + std::to_string(a);
    };
    for (const EigenManifold& man : g.manifolds) {
        const Matrix d = dissipation_matrix(man.states, diss);
        for (int a = 0; a < man.states.cols(); ++a)
            g.nodes.push_back(
                {node_id(man.n_exc, a), man.n_exc, man.energies(a), clip_roundoff(d(a, a).real())});
    }
    // Feeding rate from eigenstate |u> into |l> one manifold below:
    // sum_m r_m |<l| c_m |u>|^2, which equals <l| L[|u><u|] |l> because the
    // anticommutator part has no matrix element between distinct manifolds.
    for (std::size_t mi = 1; mi < g.manifolds.size(); ++mi) {
        const EigenManifold& upper = g.manifolds[mi];
        const EigenManifold& lower = g.manifolds[mi - 1];
        for (int a = 0; a < upper.states.cols(); ++a) {
            Eigen::VectorXd rates = Eigen::VectorXd::Zero(lower.states.cols());
            for (std::size_t m = 0; m < diss.jump_operators().size(); ++m) {
                const Vector mapped = diss.jump_operators()[m] * upper.states.col(a);
                const Vector overlaps = lower.states.adjoint() * mapped;
                rates += diss.jump_rates()[m] * overlaps.cwiseAbs2();
            }
            for (int b = 0; b < lower.states.cols(); ++b)
                g.edges.push_back({node_id(upper.n_exc, a), node_id(lower.n_exc, b),
                                   clip_roundoff(rates(b))});
        }
    }
    return g;
}

double lowest_decay_rate(const Ensemble& ens, int n_exc, LindbladConvention convention,
                         RateScope scope, int dimension_cap) {
    const ManifoldBasis basis(ens.n_atoms(), ens.n_levels(), dimension_cap);
    if (n_exc < 0 || n_exc > basis.max_excitation())
        throw std::invalid_argument("lowest_decay_rate: excitation number out of range");
    const CouplingTensors tensors = coupling_tensors(ens);
    const Dissipator diss(basis, tensors, convention);
    if (scope == RateScope::Manifold) {
        Matrix block_states = Matrix::Zero(basis.dim(), basis.block_size(n_exc));
        int col = 0;
        for (int s : basis.block(n_exc)) block_states(s, col++) = 1.0;
        Eigen::SelfAdjointEigenSolver<Matrix> es(dissipation_matrix(block_states, diss),
                                                 Eigen::EigenvaluesOnly);
        return clip_roundoff(es.eigenvalues().minCoeff());
    }
    const Matrix h = hamiltonian(basis, ens, tensors);
    const EigenManifold man = diagonalize(basis, h, n_exc);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [b, e] : degenerate_groups(man.energies)) {
        const Matrix d = dissipation_matrix(man.states.middleCols(b, e - b), diss);
        Eigen::SelfAdjointEigenSolver<Matrix> es(d, Eigen::EigenvaluesOnly);
        best = std::min(best, es.eigenvalues().minCoeff());
    }
    return clip_roundoff(best);
}

namespace {
std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
}  // namespace

std::string CascadeGraph::to_json() const {
    std::ostringstream os;
    os << "{\n  \"nodes\": [\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const CascadeNode& n = nodes[i];
        os << "    {\"id\": \"" << n.id << "\", \"manifold\": " << n.manifold
           << ", \"energy\": " << fmt_double(n.energy)
           << ", \"total_rate\": " << fmt_double(n.total_rate) << "}"
           << (i + 1 < nodes.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"edges\": [\n";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const CascadeEdge& e = edges[i];
        os << "    {\"from\": \"" << e.from << "\", \"to\": \"" << e.to
           << "\", \"rate\": " << fmt_double(e.rate) << "}" << (i + 1 < edges.size() ? "," : "")
           << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string CascadeGraph::to_dot(double min_rate) const {
    std::ostringstream os;
    os << "digraph cascade {\n  rankdir=TB;\n";
    for (const CascadeNode& n : nodes)
        os << "  \"" << n.id << "\" [label=\"" << n.id << "\\nE=" << fmt_double(n.energy)
           << "\\nrate=" << fmt_double(n.total_rate) << "\"];\n";
    for (const CascadeEdge& e : edges)
        if (e.rate > min_rate)
            os << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"" << fmt_double(e.rate)
               << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace subrad
