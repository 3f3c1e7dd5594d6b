#include "subrad/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace subrad {

namespace {
constexpr double kUnitNormTol = 1e-12;
constexpr double kOrthoTol = 1e-10;
}  // namespace

Ensemble::Ensemble(std::vector<Atom> atoms, double reference_wavelength,
                   bool require_orthogonal_dipoles)
    : atoms_(std::move(atoms)),
      reference_wavelength_(reference_wavelength),
      require_orthogonal_(require_orthogonal_dipoles) {
    validate();
}

double Ensemble::k0() const { return 2.0 * std::numbers::pi / reference_wavelength_; }

double Ensemble::distance(int i, int k) const {
    return (atom(i).position - atom(k).position).norm();
}

Eigen::Vector3d Ensemble::separation_unit(int i, int k) const {
    Eigen::Vector3d d = atom(k).position - atom(i).position;
    return d / d.norm();
}

void Ensemble::validate() const {
    if (atoms_.size() < 2) throw std::invalid_argument("ensemble needs at least two atoms");
    if (reference_wavelength_ <= 0.0)
        throw std::invalid_argument("reference wavelength must be positive");
    const std::size_t nt = atoms_.front().transitions.size();
    if (nt == 0) throw std::invalid_argument("atoms need at least one transition");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const Atom& a = atoms_[i];
        if (a.transitions.size() != nt)
            throw std::invalid_argument("all atoms must carry the same number of transitions");
        for (const Transition& t : a.transitions) {
            if (std::abs(t.dipole.norm() - 1.0) > kUnitNormTol)
                throw std::invalid_argument("transition dipoles must be unit vectors");
            if (t.rate < 0.0) throw std::invalid_argument("transition rates must be >= 0");
        }
        if (require_orthogonal_) {
            for (std::size_t j = 0; j < nt; ++j)
                for (std::size_t jp = j + 1; jp < nt; ++jp)
                    if (std::abs(a.transitions[j].dipole.dot(a.transitions[jp].dipole)) > kOrthoTol)
                        throw std::invalid_argument(
                            "dipoles within one atom must be pairwise orthogonal");
        }
        for (std::size_t k = i + 1; k < atoms_.size(); ++k)
            if ((atoms_[i].position - atoms_[k].position).norm() <= 0.0)
                throw std::invalid_argument("coincident atoms: all pairwise distances must be > 0");
    }
}

Eigen::Vector3d dipole_from_angles(double theta, double phi) {
    return {std::cos(theta), std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi)};
}

namespace {
Atom make_atom(Eigen::Vector3d pos, std::vector<Eigen::Vector3d> dipoles) {
    Atom a;
    a.position = std::move(pos);
    for (auto& d : dipoles) a.transitions.push_back(Transition{1.0, 1.0, d.normalized()});
    return a;
}
}  // namespace

Ensemble make_pair(double distance) {
    if (distance <= 0.0) throw std::invalid_argument("pair distance must be > 0");
    return Ensemble({make_atom({0, 0, 0}, {Eigen::Vector3d::UnitZ()}),
                     make_atom({distance, 0, 0}, {Eigen::Vector3d::UnitZ()})});
}

Ensemble make_pair(double distance, double theta1, double theta2, double phi) {
    if (distance <= 0.0) throw std::invalid_argument("pair distance must be > 0");
    const Eigen::Vector3d m1 = dipole_from_angles(theta1, phi);
    const Eigen::Vector3d m2 = dipole_from_angles(theta2, phi);
    const bool ortho = std::abs(m1.dot(m2)) <= 1e-10;
    return Ensemble({make_atom({0, 0, 0}, {m1, m2}), make_atom({distance, 0, 0}, {m1, m2})}, 1.0,
                    ortho);
}

Ensemble make_chain(int n_atoms, double spacing, bool enforce_orthogonality) {
    if (n_atoms < 2) throw std::invalid_argument("chain needs at least two atoms");
    if (spacing <= 0.0) throw std::invalid_argument("chain spacing must be > 0");
    const int nt = n_atoms - 1;
    if (enforce_orthogonality && nt > 2)
        throw std::invalid_argument(
            "cannot place more than two pairwise orthogonal dipoles transverse to the chain; "
            "relax orthogonality to use the fanned transverse set");
    std::vector<Atom> atoms;
    for (int i = 0; i < n_atoms; ++i) {
        std::vector<Eigen::Vector3d> dips;
        for (int j = 0; j < nt; ++j) {
            const double a = (nt == 1) ? std::numbers::pi / 2.0
                                       : j * std::numbers::pi / nt;
            // nt == 1: a single z dipole; nt == 2: (y, z); nt >= 3: even fan.
            const double ang = (nt == 2) ? j * std::numbers::pi / 2.0 : a;
            if (nt == 1)
                dips.push_back(Eigen::Vector3d::UnitZ());
            else
                dips.push_back({0.0, std::cos(ang), std::sin(ang)});
        }
        atoms.push_back(make_atom({i * spacing, 0, 0}, std::move(dips)));
    }
    return Ensemble(std::move(atoms), 1.0, enforce_orthogonality);
}

Ensemble make_triangle(double side, bool c3_symmetric, int n_transitions) {
    if (side <= 0.0) throw std::invalid_argument("triangle side must be > 0");
    if (n_transitions < 1 || n_transitions > 2)
        throw std::invalid_argument("triangle supports one or two transitions per atom");
    const double circumradius = side / std::sqrt(3.0);
    std::vector<Atom> atoms;
    for (int k = 0; k < 3; ++k) {
        const double ang = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * k / 3.0;
        const Eigen::Vector3d radial{std::cos(ang), std::sin(ang), 0.0};
        std::vector<Eigen::Vector3d> dips;
        if (c3_symmetric) {
            if (n_transitions != 2)
                throw std::invalid_argument("the C3-symmetric triangle has two transitions");
            dips = {Eigen::Vector3d::UnitZ(), radial};
        } else {
            dips = {Eigen::Vector3d::UnitZ()};
            if (n_transitions == 2) dips.push_back(Eigen::Vector3d::UnitX());
        }
        atoms.push_back(make_atom(circumradius * radial, std::move(dips)));
    }
    return Ensemble(std::move(atoms));
}

Ensemble make_square(double side, int n_transitions) {
    if (side <= 0.0) throw std::invalid_argument("square side must be > 0");
    if (n_transitions < 1 || n_transitions > 3)
        throw std::invalid_argument("square supports one to three transitions per atom");
    const std::vector<Eigen::Vector3d> order = {Eigen::Vector3d::UnitZ(), Eigen::Vector3d::UnitX(),
                                                Eigen::Vector3d::UnitY()};
    std::vector<Eigen::Vector3d> dips(order.begin(), order.begin() + n_transitions);
    const double s = side;
    std::vector<Atom> atoms;
    for (const auto& p :
         {Eigen::Vector3d{0, 0, 0}, {s, 0, 0}, {s, s, 0}, {0, s, 0}})
        atoms.push_back(make_atom(p, std::vector<Eigen::Vector3d>(dips)));
    return Ensemble(std::move(atoms));
}

}  // namespace subrad
