#pragma once

#include <Eigen/Dense>
#include <vector>

namespace subrad {

/// One dipole transition |g> -> |e_j> of a V-type atom.
///
/// Units: `frequency` is a multiple of the reference frequency omega_0
/// (1.0 = degenerate with the reference), `rate` is the single-atom
/// population decay rate in units of the reference rate.
struct Transition {
    double frequency = 1.0;
    double rate = 1.0;
    Eigen::Vector3d dipole = Eigen::Vector3d::UnitZ();
};

/// An atom: a position (in units of the reference wavelength lambda_0)
/// plus an ordered list of transitions to the common ground state.
struct Atom {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
    std::vector<Transition> transitions;
};

/// A fixed geometric configuration of identical V-type atoms.
///
/// Invariants (checked by validate()):
///  - at least two atoms, all pairwise distances strictly positive
///  - every atom carries the same number of transitions
///  - dipoles are unit vectors (1e-12)
///  - within one atom, dipoles are pairwise orthogonal (1e-10) unless
///    orthogonality was explicitly relaxed at construction
class Ensemble {
public:
    Ensemble(std::vector<Atom> atoms, double reference_wavelength = 1.0,
             bool require_orthogonal_dipoles = true);

    int n_atoms() const { return static_cast<int>(atoms_.size()); }
    int n_transitions() const { return static_cast<int>(atoms_.front().transitions.size()); }
    /// Number of internal levels M (ground + excited).
    int n_levels() const { return n_transitions() + 1; }

    const Atom& atom(int i) const { return atoms_.at(static_cast<std::size_t>(i)); }
    const std::vector<Atom>& atoms() const { return atoms_; }

    double reference_wavelength() const { return reference_wavelength_; }
    /// k_0 = 2 pi / lambda_0 in inverse position units.
    double k0() const;

    /// Distance between atoms i and k in lambda_0 units.
    double distance(int i, int k) const;
    /// Unit separation vector from atom i to atom k.
    Eigen::Vector3d separation_unit(int i, int k) const;

    bool orthogonal_dipoles_required() const { return require_orthogonal_; }

private:
    void validate() const;

    std::vector<Atom> atoms_;
    double reference_wavelength_;
    bool require_orthogonal_;
};

/// Unit dipole from polar angle `theta` (measured from the x axis, which is
/// the interatomic axis of the pair/chain builders) and azimuth `phi`:
/// (cos theta, sin theta cos phi, sin theta sin phi).
Eigen::Vector3d dipole_from_angles(double theta, double phi);

/// Two two-level atoms on the x axis separated by `distance`, both dipoles
/// along z (parallel, perpendicular to the separation axis).
Ensemble make_pair(double distance);

/// Two V-type atoms on the x axis, two transitions each, with dipoles given
/// by dipole_from_angles(theta1, phi) and dipole_from_angles(theta2, phi).
/// theta2 - theta1 = pi/2 keeps the intra-atom dipoles orthogonal.
Ensemble make_pair(double distance, double theta1, double theta2, double phi = 0.0);

/// `n_atoms` equally spaced atoms on the x axis, n_atoms-1 transitions each.
/// Dipoles are identical across atoms and transverse to the chain: transition
/// j (0-based) points along (0, cos a_j, sin a_j) with a_j = j*pi/(M-1).
/// For two transitions this is (y, z). Three or more transverse directions
/// cannot be pairwise orthogonal; pass enforce_orthogonality = false to
/// accept the evenly fanned non-orthogonal set, otherwise this throws.
Ensemble make_chain(int n_atoms, double spacing, bool enforce_orthogonality = true);

/// Three atoms at the vertices of an equilateral triangle in the xy plane.
///
/// With `c3_symmetric` (two transitions per atom): transition 0 points along
/// z for every atom and transition 1 points radially outward from the
/// centroid, so the whole configuration maps onto itself under a 120-degree
/// rotation about the symmetry axis. This is the orientation pattern for
/// which the totally antisymmetric state is an exact Hamiltonian eigenstate.
///
/// Without it, all atoms carry identical dipoles: z for a single transition,
/// (z, x) for two.
Ensemble make_triangle(double side, bool c3_symmetric = true, int n_transitions = 2);

/// Four atoms at the corners of a square in the xy plane with
/// `n_transitions` in {1,2,3} identical transitions per atom; dipole order
/// is (z, x, y), so a single transition gives four two-level atoms with
/// z dipoles.
Ensemble make_square(double side, int n_transitions = 3);

}  // namespace subrad
