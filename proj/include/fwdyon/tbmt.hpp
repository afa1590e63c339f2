#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fwdyon {

using Vec3d = Eigen::Vector3d;

/// Homogeneous static fields.  The dual pair is (E~, B~) = (B, -E).
struct FieldConfig {
    Vec3d E = Vec3d::Zero();
    Vec3d B = Vec3d::Zero();

    FieldConfig dual() const { return {B, -E}; }
};

/// Gaussian units with m and c explicit.
struct DyonParticle {
    double m = 1;
    double c = 1;
    double e = 1;
    double etilde = 0;
    double g_e = 2;
    double g_et = 2;
};

struct PhaseState {
    Vec3d x = Vec3d::Zero();
    Vec3d u = Vec3d::Zero();  // gamma beta
    Vec3d s = Vec3d::Zero();  // rest-frame spin
    double t = 0;

    double gamma() const { return std::sqrt(1 + u.squaredNorm()); }
    Vec3d beta() const { return u / gamma(); }
    /// s . beta / |beta|, zero at rest.
    double helicity() const;
};

class InvalidVelocity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

double lorentz_gamma(const Vec3d& beta);

Vec3d thomas_F(const Vec3d& beta, const FieldConfig& f, double g_e);
Vec3d thomas_F_dual(const Vec3d& beta, const FieldConfig& f, double g_et);

Vec3d spin_rhs(const PhaseState& y, const FieldConfig& f, const DyonParticle& p);
Vec3d orbit_rhs(const PhaseState& y, const FieldConfig& f, const DyonParticle& p);

/// gamma m c^2 minus the potential energy of both charges in the
/// homogeneous fields.
double orbit_energy(const PhaseState& y, const FieldConfig& f, const DyonParticle& p);

enum class Scheme {
    gauss4,  // two-stage Gauss-Legendre, keeps quadratic invariants
    rk4,
};

struct Trajectory {
    std::vector<PhaseState> samples;

    const PhaseState& front() const { return samples.front(); }
    const PhaseState& back() const { return samples.back(); }
    std::size_t size() const { return samples.size(); }
};

PhaseState step(const PhaseState& y, const FieldConfig& f, const DyonParticle& p, double dt,
                Scheme scheme = Scheme::gauss4);

Trajectory integrate(const PhaseState& y0, const FieldConfig& f, const DyonParticle& p, double dt, long steps,
                     Scheme scheme = Scheme::gauss4);

/// Accumulated angle of the spin relative to the momentum, both projected
/// on the plane normal to `axis`, counted in the sense of the momentum
/// rotation.
double relative_precession(const Trajectory& tr, const Vec3d& axis);

/// Accumulated rotation angle of the momentum about `axis` (absolute value).
double momentum_rotation(const Trajectory& tr, const Vec3d& axis);

struct InvariantDrift {
    double helicity = 0;
    double spin_norm = 0;  // relative
    double energy = 0;     // relative
};

InvariantDrift max_drift(const Trajectory& tr, const FieldConfig& f, const DyonParticle& p);

/// Density law: (mu_p, mu_m) in the lab from the rest-frame pair.
std::pair<Vec3d, Vec3d> boost_dipole(const Vec3d& mu_p_rest, const Vec3d& mu_m_rest, const Vec3d& beta);

/// Integrated law with the gamma^2 volume factor: (p, m) from (p', m').
std::pair<Vec3d, Vec3d> boost_dipole_integrated(const Vec3d& p_rest, const Vec3d& m_rest, const Vec3d& beta);

/// Lab fields from rest-frame fields of a frame moving with `beta`.
FieldConfig boost_fields(const FieldConfig& rest, const Vec3d& beta);

/// The two field combinations multiplying e and etilde in the FW spin
/// Hamiltonian, evaluated on the particle block and written in xi = gamma beta.
std::pair<Vec3d, Vec3d> fw_effective_field(const Vec3d& beta, const FieldConfig& f, double g_e, double g_et);

}  // namespace fwdyon
