#include "fwdyon/tbmt.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace fwdyon {

namespace {

using State = Eigen::Matrix<double, 9, 1>;

State pack(const PhaseState& y) {
    State v;
    v << y.x, y.u, y.s;
    return v;
}

PhaseState unpack(const State& v, double t) { return {v.segment<3>(0), v.segment<3>(3), v.segment<3>(6), t}; }

State rhs(const State& v, const FieldConfig& f, const DyonParticle& p) {
    PhaseState y = unpack(v, 0);
    State d;
    d << p.c * y.beta(), orbit_rhs(y, f, p), spin_rhs(y, f, p);
    return d;
}

double wrap(double a) {
    while (a > std::numbers::pi) a -= 2 * std::numbers::pi;
    while (a <= -std::numbers::pi) a += 2 * std::numbers::pi;
    return a;
}

double plane_angle(const Vec3d& v, const Vec3d& n, const Vec3d& e1, const Vec3d& e2) {
    Vec3d w = v - n.dot(v) * n;
    return std::atan2(w.dot(e2), w.dot(e1));
}

struct Plane {
    Vec3d n, e1, e2;
};

Plane plane_of(const Vec3d& axis) {
    Vec3d n = axis.normalized();
    Vec3d t = std::abs(n.x()) < 0.9 ? Vec3d::UnitX() : Vec3d::UnitY();
    Vec3d e1 = (t - n.dot(t) * n).normalized();
    return {n, e1, n.cross(e1)};
}

}  // namespace

double PhaseState::helicity() const {
    double b = u.norm();
    return b == 0 ? 0 : s.dot(u) / b;
}

double lorentz_gamma(const Vec3d& beta) {
    double b2 = beta.squaredNorm();
    if (!(b2 < 1)) throw InvalidVelocity("|beta| must be below 1");
    return 1 / std::sqrt(1 - b2);
}

Vec3d thomas_F(const Vec3d& beta, const FieldConfig& f, double g) {
    double gam = lorentz_gamma(beta);
    double a = g / 2 - 1;
    double k = gam / (gam + 1);
    return (a + 1 / gam) * f.B - a * k * beta.dot(f.B) * beta - (g / 2 - k) * beta.cross(f.E);
}

Vec3d thomas_F_dual(const Vec3d& beta, const FieldConfig& f, double g_et) { return thomas_F(beta, f.dual(), g_et); }

Vec3d spin_rhs(const PhaseState& y, const FieldConfig& f, const DyonParticle& p) {
    Vec3d b = y.beta();
    Vec3d out = Vec3d::Zero();
    if (p.e != 0) out += (p.e / (p.m * p.c)) * y.s.cross(thomas_F(b, f, p.g_e));
    if (p.etilde != 0) out += (p.etilde / (p.m * p.c)) * y.s.cross(thomas_F_dual(b, f, p.g_et));
    return out;
}

Vec3d orbit_rhs(const PhaseState& y, const FieldConfig& f, const DyonParticle& p) {
    Vec3d b = y.beta();
    Vec3d force = p.e * (f.E + b.cross(f.B)) + p.etilde * (f.B - b.cross(f.E));
    return force / (p.m * p.c);
}

double orbit_energy(const PhaseState& y, const FieldConfig& f, const DyonParticle& p) {
    return y.gamma() * p.m * p.c * p.c - (p.e * f.E + p.etilde * f.B).dot(y.x);
}

PhaseState step(const PhaseState& y, const FieldConfig& f, const DyonParticle& p, double dt, Scheme scheme) {
    State v = pack(y);
    if (scheme == Scheme::rk4) {
        State k1 = rhs(v, f, p);
        State k2 = rhs(v + dt / 2 * k1, f, p);
        State k3 = rhs(v + dt / 2 * k2, f, p);
        State k4 = rhs(v + dt * k3, f, p);
        return unpack(v + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4), y.t + dt);
    }

    const double r = std::sqrt(3.0) / 6;
    const double a[2][2] = {{0.25, 0.25 - r}, {0.25 + r, 0.25}};
    State k0 = rhs(v, f, p);
    std::array<State, 2> k = {k0, k0};
    for (int it = 0; it < 100; ++it) {
        std::array<State, 2> next;
        for (int i = 0; i < 2; ++i) next[i] = rhs(v + dt * (a[i][0] * k[0] + a[i][1] * k[1]), f, p);
        double change = std::max((next[0] - k[0]).cwiseAbs().maxCoeff(), (next[1] - k[1]).cwiseAbs().maxCoeff());
        k = next;
        if (change == 0) break;
    }
    return unpack(v + dt / 2 * (k[0] + k[1]), y.t + dt);
}

Trajectory integrate(const PhaseState& y0, const FieldConfig& f, const DyonParticle& p, double dt, long steps,
                     Scheme scheme) {
    if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
    if (steps < 0) throw std::invalid_argument("steps must be non-negative");
    Trajectory tr;
    tr.samples.reserve(static_cast<std::size_t>(steps) + 1);
    tr.samples.push_back(y0);
    PhaseState y = y0;
    for (long n = 1; n <= steps; ++n) {
        y = step(y, f, p, dt, scheme);
        y.t = y0.t + n * dt;
        tr.samples.push_back(y);
    }
    return tr;
}

double momentum_rotation(const Trajectory& tr, const Vec3d& axis) {
    Plane pl = plane_of(axis);
    double total = 0;
    double prev = plane_angle(tr.front().u, pl.n, pl.e1, pl.e2);
    for (std::size_t i = 1; i < tr.size(); ++i) {
        double cur = plane_angle(tr.samples[i].u, pl.n, pl.e1, pl.e2);
        total += wrap(cur - prev);
        prev = cur;
    }
    return total;
}

double relative_precession(const Trajectory& tr, const Vec3d& axis) {
    Plane pl = plane_of(axis);
    auto rel = [&](const PhaseState& y) {
        return plane_angle(y.s, pl.n, pl.e1, pl.e2) - plane_angle(y.u, pl.n, pl.e1, pl.e2);
    };
    double total = 0;
    double prev = rel(tr.front());
    for (std::size_t i = 1; i < tr.size(); ++i) {
        double cur = rel(tr.samples[i]);
        total += wrap(cur - prev);
        prev = cur;
    }
    return momentum_rotation(tr, axis) < 0 ? -total : total;
}

InvariantDrift max_drift(const Trajectory& tr, const FieldConfig& f, const DyonParticle& p) {
    InvariantDrift d;
    const PhaseState& y0 = tr.front();
    double h0 = y0.helicity(), s0 = y0.s.norm(), e0 = orbit_energy(y0, f, p);
    for (const auto& y : tr.samples) {
        d.helicity = std::max(d.helicity, std::abs(y.helicity() - h0));
        d.spin_norm = std::max(d.spin_norm, std::abs(y.s.norm() - s0) / s0);
        d.energy = std::max(d.energy, std::abs(orbit_energy(y, f, p) - e0) / std::abs(e0));
    }
    return d;
}

std::pair<Vec3d, Vec3d> boost_dipole(const Vec3d& mu_p, const Vec3d& mu_m, const Vec3d& beta) {
    double gam = lorentz_gamma(beta);
    double k = gam * gam / (gam + 1);
    return {gam * (mu_p + beta.cross(mu_m)) - k * beta.dot(mu_p) * beta,
            gam * (mu_m - beta.cross(mu_p)) - k * beta.dot(mu_m) * beta};
}

std::pair<Vec3d, Vec3d> boost_dipole_integrated(const Vec3d& p, const Vec3d& m, const Vec3d& beta) {
    double gam = lorentz_gamma(beta);
    double g2 = gam * gam;
    double k = gam / (gam + 1);
    Vec3d half_p = p / 2;
    Vec3d lab_half_p = g2 * (half_p + beta.cross(m) - k * beta.dot(half_p) * beta);
    Vec3d lab_m = g2 * (m - beta.cross(half_p) - k * beta.dot(m) * beta);
    return {2 * lab_half_p, lab_m};
}

FieldConfig boost_fields(const FieldConfig& rest, const Vec3d& beta) {
    double gam = lorentz_gamma(beta);
    double k = gam * gam / (gam + 1);
    return {gam * (rest.E - beta.cross(rest.B)) - k * beta.dot(rest.E) * beta,
            gam * (rest.B + beta.cross(rest.E)) - k * beta.dot(rest.B) * beta};
}

std::pair<Vec3d, Vec3d> fw_effective_field(const Vec3d& beta, const FieldConfig& f, double g_e, double g_et) {
    Vec3d xi = lorentz_gamma(beta) * beta;
    double gam = std::sqrt(1 + xi.squaredNorm());
    auto brace = [&](double g, const Vec3d& lead, const Vec3d& cross) -> Vec3d {
        double a = g / 2 - 1;
        return (a + 1 / gam) * lead - a * xi.dot(lead) * xi / (gam * (gam + 1)) -
               (g / 2 - gam / (gam + 1)) * xi.cross(cross) / gam;
    };
    return {brace(g_e, f.B, f.E), brace(g_et, -f.E, f.B)};
}

}  // namespace fwdyon
