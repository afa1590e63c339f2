#include "fwdyon/catalog.hpp"

#include "fwdyon/hamiltonians.hpp"
#include "fwdyon/reduction.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace fwdyon {

using ops::mat;
using ops::sym;

namespace {

Expression beta() { return mat(basis::beta()); }
Expression inv_eg(int n) { return Expression::symbol(dim({{Sym::Eg, -n}})); }
Expression c_pow(int n) { return Expression::symbol(dim({{Sym::c, n}})); }
Expression q(long num, long den = 1) { return Expression::scalar(Rational(num, den)); }

Expression sum_pairs(int total) {
    Expression r;
    for (int l = 1; l < total; ++l) {
        int m = total - l;
        if (l > 4 || m > 4) continue;
        r += commutator(beta() * forms::stage1_odd(l), forms::stage1_odd(m));
    }
    return r;
}

Expression sum_triples(int total) {
    Expression r;
    for (int l = 1; l <= 4; ++l)
        for (int m = 1; l + m <= total; ++m) {
            int n = total - l - m;
            if (n > 2) continue;
            Expression inner = commutator(beta() * forms::stage1_odd(m), forms::stage1_even(n));
            r += commutator(beta() * forms::stage1_odd(l), inner);
        }
    return r;
}

Expression dirac_order(int n) {
    Expression om = ops::omega_o(), w = ops::W(), d = ops::D(), v = ops::omega_e();
    Expression bo = beta() * om;
    Expression body;
    switch (n) {
        case 1: body = beta() * om * om; break;
        case 2: body = Rational(1, 2) * w; break;
        case 3: {
            Expression bd = beta() * d;
            body = -(beta() * power(om, 4)) + beta() * bd * bd;
            break;
        }
        case 4:
            body = Rational(1, 24) * commutator(commutator(om, w), om) - Rational(4, 3) * commutator(d, power(om, 3));
            break;
        case 5:
            body = Rational(1, 144) * forms::nested_commutator(bo, 5, om) + Rational(1, 2) * sum_pairs(4) +
                   Rational(1, 2) * sum_triples(3);
            break;
        case 6:
            body = Rational(1, 720) * forms::nested_commutator(bo, 6, v) + Rational(1, 2) * sum_pairs(5) +
                   Rational(1, 2) * sum_triples(4);
            break;
        default: throw std::out_of_range("order must be 1..6");
    }
    return inv_eg(n) * body;
}

// Physical forms, written with m and |xi|^2k = (xi.xi)^k.
struct Physical {
    Vec3 xi = ops::xi();
    Vec3 mu_m = ops::mu_m();
    Vec3 mu_p = ops::mu_p();
    Expression xi2 = ops::xi2();
    Expression xi4 = xi2 * xi2;
    Expression xi6 = xi4 * xi2;
    Expression mc2 = Expression::symbol(dim({{Sym::m, 1}, {Sym::c, 2}}));

    Expression zeeman() const { return dot(mu_m, ops::B()) + dot(mu_p, ops::E()); }

    Expression spin_orbit() const {
        return Rational(-1, 2) * dot(ops::E(), cross(xi, mu_m)) + Rational(1, 2) * dot(ops::B(), cross(xi, mu_p));
    }

    Expression order(int n) const {
        Expression pi2 = ops::Pi2();
        switch (n) {
            case 1:
                return Expression::symbol(dim({{Sym::m, -1}}), Rational(1, 2)) * beta() * pi2 -
                       beta() * dot(mu_m, ops::B()) - beta() * dot(mu_p, ops::E());
            case 2: return spin_orbit();
            case 3:
                return Expression::symbol(dim({{Sym::m, -3}, {Sym::c, -2}}), Rational(-1, 8)) * beta() * pi2 * pi2 +
                       Rational(1, 2) * beta() * xi2 * zeeman();
            case 4: return Rational(-3, 4) * xi2 * spin_orbit();
            case 5: return Rational(1, 16) * beta() * mc2 * xi6 - Rational(3, 8) * beta() * xi4 * zeeman();
            case 6: return Rational(5, 8) * xi4 * spin_orbit();
            default: throw std::out_of_range("order must be 1..6");
        }
    }

    Expression orbit() const {
        Expression series = q(1) + Rational(1, 2) * xi2 - Rational(1, 8) * xi4 + Rational(1, 16) * xi6;
        return beta() * mc2 * series + ops::omega_e();
    }

    Expression spin() const {
        Vec3 p_eff = scale(beta(), mu_p) + scale(q(1, 2), cross(xi, mu_m));
        Vec3 m_eff = scale(beta(), mu_m) - scale(q(1, 2), cross(xi, mu_p));
        Expression r = -dot(ops::E(), p_eff) - dot(ops::B(), m_eff);
        r += beta() * (Rational(1, 2) * xi2 - Rational(3, 8) * xi4) * zeeman();
        r += (Rational(-3, 4) * xi2 + Rational(5, 8) * xi4) * spin_orbit();
        return r;
    }

    // Anomalous pieces with mu' = mu''/E_g, d' = d''/E_g.
    Expression fw1() const {
        Vec3 x = forms::anomalous_x();
        Expression sx = beta() * dot(ops::Sigma(), xi) * dot(x, xi);
        Expression r = (q(-1, 2) + Rational(3, 8) * xi2) * sx + beta() * dot(ops::Sigma(), x);
        return inv_eg(1) * r;
    }

    Expression fw2() const {
        Vec3 y = forms::anomalous_y();
        Expression series = q(1) - Rational(1, 2) * xi2 + Rational(3, 8) * xi4;
        return inv_eg(1) * series * dot(ops::Sigma(), cross(xi, y));
    }
};

Expression physical(const Expression& e) { return eliminate_mass(truncate_fields(e)); }

Expression field_linear(const Expression& e) { return truncate_fields(e); }

}  // namespace

namespace forms {

Expression nested_commutator(const Expression& a, int n, const Expression& x, const Truncation& t) {
    Expression r = x;
    for (int k = 0; k < n; ++k) r = commutator(a, r, t);
    return r;
}

Expression stage1_odd(int l) {
    Expression om = ops::omega_o();
    switch (l) {
        case 1: return beta() * ops::D();
        case 2: return Rational(-4, 3) * power(om, 3);
        case 3: return Rational(1, 6) * beta() * commutator(om, ops::W());
        case 4: return Rational(8, 15) * power(om, 5);
        default: throw std::out_of_range("odd slice must be 1..4");
    }
}

Expression stage1_even(int n) {
    switch (n) {
        case 0: return ops::omega_e();
        case 1: return beta() * power(ops::omega_o(), 2);
        case 2: return Rational(1, 2) * ops::W();
        default: throw std::out_of_range("even slice must be 0..2");
    }
}

std::array<Expression, 3> anomalous_x() {
    Vec3 r;
    for (int i = 1; i <= 3; ++i)
        r[i - 1] = sym(Sym::d) * Expression::atom(atoms::E(i)) - sym(Sym::mu) * Expression::atom(atoms::B(i));
    return r;
}

std::array<Expression, 3> anomalous_y() {
    Vec3 r;
    for (int i = 1; i <= 3; ++i)
        r[i - 1] = sym(Sym::mu) * Expression::atom(atoms::E(i)) + sym(Sym::d) * Expression::atom(atoms::B(i));
    return r;
}

Expression beta_sigma_pi_x_pi() { return beta() * dot(ops::Sigma(), ops::Pi()) * dot(anomalous_x(), ops::Pi()); }

Expression odd_anticommutator() { return anticommutator(ops::omega_o(), ops::omega_o_f()); }

}  // namespace forms

const Expression& ReferenceCatalog::at(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw std::out_of_range("no catalog entry " + key);
    return it->second;
}

std::vector<Expression> ReferenceCatalog::dirac_orders() const {
    std::vector<Expression> r;
    for (int n = 1; n <= 6; ++n) r.push_back(at("dirac.order." + std::to_string(n)));
    return r;
}

std::vector<Expression> ReferenceCatalog::pauli_orders() const {
    std::vector<Expression> r;
    for (int n = 1; n <= 6; ++n) r.push_back(at("pauli.order." + std::to_string(n)));
    return r;
}

nlohmann::json ReferenceCatalog::to_json() const {
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [k, e] : entries_) entries[k] = fwdyon::to_json(e);
    return {{"version", kFormatVersion}, {"entries", entries}};
}

ReferenceCatalog ReferenceCatalog::from_json(const nlohmann::json& j) {
    if (j.at("version").get<int>() != kFormatVersion) throw std::runtime_error("unsupported catalog version");
    ReferenceCatalog c;
    for (const auto& [k, v] : j.at("entries").items()) c.entries_[k] = expression_from_json(v);
    return c;
}

ReferenceCatalog build_reference_catalog() {
    ReferenceCatalog c;
    const Physical ph;
    Expression om = ops::omega_o(), w = ops::W(), d = ops::D(), pi2 = ops::Pi2();
    Expression c2pi2w = c_pow(2) * pi2 * w;
    Expression c4pi4w = c_pow(4) * pi2 * pi2 * w;

    for (int n = 1; n <= 6; ++n) {
        auto s = std::to_string(n);
        c.set("dirac.order." + s, dirac_order(n));
        c.set("dirac.physical." + s, physical(ph.order(n)));
    }
    for (int l = 1; l <= 4; ++l) c.set("dirac.stage1.odd." + std::to_string(l), inv_eg(l) * forms::stage1_odd(l));
    for (int n = 0; n <= 2; ++n) c.set("dirac.stage1.even." + std::to_string(n), inv_eg(n) * forms::stage1_even(n));
    c.set("dirac.orbit", symmetric_split(physical(ph.orbit())).field_free);
    c.set("dirac.spin", physical(ph.spin()));

    // Right-hand sides of intermediate identities.  The truncated ones hold
    // only once field products are dropped.
    Expression om2 = om * om;
    Expression anti = om2 * w + w * om2;
    Expression sandwich = om * w * om;
    c.set("identity.omega_w_omega", field_linear(Rational(-1) * c2pi2w));
    c.set("identity.omega2_w_anticommutator", field_linear(Rational(2) * c2pi2w));
    c.set("identity.order4_split", Rational(-11, 8) * anti - Rational(5, 4) * sandwich);
    c.set("identity.order4_reduced", field_linear(Rational(-3, 2) * c2pi2w));

    Expression b_om6 = beta() * power(om, 6);
    Expression d_anti = beta() * anticommutator(d, commutator(om, w));
    c.set("identity.order5_nested", Rational(32) * b_om6);
    c.set("identity.order5_pairs", Rational(-1, 3) * d_anti + Rational(32, 9) * b_om6);
    c.set("identity.order5_triples", Rational(-7, 3) * d_anti + Rational(6) * anticommutator(d, om * d * om));
    c.set("identity.order5_reduced", field_linear(Rational(2) * b_om6));

    auto chain = [&](std::array<long, 5> k) {
        Expression r;
        for (int j = 0; j < 5; ++j) r += Rational(k[j]) * power(om, 4 - j) * w * power(om, j);
        return r;
    };
    c.set("identity.order6_pair_1_4", Rational(8, 15) * chain({1, 1, 1, 1, 1}));
    c.set("identity.order6_pair_2_3", Rational(-2, 9) * chain({-1, 1, 0, 1, -1}));
    c.set("identity.order6_nested", chain({1, -4, 6, -4, 1}));
    c.set("identity.order6_triple_1_3_0", Rational(1, 6) * commutator(d, commutator(commutator(om, w), ops::omega_e())));
    c.set("identity.order6_triple_2_2_0", Rational(16, 9) * chain({1, 2, 3, 2, 1}));
    c.set("identity.order6_triple_1_2_1", Rational(8, 3) * chain({1, 1, 1, 1, 1}));
    c.set("identity.order6_triple_2_1_1", Rational(4, 3) * chain({1, 1, 2, 1, 1}));
    c.set("identity.order6_triple_1_1_2", Rational(1, 2) * commutator(d, commutator(d, w)));
    c.set("identity.order6_nested_reduced", field_linear(Rational(16) * c4pi4w));
    c.set("identity.order6_pairs_reduced", field_linear(Rational(128, 45) * c4pi4w));
    c.set("identity.order6_triples_reduced", field_linear(Rational(64, 9) * c4pi4w));
    c.set("identity.order6_reduced", field_linear(Rational(5) * c4pi4w));

    // Anomalous moments.
    Expression sx = forms::beta_sigma_pi_x_pi();
    Expression anti_f = field_linear(Rational(2) * c_pow(1) * beta() * dot(ops::Sigma(), cross(ops::Pi(), forms::anomalous_y())));
    c.set("pauli.wf", field_linear(Rational(-4) * c_pow(2) * sx));
    c.set("pauli.odd_anticommutator", anti_f);
    c.set("pauli.fw1.1", inv_eg(1) * beta() * dot(ops::Sigma(), forms::anomalous_x()));
    c.set("pauli.fw1.3", field_linear(Rational(-2) * c_pow(2) * inv_eg(3) * sx));
    c.set("pauli.fw1.5", field_linear(Rational(6) * c_pow(4) * inv_eg(5) * sx * pi2));
    Expression b_anti = beta() * anti_f;
    c.set("pauli.fw2.2", inv_eg(2) * b_anti);
    c.set("pauli.fw2.4", field_linear(Rational(-2) * c_pow(2) * inv_eg(4) * b_anti * pi2));
    c.set("pauli.fw2.6", field_linear(Rational(6) * c_pow(4) * inv_eg(6) * b_anti * pi2 * pi2));
    for (int n = 1; n <= 6; ++n) {
        auto s = std::to_string(n);
        Expression r = field_linear(c.at("dirac.order." + s));
        std::string extra = (n % 2 ? "pauli.fw1." : "pauli.fw2.") + s;
        r += c.at(extra);
        c.set("pauli.order." + s, r);
    }
    Expression fw1 = physical(ph.fw1()), fw2 = physical(ph.fw2());
    c.set("pauli.fw1", fw1);
    c.set("pauli.fw2", fw2);
    c.set("pauli.spin", c.at("dirac.spin") + fw1 + fw2);

    for (int i = 1; i <= 3; ++i) {
        c.set("intrinsic.mu_m." + std::to_string(i), eliminate_mass(ph.mu_m[i - 1]));
        c.set("intrinsic.mu_p." + std::to_string(i), eliminate_mass(ph.mu_p[i - 1]));
    }
    return c;
}

std::filesystem::path fixtures_dir() {
    if (const char* env = std::getenv("FW_FIXTURES"); env && *env) return env;
    return FWDYON_DEFAULT_FIXTURES;
}

std::filesystem::path catalog_path(const std::filesystem::path& dir) { return dir / "catalog.json"; }

ReferenceCatalog load_catalog(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open catalog " + file.string());
    return ReferenceCatalog::from_json(nlohmann::json::parse(in));
}

void save_catalog(const ReferenceCatalog& c, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write catalog " + file.string());
    out << c.to_json().dump(1) << '\n';
}

}  // namespace fwdyon
