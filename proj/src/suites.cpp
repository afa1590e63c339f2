#include "fwdyon/suites.hpp"

#include "fwdyon/reduction.hpp"
#include "fwdyon/series.hpp"

#include <sstream>

namespace fwdyon {

namespace {

std::string diff_detail(const Expression& d) {
    if (d.is_zero()) return "diff 0";
    std::ostringstream os;
    os << "diff " << d.size() << " terms, orders " << d.min_order() << ".." << d.max_order();
    return os.str();
}

Check compare(const std::string& name, const Expression& derived, const Expression& reference) {
    Expression d = derived - reference;
    return {name, d.is_zero(), diff_detail(d)};
}

Expression beta() { return Expression::matrix(basis::beta()); }

struct StageOneBlocks {
    Expression b, om, w, d, v;

    Expression odd(int l) const { return forms::stage1_odd(l); }
    Expression even(int n) const { return forms::stage1_even(n); }
    Expression pair(int l, int m) const { return commutator(b * odd(l), odd(m)); }
    Expression triple(int l, int m, int n) const { return commutator(b * odd(l), commutator(b * odd(m), even(n))); }
};

StageOneBlocks blocks() { return {beta(), ops::omega_o(), ops::W(), ops::D(), ops::omega_e()}; }

PhysicalReduction pauli_reduction(const Derivations& d) { return reduce_to_physical(d.pauli); }

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace

bool SuiteReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    std::size_t failed = 0;
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        if (!c.pass) ++failed;
    }
    return {{"suite", r.suite}, {"pass", r.pass()}, {"failed", failed}, {"checks", checks}};
}

Derivations derive_all(ReferenceCatalog catalog) {
    Derivations d;
    d.catalog = std::move(catalog);
    d.dirac = fw_run(build_dirac_hamiltonian());
    d.pauli = fw_run(build_dirac_pauli_hamiltonian(), FWOptions{6, 1});
    return d;
}

std::vector<std::pair<Rational, Rational>> tbmt_grid() {
    std::vector<std::pair<Rational, Rational>> out;
    for (Rational ge : {Rational(0), Rational(1), Rational(2), Rational(20023, 10000), Rational(3)})
        for (Rational gt : {Rational(0), Rational(1), Rational(2), Rational(3)}) out.emplace_back(ge, gt);
    return out;
}

std::vector<Check> check_dirac_orders(const Derivations& d) {
    std::vector<Check> out;
    for (int n = 1; n <= 6; ++n) {
        auto s = std::to_string(n);
        out.push_back(compare("Dirac H_FW order " + s, d.dirac.derived(n), d.catalog.at("dirac.order." + s)));
    }
    const auto& first = d.dirac.stages.front().split;
    for (int l = 1; l <= 4; ++l) {
        auto s = std::to_string(l);
        out.push_back(compare("first-stage odd slice " + s, first.odd_slice(l), d.catalog.at("dirac.stage1.odd." + s)));
    }
    for (int n = 0; n <= 2; ++n) {
        auto s = std::to_string(n);
        out.push_back(compare("first-stage even slice " + s, first.even_slice(n), d.catalog.at("dirac.stage1.even." + s)));
    }
    return out;
}

std::vector<Check> check_lemmas(const Derivations& d) {
    std::vector<Check> out;
    const auto& st = d.dirac.stages;
    if (st.size() < 3) {
        out.push_back({"at least three stages", false, std::to_string(st.size()) + " stages"});
        return out;
    }
    const auto& second = st[1].split;
    const auto& third = st[2].split;
    bool low = second.odd_slice(1).is_zero() && second.odd_slice(2).is_zero();
    out.push_back({"second-stage odd part vanishes at orders 1 and 2", low,
                   "lowest odd order " + (second.odd.is_zero() ? std::string("none") : std::to_string(second.odd.min_order()))});
    bool third_low = third.odd_slice(1).is_zero() && third.odd_slice(2).is_zero() && third.odd_slice(3).is_zero();
    bool third_four = !third.odd_slice(4).is_zero();
    out.push_back({"third-stage odd part starts at order 4", third_low && third_four,
                   "lowest odd order " + (third.odd.is_zero() ? std::string("none") : std::to_string(third.odd.min_order()))});
    out.push_back(compare("third-stage even part equals second-stage even part through order 6", third.even, second.even));
    for (const auto& c : d.dirac.checks) out.push_back({c.name, c.pass, c.detail});
    return out;
}

std::vector<Check> check_physical(const Derivations& d) {
    std::vector<Check> out;
    for (int n = 1; n <= 6; ++n) {
        auto s = std::to_string(n);
        out.push_back(compare("physical form order " + s, truncate_fields(d.dirac.derived(n)),
                              d.catalog.at("dirac.physical." + s)));
    }
    Expression h2 = d.dirac.derived(2);
    Expression scaled = eliminate_mass(truncate_fields(Rational(-3, 4) * mul(ops::xi2(), h2)));
    out.push_back(compare("order 4 is -3/4 |xi|^2 times order 2", truncate_fields(d.dirac.derived(4)), scaled));

    StageOneBlocks k = blocks();
    Expression o5 = Rational(1, 144) * forms::nested_commutator(k.b * k.om, 5, k.om) +
                    Rational(1, 2) * (k.pair(1, 3) + k.pair(2, 2) + k.pair(3, 1)) +
                    Rational(1, 2) * (k.triple(1, 1, 1) + k.triple(1, 2, 0) + k.triple(2, 1, 0));
    out.push_back(compare("order 5 collapses to 2 beta Omega_o^6", truncate_fields(o5), d.catalog.at("identity.order5_reduced")));
    Expression pairs6 = k.pair(1, 4) + k.pair(2, 3) + k.pair(3, 2) + k.pair(4, 1);
    Expression triples6;
    for (int l = 1; l <= 3; ++l)
        for (int m = 1; m <= 3; ++m) {
            int n = 4 - l - m;
            if (n >= 0 && n <= 2) triples6 += k.triple(l, m, n);
        }
    Expression o6 = Rational(1, 720) * forms::nested_commutator(k.b * k.om, 6, k.v) + Rational(1, 2) * pairs6 +
                    Rational(1, 2) * triples6;
    out.push_back(compare("order 6 aggregates to 5 c^4 |Pi|^4 W", truncate_fields(o6), d.catalog.at("identity.order6_reduced")));

    PhysicalReduction red = reduce_to_physical(d.dirac);
    out.push_back(compare("orbital part", red.orbit, d.catalog.at("dirac.orbit")));
    out.push_back(compare("spin part", red.spin, d.catalog.at("dirac.spin")));
    out.push_back({"reduction residue is zero", red.complete(), std::to_string(red.residue.size()) + " terms"});
    return out;
}

std::vector<Check> check_omega_w(const ReferenceCatalog& cat) {
    Expression om = ops::omega_o(), w = ops::W();
    Expression om2 = mul(om, om);
    return {compare("Omega_o W Omega_o = -c^2 |Pi|^2 W", truncate_fields(mul(mul(om, w), om)),
                    cat.at("identity.omega_w_omega")),
            compare("Omega_o^2 W + W Omega_o^2 = 2 c^2 |Pi|^2 W", truncate_fields(mul(om2, w) + mul(w, om2)),
                    cat.at("identity.omega2_w_anticommutator"))};
}

std::vector<Check> check_order_identities(const ReferenceCatalog& cat) {
    StageOneBlocks k = blocks();
    std::vector<Check> out;
    Expression o4 = Rational(1, 24) * commutator(commutator(k.om, k.w), k.om) - Rational(4, 3) * commutator(k.d, power(k.om, 3));
    out.push_back(compare("order 4 split", o4, cat.at("identity.order4_split")));
    out.push_back(compare("order 4 reduced", truncate_fields(o4), cat.at("identity.order4_reduced")));
    out.push_back(compare("order 5 nested", forms::nested_commutator(k.b * k.om, 5, k.om), cat.at("identity.order5_nested")));
    out.push_back(compare("order 5 pairs", k.pair(1, 3) + k.pair(2, 2) + k.pair(3, 1), cat.at("identity.order5_pairs")));
    Expression t5 = k.triple(1, 1, 1) + k.triple(1, 2, 0) + k.triple(2, 1, 0);
    Check exact5 = compare("order 5 triples (exact)", t5, cat.at("identity.order5_triples"));
    out.push_back(compare("order 5 triples (linear in fields)", truncate_fields(t5),
                          truncate_fields(cat.at("identity.order5_triples"))));
    out.back().detail += "; exact " + exact5.detail;
    out.push_back(compare("order 6 pair (1,4)", k.pair(1, 4), cat.at("identity.order6_pair_1_4")));
    out.push_back(compare("order 6 pair (4,1)", k.pair(4, 1), cat.at("identity.order6_pair_1_4")));
    out.push_back(compare("order 6 pair (2,3)", k.pair(2, 3), cat.at("identity.order6_pair_2_3")));
    out.push_back(compare("order 6 pair (3,2)", k.pair(3, 2), cat.at("identity.order6_pair_2_3")));
    out.push_back(compare("order 6 nested", forms::nested_commutator(k.b * k.om, 6, k.v), cat.at("identity.order6_nested")));
    out.push_back(compare("order 6 triple (1,3,0)", k.triple(1, 3, 0), cat.at("identity.order6_triple_1_3_0")));
    out.push_back(compare("order 6 triple (2,2,0)", k.triple(2, 2, 0), cat.at("identity.order6_triple_2_2_0")));
    out.push_back(compare("order 6 triple (1,2,1)", k.triple(1, 2, 1), cat.at("identity.order6_triple_1_2_1")));
    out.push_back(compare("order 6 triple (2,1,1)", k.triple(2, 1, 1), cat.at("identity.order6_triple_2_1_1")));
    out.push_back(compare("order 6 triple (1,1,2)", k.triple(1, 1, 2), cat.at("identity.order6_triple_1_1_2")));
    out.push_back(compare("order 6 nested reduced", truncate_fields(forms::nested_commutator(k.b * k.om, 6, k.v)),
                          cat.at("identity.order6_nested_reduced")));
    out.push_back(compare("order 6 pairs reduced",
                          truncate_fields(k.pair(1, 4) + k.pair(2, 3) + k.pair(3, 2) + k.pair(4, 1)),
                          cat.at("identity.order6_pairs_reduced")));
    Expression t6;
    for (int l = 1; l <= 3; ++l)
        for (int m = 1; m <= 3; ++m) {
            int n = 4 - l - m;
            if (n >= 0 && n <= 2) t6 += k.triple(l, m, n);
        }
    out.push_back(compare("order 6 triples reduced", truncate_fields(t6), cat.at("identity.order6_triples_reduced")));
    out.push_back(compare("W^f chain", truncate_fields(ops::W_f()), cat.at("pauli.wf")));
    out.push_back(compare("{Omega_o, Omega_o^f}", forms::odd_anticommutator(), cat.at("pauli.odd_anticommutator")));
    return out;
}

std::vector<Check> check_pauli_orders(const Derivations& d) {
    std::vector<Check> out;
    for (int n = 1; n <= 6; ++n) {
        auto s = std::to_string(n);
        out.push_back(compare("Dirac-Pauli H_FW order " + s, d.pauli.derived(n), d.catalog.at("pauli.order." + s)));
    }
    out.push_back({"Dirac-Pauli stage checks", d.pauli.all_checks_pass(), std::to_string(d.pauli.checks.size()) + " checks"});
    return out;
}

std::vector<Check> check_pauli_spin(const Derivations& d) {
    std::vector<Check> out;
    PhysicalReduction red = pauli_reduction(d);
    PauliExtras ex = pauli_extra_terms(red.spin);
    out.push_back(compare("H_FW1 closed form", ex.fw1, d.catalog.at("pauli.fw1")));
    out.push_back(compare("H_FW2 closed form with 1 - |xi|^2/2 + 3|xi|^4/8", ex.fw2, d.catalog.at("pauli.fw2")));
    out.push_back(compare("remaining spin part is the Dirac one", red.spin - ex.fw1 - ex.fw2, d.catalog.at("dirac.spin")));
    out.push_back({"Dirac-Pauli reduction residue is zero", red.complete() && ex.residue.is_zero(),
                   std::to_string(red.residue.size() + ex.residue.size()) + " terms"});

    ParticleParams two{1, 1, 1, 2, 2};
    FWRun at_two = fw_run(build_dirac_pauli_hamiltonian(two), FWOptions{6, 1});
    PauliExtras ex_two = pauli_extra_terms(reduce_to_physical(at_two).spin);
    out.push_back({"H_FW1 vanishes at g_e = g_et = 2 (symbolic run)", ex_two.fw1.is_zero(), diff_detail(ex_two.fw1)});
    std::vector<std::string> errors;
    SpinPolys p1 = spin_polynomials(ex.fw1, two, 5, &errors);
    bool all_zero = errors.empty();
    for (const auto& [ch, poly] : p1) all_zero = all_zero && poly.is_zero();
    out.push_back({"H_FW1 vanishes at g_e = g_et = 2 (substituted moments)", all_zero,
                   std::to_string(p1.size()) + " channels, " + std::to_string(errors.size()) + " errors"});
    return out;
}

std::vector<Check> check_tbmt_grid(const Derivations& d) {
    std::vector<Check> out;
    PhysicalReduction red = pauli_reduction(d);
    PauliExtras ex = pauli_extra_terms(red.spin);
    Expression dirac_spin = red.spin - ex.fw1 - ex.fw2;
    auto one = [&](const std::string& label, const ParticleParams& p) {
        TbmtMatch m = match_tbmt(dirac_spin, ex.fw1, ex.fw2, p, 5);
        std::ostringstream os;
        os << m.fw.size() << " channels, " << m.mismatches.size() << " mismatches, " << m.errors.size() << " errors";
        if (!m.mismatches.empty()) {
            const auto& x = m.mismatches.front();
            os << "; first " << x.channel.name() << " beta^(" << x.monomial[0] << "," << x.monomial[1] << ","
               << x.monomial[2] << ") fw " << rational_str(x.fw) << " tbmt " << rational_str(x.tbmt);
        }
        out.push_back({label, m.pass(), os.str()});
    };
    for (const auto& [ge, gt] : tbmt_grid())
        one("spin Hamiltonian vs TBMT through beta^5, g_e=" + rational_str(ge) + " g_et=" + rational_str(gt),
            ParticleParams{1, 1, 1, ge, gt});
    one("spin Hamiltonian vs TBMT through beta^5, electron (etilde = 0, g_e = 20023/10000)",
        ParticleParams{1, 1, 0, Rational(20023, 10000), 2});
    return out;
}

std::vector<Check> check_series() {
    std::vector<Check> out;
    for (const auto& c : series_check()) {
        std::string detail = "through degree " + std::to_string(c.through);
        if (!c.pass()) detail += ", first mismatch at degree " + std::to_string(c.mismatch);
        out.push_back({c.name, c.pass(), detail});
    }
    return out;
}

SuiteReport run_suite(const std::string& name, const Derivations& d) {
    SuiteReport r{name, {}};
    bool all = name == "all";
    if (all || name == "fw") {
        r.append(check_dirac_orders(d));
        r.append(check_lemmas(d));
        r.append(check_physical(d));
    }
    if (all || name == "identities") {
        r.append(check_omega_w(d.catalog));
        r.append(check_order_identities(d.catalog));
    }
    if (all || name == "pauli") {
        r.append(check_pauli_orders(d));
        r.append(check_pauli_spin(d));
        r.append(check_tbmt_grid(d));
    }
    if (all || name == "series") r.append(check_series());
    if (r.checks.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
    return r;
}

}  // namespace fwdyon
