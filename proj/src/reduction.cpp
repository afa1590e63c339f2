#include "fwdyon/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fwdyon {

// ---------------------------------------------------------------- classification

namespace {

bool has_potential(const Word& w) { return std::find(w.begin(), w.end(), Atom::V) != w.end(); }

bool is_anomalous(const TermKey& k) { return k.dim[Sym::mu] != 0 || k.dim[Sym::d] != 0; }

}  // namespace

Expression symmetrized_word(const Word& w) {
    Word perm = w;
    std::sort(perm.begin(), perm.end());
    std::vector<Term> terms;
    do terms.push_back({1, {}, basis::identity(), perm});
    while (std::next_permutation(perm.begin(), perm.end()));
    return Rational(1, static_cast<long>(terms.size())) * normal_order(terms);
}

SymmetricSplit symmetric_split(const Expression& e) {
    SymmetricSplit out;
    Expression t = truncate_fields(e);
    for (const auto& [k, q] : t.terms()) {
        if (field_degree(k.word) != 0) {
            out.field_linear.add_canonical(k, q);
            continue;
        }
        out.field_free.add_canonical(k, q);
        Expression corr = filter(truncate_fields(symmetrized_word(k.word)),
                                 [](const TermKey& sk) { return field_degree(sk.word) != 0; });
        out.field_linear -= mul(Expression::symbol(k.dim, q) * Expression::matrix(k.mat()), corr);
    }
    return out;
}

PhysicalReduction reduce_to_physical(const std::vector<FWOrderReport>& reports, const Expression& zeroth) {
    Expression all = truncate_fields(zeroth);
    for (const auto& r : reports) all += truncate_fields(r.derived);
    SymmetricSplit split = symmetric_split(all);
    PhysicalReduction out;
    for (const auto* part : {&split.field_free, &split.field_linear})
    for (const auto& [k, q] : part->terms()) {
        int f = field_degree(k.word);
        bool v = has_potential(k.word);
        if (f == 0 && (!v || k.word.size() == 1))
            out.orbit.add_canonical(k, q);
        else if (f == 1 && !v)
            out.spin.add_canonical(k, q);
        else
            out.residue.add_canonical(k, q);
    }
    return out;
}

PhysicalReduction reduce_to_physical(const FWRun& run) {
    const auto& last = run.stages.back().split;
    Expression zeroth = last.rest + order_slice(last.even, 0);
    std::vector<FWOrderReport> reports;
    for (int n = 1; n <= run.options.target_order; ++n) reports.push_back({n, run.derived(n), {}, {}});
    return reduce_to_physical(reports, zeroth);
}

PauliExtras pauli_extra_terms(const Expression& spin_part) {
    PauliExtras out;
    for (const auto& [k, q] : spin_part.terms()) {
        if (!is_anomalous(k)) continue;
        Word fields;
        for (Atom a : k.word)
            if (atoms::is_field(a)) fields.push_back(a);
        int mu = k.dim[Sym::mu], d = k.dim[Sym::d];
        bool single = fields.size() == 1 && mu + d == 1 && mu >= 0 && d >= 0;
        if (!single) {
            out.residue.add_canonical(k, q);
            continue;
        }
        bool electric = static_cast<int>(fields[0]) < 3;
        bool even_coupling = (mu == 1) != electric;  // mu'' B or d'' E
        (even_coupling ? out.fw1 : out.fw2).add_canonical(k, q);
    }
    return out;
}

PauliExtras pauli_extra_terms(const std::vector<FWOrderReport>& reports) {
    Expression all;
    for (const auto& r : reports) all += truncate_fields(r.derived);
    return pauli_extra_terms(all);
}

// ---------------------------------------------------------------- BetaPoly

BetaPoly BetaPoly::constant(int max_degree, const Rational& q) {
    BetaPoly p(max_degree);
    p.add({0, 0, 0}, q);
    return p;
}

BetaPoly BetaPoly::component(int max_degree, int i) {
    BetaPoly p(max_degree);
    Monomial m{};
    m[i - 1] = 1;
    p.add(m, 1);
    return p;
}

BetaPoly BetaPoly::radial(const SeriesPoly& s) {
    int deg = s.max_degree();
    BetaPoly r(deg);
    BetaPoly b2(deg);
    for (int i = 1; i <= 3; ++i) b2 += component(deg, i) * component(deg, i);
    BetaPoly pw = constant(deg, 1);
    for (int k = 0; k <= deg; ++k) {
        if (k % 2 == 1) {
            if (sgn(s.coeff(k)) != 0) throw std::invalid_argument("radial series must be even");
            continue;
        }
        r += s.coeff(k) * pw;
        pw = pw * b2;
    }
    return r;
}

Rational BetaPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BetaPoly::add(const Monomial& m, const Rational& q) {
    if (m[0] + m[1] + m[2] > max_degree_ || sgn(q) == 0) return;
    auto& slot = terms_[m];
    slot += q;
    if (sgn(slot) == 0) terms_.erase(m);
}

BetaPoly& BetaPoly::operator+=(const BetaPoly& o) {
    max_degree_ = std::min(max_degree_, o.max_degree_);
    std::erase_if(terms_, [&](const auto& kv) { return kv.first[0] + kv.first[1] + kv.first[2] > max_degree_; });
    for (const auto& [m, q] : o.terms_) add(m, q);
    return *this;
}

BetaPoly& BetaPoly::operator-=(const BetaPoly& o) { return *this += Rational(-1) * o; }

BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
    BetaPoly r(std::min(a.max_degree_, b.max_degree_));
    for (const auto& [ma, qa] : a.terms_)
        for (const auto& [mb, qb] : b.terms_) r.add({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, qa * qb);
    return r;
}

BetaPoly operator*(const Rational& q, BetaPoly a) {
    if (sgn(q) == 0) return BetaPoly(a.max_degree_);
    for (auto& [m, v] : a.terms_) v *= q;
    return a;
}

std::string BetaPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : terms_) {
        os << (first ? "" : " + ") << q.get_str();
        first = false;
        for (int i = 0; i < 3; ++i)
            if (m[i]) os << " b" << i + 1 << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    }
    return os.str();
}

std::string SpinChannel::name() const {
    std::ostringstream os;
    os << (charge == Sym::e ? "e" : "etilde") << " " << to_string(BasisElement{left, right, static_cast<std::uint8_t>(imag)})
       << " " << atoms::name(field);
    return os.str();
}

// ---------------------------------------------------------------- TBMT comparison

namespace {

Rational gyro_factor(const Rational& g) { return g / 2 - 1; }

BetaPoly gamma_power(int k, int through) { return BetaPoly::radial(gamma_of_beta(through).pow(k)); }

}  // namespace

SpinPolys spin_polynomials(const Expression& h, const ParticleParams& p, int through, std::vector<std::string>* errors) {
    auto fail = [&](const TermKey& k, const std::string& why) {
        if (errors) errors->push_back(why + ": " + to_latex(filter(h, [&](const TermKey& o) { return o == k; })));
    };
    SpinPolys out;
    std::map<int, BetaPoly> gamma_cache;
    for (const auto& [k, q0] : h.terms()) {
        DimensionVector d = k.dim;
        Rational q = q0;
        int mu = d[Sym::mu], dd = d[Sym::d];
        if (mu < 0 || dd < 0) {
            fail(k, "negative anomalous power");
            continue;
        }
        for (int j = 0; j < mu; ++j) q *= gyro_factor(p.g_e);
        for (int j = 0; j < dd; ++j) q *= gyro_factor(p.g_et);
        d[Sym::e] += mu;
        d[Sym::etilde] += dd;
        d[Sym::hbar] += mu + dd;
        d[Sym::c] += mu + dd;
        d[Sym::mu] = d[Sym::d] = 0;
        if ((p.e == 0 && d[Sym::e] != 0) || (p.etilde == 0 && d[Sym::etilde] != 0) || sgn(q) == 0) continue;

        Word fields;
        BetaPoly::Monomial mono{};
        int npi = 0;
        bool bad = false;
        for (Atom a : k.word) {
            if (atoms::is_field(a))
                fields.push_back(a);
            else if (atoms::is_pi(a)) {
                ++mono[atoms::index(a) - 1];
                ++npi;
            } else
                bad = true;
        }
        if (bad || fields.size() != 1) {
            fail(k, "not linear in a single field");
            continue;
        }
        d[Sym::Eg] += npi;
        d[Sym::c] -= npi;
        for (int j = 0; j < npi; ++j) q /= 2;

        Sym charge = d[Sym::e] == 1 ? Sym::e : Sym::etilde;
        DimensionVector expect = dim({{Sym::hbar, 1}, {Sym::c, 1}, {Sym::Eg, -1}, {charge, 1}});
        if (d != expect) {
            fail(k, "unexpected dimensions");
            continue;
        }
        auto it = gamma_cache.find(npi);
        if (it == gamma_cache.end()) it = gamma_cache.emplace(npi, gamma_power(npi, through)).first;
        BetaPoly term(through);
        term.add(mono, q);
        SpinChannel ch{k.left, k.right, k.imag, fields[0], charge};
        auto [slot, fresh] = out.try_emplace(ch, through);
        slot->second += term * it->second;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

SpinPolys tbmt_polynomials(const ParticleParams& p, int through) {
    SpinPolys out;
    SeriesPoly one = SeriesPoly::constant(through, 1);
    SeriesPoly gamma = gamma_of_beta(through);
    BetaPoly inv_gamma = BetaPoly::radial(gamma.reciprocal());
    BetaPoly ratio = BetaPoly::radial(gamma * (one + gamma).reciprocal());
    auto constant = [&](const Rational& q) { return BetaPoly::constant(through, q); };
    auto b = [&](int i) { return BetaPoly::component(through, i); };

    auto add = [&](SpinChannel ch, const BetaPoly& poly) {
        auto [slot, fresh] = out.try_emplace(ch, through);
        slot->second += poly;
    };

    // H = -(charge) hbar c / E_g Sigma.F; per charge the field pair (lead, cross)
    // is (B, E) for e and (B~, E~) = (-E, B) for etilde.
    struct Sector {
        Sym charge;
        Rational g;
        bool present;
        Atom (*lead)(int);
        Rational lead_sign;
        Atom (*cross)(int);
    };
    const Sector sectors[] = {
        {Sym::e, p.g_e, p.e != 0, atoms::B, 1, atoms::E},
        {Sym::etilde, p.g_et, p.etilde != 0, atoms::E, -1, atoms::B},
    };
    for (const auto& s : sectors) {
        if (!s.present) continue;
        Rational a = gyro_factor(s.g);
        BetaPoly leading = constant(a) + inv_gamma;
        BetaPoly longitudinal = a * ratio;
        BetaPoly transverse = constant(s.g / 2) - ratio;
        for (int i = 1; i <= 3; ++i) {
            // -beta Sigma_i (leading) lead_i
            add({3, static_cast<std::uint8_t>(i), false, s.lead(i), s.charge}, Rational(-1) * s.lead_sign * leading);
            // +beta Sigma_i longitudinal beta_i beta_j lead_j
            for (int j = 1; j <= 3; ++j)
                add({3, static_cast<std::uint8_t>(i), false, s.lead(j), s.charge},
                    s.lead_sign * longitudinal * b(i) * b(j));
            // +Sigma_i transverse (beta x cross)_i
            int j = i % 3 + 1, k = j % 3 + 1;
            add({0, static_cast<std::uint8_t>(i), false, s.cross(k), s.charge}, transverse * b(j));
            add({0, static_cast<std::uint8_t>(i), false, s.cross(j), s.charge}, Rational(-1) * transverse * b(k));
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

TbmtMatch match_tbmt(const Expression& h_spin, const Expression& h_fw1, const Expression& h_fw2,
                     const ParticleParams& p, int through) {
    TbmtMatch m;
    m.through = through;
    m.fw = spin_polynomials(h_spin + h_fw1 + h_fw2, p, through, &m.errors);
    m.tbmt = tbmt_polynomials(p, through);
    std::set<SpinChannel> channels;
    for (const auto& [ch, poly] : m.fw) channels.insert(ch);
    for (const auto& [ch, poly] : m.tbmt) channels.insert(ch);
    for (const auto& ch : channels) {
        BetaPoly a = m.fw.count(ch) ? m.fw.at(ch) : BetaPoly(through);
        BetaPoly b = m.tbmt.count(ch) ? m.tbmt.at(ch) : BetaPoly(through);
        BetaPoly diff = a - b;
        for (const auto& [mono, q] : diff.terms()) m.mismatches.push_back({ch, mono, a.coeff(mono), b.coeff(mono)});
    }
    return m;
}

// ---------------------------------------------------------------- effective dipoles

std::pair<Vec3, Vec3> effective_dipoles(int order) {
    if (order != 1 && order != 4) throw std::invalid_argument("effective dipoles are defined at order 1 or 4");
    Expression beta = ops::mat(basis::beta());
    Vec3 xi = ops::xi(), mu_m = ops::mu_m(), mu_p = ops::mu_p();
    Expression intrinsic = Expression::scalar(1);
    Expression boosted = Expression::scalar(Rational(1, 2));
    if (order == 4) {
        Expression xi2 = ops::xi2(), xi4 = xi2 * xi2;
        intrinsic = Expression::scalar(1) - Rational(1, 2) * xi2 + Rational(3, 8) * xi4;
        boosted = Rational(1, 2) * (Expression::scalar(1) - Rational(3, 4) * xi2 + Rational(5, 8) * xi4);
    }
    Vec3 p = scale(beta * intrinsic, mu_p) + scale(boosted, cross(xi, mu_m));
    Vec3 m = scale(beta * intrinsic, mu_m) - scale(boosted, cross(xi, mu_p));
    for (auto& c : p) c = eliminate_mass(truncate_fields(c));
    for (auto& c : m) c = eliminate_mass(truncate_fields(c));
    return {p, m};
}

}  // namespace fwdyon
