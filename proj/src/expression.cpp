#include "fwdyon/expression.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fwdyon {

// ---------------------------------------------------------------- atoms

namespace atoms {

namespace {
int check(int i) {
    if (i < 1 || i > 3) throw std::out_of_range("spatial index must be 1..3");
    return i - 1;
}
}  // namespace

Atom E(int i) { return static_cast<Atom>(0 + check(i)); }
Atom B(int i) { return static_cast<Atom>(3 + check(i)); }
Atom Pi(int i) { return static_cast<Atom>(7 + check(i)); }

bool is_field(Atom a) { return static_cast<int>(a) < 6; }
bool is_pi(Atom a) { return static_cast<int>(a) >= 7; }

int index(Atom a) {
    int v = static_cast<int>(a);
    if (v < 6) return v % 3 + 1;
    if (v == 6) return 0;
    return v - 6;
}

std::string name(Atom a) {
    static const char* names[] = {"E1", "E2", "E3", "B1", "B2", "B3", "V", "Pi1", "Pi2", "Pi3"};
    return names[static_cast<int>(a)];
}

Atom parse(const std::string& s) {
    for (int k = 0; k < 10; ++k)
        if (name(static_cast<Atom>(k)) == s) return static_cast<Atom>(k);
    throw std::invalid_argument("unknown atom: " + s);
}

}  // namespace atoms

int field_degree(const Word& w) {
    int n = 0;
    for (Atom a : w)
        if (atoms::is_field(a)) ++n;
    return n;
}

// ---------------------------------------------------------------- dimensions

DimensionVector& DimensionVector::operator+=(const DimensionVector& o) {
    for (int k = 0; k < kNumSyms; ++k) exp[k] += o.exp[k];
    return *this;
}

bool DimensionVector::is_zero() const {
    return std::all_of(exp.begin(), exp.end(), [](int v) { return v == 0; });
}

const char* DimensionVector::name(Sym s) {
    static const char* names[] = {"hbar", "c", "m", "Eg", "e", "etilde", "mu_pp", "d_pp"};
    return names[static_cast<int>(s)];
}

DimensionVector dim(std::initializer_list<std::pair<Sym, int>> powers) {
    DimensionVector d;
    for (auto [s, n] : powers) d[s] += n;
    return d;
}

// ---------------------------------------------------------------- ordering

namespace {

/// Result of bringing a field-free word into canonical order: a small integer
/// coefficient times i^ipow times symbols, extra field atoms, sorted word.
struct Piece {
    long coeff;
    std::uint8_t ipow;
    DimensionVector delta;
    Word fields;
    Word word;
};

using Pieces = std::vector<Piece>;

std::string key_of(const Word& w) {
    return std::string(reinterpret_cast<const char*>(w.data()), w.size());
}

int levi_civita(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

/// [y, x] for atoms y > x drawn from {V, Pi}.
Pieces atom_commutator(Atom y, Atom x, const Word& rest) {
    Pieces out;
    int a = atoms::index(y);
    if (x == Atom::V) {
        // [Pi_a, V] = i hbar (e E_a + etilde B_a)
        out.push_back({1, 1, dim({{Sym::hbar, 1}, {Sym::e, 1}}), {atoms::E(a)}, rest});
        out.push_back({1, 1, dim({{Sym::hbar, 1}, {Sym::etilde, 1}}), {atoms::B(a)}, rest});
        return out;
    }
    // [Pi_a, Pi_b] = (i hbar / c) eps_abk (e B_k - etilde E_k)
    int b = atoms::index(x);
    int k = 6 - a - b;
    int eps = levi_civita(a, b, k);
    out.push_back({eps, 1, dim({{Sym::hbar, 1}, {Sym::c, -1}, {Sym::e, 1}}), {atoms::B(k)}, rest});
    out.push_back({-eps, 1, dim({{Sym::hbar, 1}, {Sym::c, -1}, {Sym::etilde, 1}}), {atoms::E(k)}, rest});
    return out;
}

struct OrderingCache {
    std::unordered_map<std::string, Pieces> ordered;
    std::unordered_map<std::string, Pieces> inserted;
};

OrderingCache& cache() {
    thread_local OrderingCache c;
    return c;
}

Piece combine(const Piece& p, const Piece& q) {
    Piece r{p.coeff * q.coeff, static_cast<std::uint8_t>((p.ipow + q.ipow) % 4), p.delta + q.delta,
            p.fields, q.word};
    r.fields.insert(r.fields.end(), q.fields.begin(), q.fields.end());
    return r;
}

Pieces merge(Pieces in) {
    struct K {
        DimensionVector d;
        bool imag;
        Word fields;
        Word word;
        auto operator<=>(const K&) const = default;
    };
    std::map<K, long> acc;
    for (auto& p : in) {
        std::sort(p.fields.begin(), p.fields.end());
        long c = p.coeff;
        if (p.ipow >= 2) c = -c;
        acc[K{p.delta, (p.ipow % 2) == 1, std::move(p.fields), std::move(p.word)}] += c;
    }
    Pieces out;
    for (auto& [k, c] : acc)
        if (c != 0) out.push_back({c, static_cast<std::uint8_t>(k.imag ? 1 : 0), k.d, k.fields, k.word});
    return out;
}

const Pieces& insert_sorted(const Word& u, Atom x);

const Pieces& insert_sorted(const Word& u, Atom x) {
    Word full = u;
    full.push_back(x);
    auto key = key_of(full);
    auto& c = cache().inserted;
    if (auto it = c.find(key); it != c.end()) return it->second;

    Pieces out;
    if (u.empty() || u.back() <= x) {
        out.push_back({1, 0, {}, {}, full});
    } else {
        Atom y = u.back();
        Word head(u.begin(), u.end() - 1);
        for (Piece p : insert_sorted(head, x)) {
            p.word.push_back(y);
            out.push_back(std::move(p));
        }
        for (auto& p : atom_commutator(y, x, head)) out.push_back(std::move(p));
        out = merge(std::move(out));
    }
    return c.emplace(key, std::move(out)).first->second;
}

/// Canonical form of a word containing only V and Pi atoms.
const Pieces& ordered(const Word& w) {
    auto key = key_of(w);
    auto& c = cache().ordered;
    if (auto it = c.find(key); it != c.end()) return it->second;

    Pieces out;
    if (std::is_sorted(w.begin(), w.end())) {
        out.push_back({1, 0, {}, {}, w});
    } else {
        Word head(w.begin(), w.end() - 1);
        Atom x = w.back();
        for (const Piece& p : ordered(head))
            for (const Piece& q : insert_sorted(p.word, x)) out.push_back(combine(p, q));
        out = merge(std::move(out));
    }
    return c.emplace(key, std::move(out)).first->second;
}

/// Fold the basis phase into the coefficient sign.
void accumulate(Expression::Map& acc, DimensionVector d, BasisElement m, Word word,
                const Rational& q) {
    TermKey k{d, m.left, m.right, (m.phase % 2) == 1, std::move(word)};
    auto& slot = acc[k];
    if (m.phase >= 2)
        slot -= q;
    else
        slot += q;
}

void prune(Expression::Map& m) {
    std::erase_if(m, [](const auto& kv) { return sgn(kv.second) == 0; });
}

/// Split a canonical word into its field prefix and V/Pi suffix.
std::pair<Word, Word> split_fields(const Word& w) {
    auto it = std::find_if(w.begin(), w.end(), [](Atom a) { return !atoms::is_field(a); });
    return {Word(w.begin(), it), Word(it, w.end())};
}

}  // namespace

std::size_t ordering_cache_size() { return cache().ordered.size() + cache().inserted.size(); }

// ---------------------------------------------------------------- Expression

Expression Expression::scalar(const Rational& q) { return symbol({}, q); }

Expression Expression::symbol(const DimensionVector& d, const Rational& q) {
    Expression e;
    if (sgn(q) != 0) e.terms_[TermKey{d, 0, 0, false, {}}] = q;
    return e;
}

Expression Expression::matrix(BasisElement b) {
    Expression e;
    e.add_term({1, {}, b, {}});
    return e;
}

Expression Expression::atom(Atom a) {
    Expression e;
    e.terms_[TermKey{{}, 0, 0, false, {a}}] = 1;
    return e;
}

std::vector<Term> Expression::term_list() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, q] : terms_) out.push_back({q, k.dim, k.mat(), k.word});
    return out;
}

void Expression::add_canonical(const TermKey& k, const Rational& q) {
    auto& slot = terms_[k];
    slot += q;
    if (sgn(slot) == 0) terms_.erase(k);
}

void Expression::add_term(const Term& t) {
    if (sgn(t.coeff) == 0) return;
    Word fields, rest;
    for (Atom a : t.word) (atoms::is_field(a) ? fields : rest).push_back(a);
    Map acc;
    for (const Piece& p : ordered(rest)) {
        Word w = fields;
        w.insert(w.end(), p.fields.begin(), p.fields.end());
        std::sort(w.begin(), w.end());
        w.insert(w.end(), p.word.begin(), p.word.end());
        BasisElement m = t.mat;
        m.phase = static_cast<std::uint8_t>((m.phase + p.ipow) % 4);
        accumulate(acc, t.dim + p.delta, m, std::move(w), t.coeff * p.coeff);
    }
    for (const auto& [k, q] : acc) add_canonical(k, q);
}

Expression& Expression::operator+=(const Expression& o) {
    for (const auto& [k, q] : o.terms_) add_canonical(k, q);
    return *this;
}

Expression& Expression::operator-=(const Expression& o) {
    for (const auto& [k, q] : o.terms_) add_canonical(k, -q);
    return *this;
}

Expression Expression::operator-() const {
    Expression r = *this;
    for (auto& [k, q] : r.terms_) q = -q;
    return r;
}

Expression operator*(const Rational& q, const Expression& e) {
    if (sgn(q) == 0) return {};
    Expression r = e;
    for (auto& [k, v] : r.terms_) v *= q;
    return r;
}

Expression operator*(const Expression& a, const Expression& b) { return mul(a, b); }

Expression Expression::times_i() const {
    Expression r;
    for (const auto& [k, q] : terms_) {
        BasisElement m = k.mat();
        m.phase = static_cast<std::uint8_t>((m.phase + 1) % 4);
        accumulate(r.terms_, k.dim, m, k.word, q);
    }
    prune(r.terms_);
    return r;
}

Expression Expression::times_symbol(const DimensionVector& d) const {
    Expression r;
    for (const auto& [k, q] : terms_) {
        TermKey nk = k;
        nk.dim += d;
        r.terms_[nk] = q;
    }
    return r;
}

int Expression::min_order() const {
    if (terms_.empty()) return 0;
    int m = INT_MAX;
    for (const auto& [k, q] : terms_) m = std::min(m, k.dim.order());
    return m;
}

int Expression::max_order() const {
    if (terms_.empty()) return 0;
    int m = INT_MIN;
    for (const auto& [k, q] : terms_) m = std::max(m, k.dim.order());
    return m;
}

// ---------------------------------------------------------------- ring operations

Expression mul(const Expression& a, const Expression& b, const Truncation& t) {
    struct Split {
        const TermKey* key;
        const Rational* q;
        Word fields;
        Word rest;
    };
    auto prepare = [](const Expression& e) {
        std::vector<Split> v;
        v.reserve(e.size());
        for (const auto& [k, q] : e.terms()) {
            auto [f, r] = split_fields(k.word);
            v.push_back({&k, &q, std::move(f), std::move(r)});
        }
        return v;
    };
    auto sa = prepare(a);
    auto sb = prepare(b);

    Expression::Map acc;
    Word rest;
    Word w;
    for (const auto& x : sa) {
        for (const auto& y : sb) {
            DimensionVector d = x.key->dim + y.key->dim;
            if (d.order() > t.max_order) continue;
            int base_fields = static_cast<int>(x.fields.size() + y.fields.size());
            if (base_fields > t.max_field_degree) continue;
            BasisElement m = basis_mul(x.key->mat(), y.key->mat());
            Rational q = *x.q * *y.q;
            rest = x.rest;
            rest.insert(rest.end(), y.rest.begin(), y.rest.end());
            for (const Piece& p : ordered(rest)) {
                if (base_fields + static_cast<int>(p.fields.size()) > t.max_field_degree) continue;
                w = x.fields;
                w.insert(w.end(), y.fields.begin(), y.fields.end());
                w.insert(w.end(), p.fields.begin(), p.fields.end());
                std::sort(w.begin(), w.end());
                w.insert(w.end(), p.word.begin(), p.word.end());
                BasisElement mp = m;
                mp.phase = static_cast<std::uint8_t>((m.phase + p.ipow) % 4);
                if (p.coeff == 1)
                    accumulate(acc, d + p.delta, mp, w, q);
                else
                    accumulate(acc, d + p.delta, mp, w, q * p.coeff);
            }
        }
    }
    prune(acc);
    Expression out;
    for (auto& [k, q] : acc) out.add_canonical(k, q);
    return out;
}

Expression commutator(const Expression& a, const Expression& b, const Truncation& t) {
    return mul(a, b, t) - mul(b, a, t);
}

Expression anticommutator(const Expression& a, const Expression& b, const Truncation& t) {
    return mul(a, b, t) + mul(b, a, t);
}

Expression power(const Expression& a, int n, const Truncation& t) {
    if (n < 0) throw std::invalid_argument("negative power");
    Expression r = Expression::scalar(1);
    for (int k = 0; k < n; ++k) r = mul(r, a, t);
    return r;
}

Expression normal_order(const std::vector<Term>& terms) {
    Expression out;
    for (const auto& t : terms) out.add_term(t);
    return out;
}

Expression normal_order(const Expression& e) { return normal_order(e.term_list()); }

Expression truncate_fields(const Expression& e, int max_degree) {
    return filter(e, [&](const TermKey& k) { return field_degree(k.word) <= max_degree; });
}

Expression truncate_order(const Expression& e, int max_order) {
    return filter(e, [&](const TermKey& k) { return k.dim.order() <= max_order; });
}

Expression truncate(const Expression& e, const Truncation& t) {
    return filter(e, [&](const TermKey& k) { return t.keeps(k.dim, k.word); });
}

Expression hermitian_conjugate(const Expression& e) {
    Expression out;
    for (const auto& [k, q] : e.terms()) {
        Word w(k.word.rbegin(), k.word.rend());
        out.add_term({q, k.dim, basis_adjoint(k.mat()), std::move(w)});
    }
    return out;
}

bool is_hermitian(const Expression& e, const Truncation& t) {
    return truncate(hermitian_conjugate(e), t) == truncate(e, t);
}

bool is_anti_hermitian(const Expression& e, const Truncation& t) {
    return truncate(hermitian_conjugate(e), t) == -truncate(e, t);
}

Expression order_slice(const Expression& e, int order) {
    return filter(e, [&](const TermKey& k) { return k.dim.order() == order; });
}

Expression even_part(const Expression& e) {
    return filter(e, [](const TermKey& k) { return beta_grade(k.mat()) == Grade::Even; });
}

Expression odd_part(const Expression& e) {
    return filter(e, [](const TermKey& k) { return beta_grade(k.mat()) == Grade::Odd; });
}

// ---------------------------------------------------------------- serialization

nlohmann::json to_json(const Expression& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, q] : e.terms()) {
        nlohmann::json d = nlohmann::json::object();
        for (int s = 0; s < kNumSyms; ++s)
            if (k.dim.exp[s] != 0) d[DimensionVector::name(static_cast<Sym>(s))] = k.dim.exp[s];
        nlohmann::json w = nlohmann::json::array();
        for (Atom a : k.word) w.push_back(atoms::name(a));
        terms.push_back({{"coeff", q.get_str()},
                         {"dim", d},
                         {"mat", {{"left", k.left}, {"right", k.right}, {"phase", phase_string(k.imag ? 1 : 0)}}},
                         {"word", w}});
    }
    return {{"terms", terms}};
}

Expression expression_from_json(const nlohmann::json& j) {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        Term term;
        term.coeff = Rational(t.at("coeff").get<std::string>());
        term.coeff.canonicalize();
        for (const auto& [name, n] : t.at("dim").items()) {
            bool found = false;
            for (int s = 0; s < kNumSyms; ++s)
                if (name == DimensionVector::name(static_cast<Sym>(s))) {
                    term.dim.exp[s] = n.get<int>();
                    found = true;
                }
            if (!found) throw std::invalid_argument("unknown dimension symbol: " + name);
        }
        const auto& m = t.at("mat");
        term.mat = {m.at("left").get<std::uint8_t>(), m.at("right").get<std::uint8_t>(),
                    parse_phase(m.at("phase").get<std::string>())};
        if (term.mat.left > 3 || term.mat.right > 3) throw std::invalid_argument("basis index out of range");
        for (const auto& a : t.at("word")) term.word.push_back(atoms::parse(a.get<std::string>()));
        terms.push_back(std::move(term));
    }
    return normal_order(terms);
}

namespace {

/// LaTeX alias for the phase-free element (l, r) and the power of i such that
/// (l, r) = i^shift * alias.
std::pair<std::string, int> latex_alias(int l, int r) {
    static const char* ax[] = {"", "x", "y", "z"};
    std::string s = r ? ax[r] : "";
    switch (l) {
        case 0: return {r ? "\\Sigma_" + s : "", 0};
        case 1: return {r ? "\\check{\\alpha}_" + s : "\\rho_1", 0};
        case 2: return {r ? "\\check{\\gamma}_" + s : "\\check{\\eta}", r ? 3 : 1};
        default: return {r ? "\\check{\\beta}\\Sigma_" + s : "\\check{\\beta}", 0};
    }
}

std::string latex_atom(Atom a) {
    static const char* ax[] = {"", "x", "y", "z"};
    if (a == Atom::V) return "V";
    std::string base = atoms::is_field(a) ? (static_cast<int>(a) < 3 ? "E" : "B") : "\\Pi";
    return base + "_" + ax[atoms::index(a)];
}

}  // namespace

std::string to_latex(const Expression& e) {
    if (e.is_zero()) return "0";
    static const char* sym[] = {"\\hbar", "c", "m", "E_g", "e", "\\tilde{e}", "\\mu''", "d''"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, q0] : e.terms()) {
        auto [alias, shift] = latex_alias(k.left, k.right);
        int ipow = ((k.imag ? 1 : 0) + shift) % 4;
        Rational q = q0;
        if (ipow >= 2) q = -q;
        bool neg = sgn(q) < 0;
        if (neg) q = -q;
        os << (neg ? " - " : (first ? "" : " + "));
        first = false;
        std::string body;
        if (ipow % 2) body += "i";
        for (int s = 0; s < kNumSyms; ++s) {
            int n = k.dim.exp[s];
            if (n == 0) continue;
            body += (body.empty() ? "" : " ") + std::string(sym[s]);
            if (n != 1) body += "^{" + std::to_string(n) + "}";
        }
        if (!alias.empty()) body += (body.empty() ? "" : " ") + alias;
        for (Atom a : k.word) body += (body.empty() ? "" : " ") + latex_atom(a);
        bool unit = q == 1;
        if (!unit) {
            if (q.get_den() == 1)
                os << q.get_num().get_str();
            else
                os << "\\frac{" << q.get_num().get_str() << "}{" << q.get_den().get_str() << "}";
        }
        if (body.empty())
            os << (unit ? "1" : "");
        else
            os << (unit ? "" : " ") << body;
    }
    return os.str();
}

}  // namespace fwdyon
