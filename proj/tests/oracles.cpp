#include "oracles.hpp"

#include <algorithm>

namespace oracle {

using fwdyon::Atom;

CQ operator*(const CQ& a, const CQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CQ operator+(const CQ& a, const CQ& b) { return {a.re + b.re, a.im + b.im}; }

QMatrix qmatmul(const QMatrix& a, const QMatrix& b) {
    QMatrix r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CQ s;
            for (int k = 0; k < 4; ++k) s = s + a[4 * i + k] * b[4 * k + j];
            r[4 * i + j] = s;
        }
    return r;
}

QMatrix qscale(const QMatrix& a, const CQ& s) {
    QMatrix r;
    for (int k = 0; k < 16; ++k) r[k] = a[k] * s;
    return r;
}

QMatrix qadd(const QMatrix& a, const QMatrix& b) {
    QMatrix r;
    for (int k = 0; k < 16; ++k) r[k] = a[k] + b[k];
    return r;
}

bool qzero(const QMatrix& a) {
    return std::all_of(a.begin(), a.end(), [](const CQ& c) { return c.re == 0 && c.im == 0; });
}

namespace {

using P2 = std::array<CQ, 4>;

P2 pauli2(int k) {
    switch (k) {
        case 0: return {CQ{1, 0}, CQ{0, 0}, CQ{0, 0}, CQ{1, 0}};
        case 1: return {CQ{0, 0}, CQ{1, 0}, CQ{1, 0}, CQ{0, 0}};
        case 2: return {CQ{0, 0}, CQ{0, -1}, CQ{0, 1}, CQ{0, 0}};
        default: return {CQ{1, 0}, CQ{0, 0}, CQ{0, 0}, CQ{-1, 0}};
    }
}

CQ ipow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

}  // namespace

QMatrix dirac_matrix(int left, int right, int phase) {
    P2 l = pauli2(left), r = pauli2(right);
    QMatrix m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    m[4 * (2 * i + a) + (2 * j + b)] = l[2 * i + j] * r[2 * a + b] * ipow(phase);
    return m;
}

namespace {

bool is_field(Atom a) { return static_cast<int>(a) <= 5; }
int idx(Atom a) {
    int v = static_cast<int>(a);
    return v <= 5 ? v % 3 + 1 : v - 6;
}
Atom field_atom(char kind, int k) { return static_cast<Atom>((kind == 'E' ? 0 : 3) + k - 1); }

int eps(int a, int b, int c) {
    if (a == 1 && b == 2 && c == 3) return 1;
    if (a == 2 && b == 3 && c == 1) return 1;
    if (a == 3 && b == 1 && c == 2) return 1;
    if (a == 1 && b == 3 && c == 2) return -1;
    if (a == 3 && b == 2 && c == 1) return -1;
    if (a == 2 && b == 1 && c == 3) return -1;
    return 0;
}

struct Work {
    CQ coeff;
    Dims dims;
    fwdyon::Word word;
};

enum { HBAR = 0, C = 1, E = 4, ET = 5 };

void expand_into(Expanded& out, const QMatrix& m, Work w) {
    // rightmost adjacent pair out of canonical order
    int pos = -1;
    for (int i = static_cast<int>(w.word.size()) - 2; i >= 0; --i)
        if (w.word[i] > w.word[i + 1]) {
            pos = i;
            break;
        }
    if (pos < 0) {
        auto key = std::make_pair(w.dims, w.word);
        auto it = out.find(key);
        QMatrix add = qscale(m, w.coeff);
        if (it == out.end())
            out.emplace(key, add);
        else
            it->second = qadd(it->second, add);
        return;
    }
    Atom y = w.word[pos], x = w.word[pos + 1];
    Work swapped = w;
    std::swap(swapped.word[pos], swapped.word[pos + 1]);
    expand_into(out, m, swapped);

    if (is_field(y) || is_field(x)) return;
    // y > x, both from {V, Pi}; y is a Pi
    auto emit = [&](CQ factor, std::initializer_list<std::pair<int, int>> dims, Atom f) {
        Work c = w;
        c.coeff = w.coeff * factor;
        for (auto [s, n] : dims) c.dims[s] += n;
        c.word.erase(c.word.begin() + pos, c.word.begin() + pos + 2);
        c.word.insert(c.word.begin() + pos, f);
        expand_into(out, m, c);
    };
    int a = idx(y);
    if (x == Atom::V) {
        emit(CQ{0, 1}, {{HBAR, 1}, {E, 1}}, field_atom('E', a));
        emit(CQ{0, 1}, {{HBAR, 1}, {ET, 1}}, field_atom('B', a));
    } else {
        int b = idx(x);
        for (int k = 1; k <= 3; ++k) {
            int s = eps(a, b, k);
            if (s == 0) continue;
            emit(CQ{0, s}, {{HBAR, 1}, {C, -1}, {E, 1}}, field_atom('B', k));
            emit(CQ{0, -s}, {{HBAR, 1}, {C, -1}, {ET, 1}}, field_atom('E', k));
        }
    }
}

void drop_zeros(Expanded& e) {
    for (auto it = e.begin(); it != e.end();)
        it = qzero(it->second) ? e.erase(it) : std::next(it);
}

}  // namespace

Expanded brute_expand(const std::vector<Product>& products) {
    Expanded out;
    for (const auto& p : products) {
        QMatrix m = dirac_matrix(0, 0, 0);
        fwdyon::Word w;
        for (const auto& f : p.factors) {
            if (f.is_matrix)
                m = qmatmul(m, dirac_matrix(f.mat.left, f.mat.right, f.mat.phase));
            else
                w.push_back(f.atom);
        }
        expand_into(out, m, Work{CQ{p.coeff, 0}, p.dims, w});
    }
    drop_zeros(out);
    return out;
}

Expanded from_engine(const fwdyon::Expression& e) {
    Expanded out;
    for (const auto& t : e.term_list()) {
        QMatrix m = qscale(dirac_matrix(t.mat.left, t.mat.right, t.mat.phase), CQ{t.coeff, 0});
        auto key = std::make_pair(t.dim.exp, t.word);
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(key, m);
        else
            it->second = qadd(it->second, m);
    }
    drop_zeros(out);
    return out;
}

fwdyon::Expression engine_eval(const std::vector<Product>& products) {
    using fwdyon::Expression;
    Expression total;
    for (const auto& p : products) {
        fwdyon::DimensionVector d;
        d.exp = p.dims;
        Expression e = Expression::symbol(d, p.coeff);
        for (const auto& f : p.factors)
            e = e * (f.is_matrix ? Expression::matrix(f.mat) : Expression::atom(f.atom));
        total += e;
    }
    return total;
}

bool same(const Expanded& a, const Expanded& b) { return a == b; }

Product random_product(std::mt19937_64& rng, int max_atoms, int max_mats) {
    std::uniform_int_distribution<int> natoms(0, max_atoms), nmats(0, max_mats);
    std::uniform_int_distribution<int> atom(0, 9), pauli(0, 3), phase(0, 3), num(-6, 6), den(1, 5);
    Product p;
    p.coeff = Rational(num(rng), den(rng));
    p.coeff.canonicalize();
    if (p.coeff == 0) p.coeff = 1;
    int na = natoms(rng), nm = nmats(rng);
    std::vector<Factor> fs;
    for (int k = 0; k < na; ++k) fs.push_back({false, {}, static_cast<Atom>(atom(rng))});
    for (int k = 0; k < nm; ++k) {
        fwdyon::BasisElement b{static_cast<std::uint8_t>(pauli(rng)), static_cast<std::uint8_t>(pauli(rng)),
                               static_cast<std::uint8_t>(phase(rng))};
        std::uniform_int_distribution<std::size_t> where(0, fs.size());
        fs.insert(fs.begin() + static_cast<long>(where(rng)), Factor{true, b, {}});
    }
    p.factors = std::move(fs);
    return p;
}

}  // namespace oracle
