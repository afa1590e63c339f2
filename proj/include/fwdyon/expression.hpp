#pragma once

#include "fwdyon/clifford.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <array>
#include <climits>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fwdyon {

using Rational = mpq_class;

/// Operator atoms.  The numeric order is the canonical order of a word:
/// field components (E before B, by index) < potential V < kinetic momenta.
enum class Atom : std::uint8_t { E1, E2, E3, B1, B2, B3, V, Pi1, Pi2, Pi3 };

using Word = std::vector<Atom>;

namespace atoms {
Atom E(int i);
Atom B(int i);
Atom Pi(int i);
inline constexpr Atom V = Atom::V;
bool is_field(Atom a);
bool is_pi(Atom a);
int index(Atom a);  // 1..3 for indexed atoms, 0 for V
std::string name(Atom a);
Atom parse(const std::string& s);
}  // namespace atoms

int field_degree(const Word& w);

/// Exponents of the symbolic constants carried by a term.
enum class Sym : std::uint8_t { hbar, c, m, Eg, e, etilde, mu, d };
inline constexpr int kNumSyms = 8;

struct DimensionVector {
    std::array<int, kNumSyms> exp{};

    int& operator[](Sym s) { return exp[static_cast<int>(s)]; }
    int operator[](Sym s) const { return exp[static_cast<int>(s)]; }
    DimensionVector& operator+=(const DimensionVector& o);
    friend DimensionVector operator+(DimensionVector a, const DimensionVector& b) { return a += b; }
    friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;

    /// Order in 1/E_g: minus the E_g exponent.
    int order() const { return -exp[static_cast<int>(Sym::Eg)]; }
    bool is_zero() const;

    static const char* name(Sym s);
};

DimensionVector dim(std::initializer_list<std::pair<Sym, int>> powers);

struct Term {
    Rational coeff;
    DimensionVector dim;
    BasisElement mat;
    Word word;
};

/// Canonical storage key.  The basis phase is folded into the coefficient's
/// sign so only +1 and +i survive as phases.
struct TermKey {
    DimensionVector dim;
    std::uint8_t left = 0;
    std::uint8_t right = 0;
    bool imag = false;
    Word word;

    friend auto operator<=>(const TermKey&, const TermKey&) = default;

    BasisElement mat() const { return {left, right, static_cast<std::uint8_t>(imag ? 1 : 0)}; }
};

struct Truncation {
    int max_order = INT_MAX;
    int max_field_degree = INT_MAX;

    bool keeps(const DimensionVector& d, const Word& w) const {
        return d.order() <= max_order && field_degree(w) <= max_field_degree;
    }
};

class Expression {
public:
    using Map = std::map<TermKey, Rational>;

    Expression() = default;

    static Expression scalar(const Rational& q);
    static Expression symbol(const DimensionVector& d, const Rational& q = 1);
    static Expression matrix(BasisElement b);
    static Expression atom(Atom a);

    const Map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    std::vector<Term> term_list() const;

    Expression& operator+=(const Expression& o);
    Expression& operator-=(const Expression& o);
    Expression operator-() const;
    friend Expression operator+(Expression a, const Expression& b) { return a += b; }
    friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
    friend Expression operator*(const Rational& q, const Expression& e);
    friend Expression operator*(const Expression& a, const Expression& b);
    friend bool operator==(const Expression&, const Expression&) = default;

    /// Multiply by i.
    Expression times_i() const;
    Expression times_symbol(const DimensionVector& d) const;

    /// Lowest / highest order in 1/E_g among the terms (0 for the zero expression).
    int min_order() const;
    int max_order() const;

    /// Add an already canonical term.
    void add_canonical(const TermKey& k, const Rational& q);
    /// Add a term whose word may be out of order; it is normal ordered first.
    void add_term(const Term& t);

private:
    Map terms_;
};

Expression mul(const Expression& a, const Expression& b, const Truncation& t = {});
Expression commutator(const Expression& a, const Expression& b, const Truncation& t = {});
Expression anticommutator(const Expression& a, const Expression& b, const Truncation& t = {});
Expression power(const Expression& a, int n, const Truncation& t = {});

/// Canonicalize an arbitrary list of terms (words in any order).
Expression normal_order(const std::vector<Term>& terms);
Expression normal_order(const Expression& e);

Expression truncate_fields(const Expression& e, int max_degree = 1);
Expression truncate_order(const Expression& e, int max_order);
Expression truncate(const Expression& e, const Truncation& t);

Expression hermitian_conjugate(const Expression& e);
/// Hermiticity up to the given truncation (the adjoint of a truncated
/// expression may reorder into terms the truncation discards).
bool is_hermitian(const Expression& e, const Truncation& t = {});
bool is_anti_hermitian(const Expression& e, const Truncation& t = {});

Expression order_slice(const Expression& e, int order);
Expression even_part(const Expression& e);
Expression odd_part(const Expression& e);

/// Keep the terms for which pred(key) holds.
template <class Pred>
Expression filter(const Expression& e, Pred pred) {
    Expression out;
    for (const auto& [k, q] : e.terms())
        if (pred(k)) out.add_canonical(k, q);
    return out;
}

nlohmann::json to_json(const Expression& e);
Expression expression_from_json(const nlohmann::json& j);
std::string to_latex(const Expression& e);

/// Number of cached word orderings (diagnostics).
std::size_t ordering_cache_size();

}  // namespace fwdyon
