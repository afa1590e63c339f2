#pragma once

#include "fwdyon/fw_pipeline.hpp"
#include "fwdyon/hamiltonians.hpp"
#include "fwdyon/series.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace fwdyon {

/// An expression truncated to linear order in the fields, with every
/// field-free word read as the symmetrized (all orderings averaged) product
/// of its atoms.  The reordering corrections of those products are linear in
/// the fields and are moved into `field_linear`.
struct SymmetricSplit {
    Expression field_free;    // coefficients of symmetrized products
    Expression field_linear;  // canonical words with one field atom
};

SymmetricSplit symmetric_split(const Expression& e);

/// Fully symmetrized product of a word, normal ordered.
Expression symmetrized_word(const Word& w);

struct PhysicalReduction {
    Expression orbit;    // field-free terms, rest energy and V
    Expression spin;     // terms linear in E or B
    Expression residue;  // anything else that survives field truncation

    bool complete() const { return residue.is_zero(); }
};

/// Split the field-truncated FW Hamiltonian into orbital and spin parts,
/// using the symmetric reading of field-free words.
/// `zeroth` carries the order <= 0 pieces (rest energy, V) that the per-order
/// reports do not hold.
PhysicalReduction reduce_to_physical(const std::vector<FWOrderReport>& reports, const Expression& zeroth = {});
PhysicalReduction reduce_to_physical(const FWRun& run);

struct PauliExtras {
    Expression fw1;      // proportional to -mu'' B + d'' E
    Expression fw2;      // proportional to  mu'' E + d'' B
    Expression residue;  // other anomalous terms
};

PauliExtras pauli_extra_terms(const std::vector<FWOrderReport>& reports);
PauliExtras pauli_extra_terms(const Expression& spin_part);

/// Polynomial in the three boost components with rational coefficients,
/// truncated at total degree `max_degree`.
class BetaPoly {
public:
    using Monomial = std::array<int, 3>;

    explicit BetaPoly(int max_degree = 5) : max_degree_(max_degree) {}

    static BetaPoly constant(int max_degree, const Rational& q);
    static BetaPoly component(int max_degree, int i);  // beta_i, i = 1..3
    /// s(|beta|) for an even one-variable series s, written in components.
    static BetaPoly radial(const SeriesPoly& s);

    int max_degree() const { return max_degree_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;
    void add(const Monomial& m, const Rational& q);

    BetaPoly& operator+=(const BetaPoly& o);
    BetaPoly& operator-=(const BetaPoly& o);
    friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
    friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }
    friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b);
    friend BetaPoly operator*(const Rational& q, BetaPoly a);
    friend bool operator==(const BetaPoly&, const BetaPoly&) = default;

    bool is_zero() const { return terms_.empty(); }
    std::string to_string() const;

private:
    int max_degree_;
    std::map<Monomial, Rational> terms_;
};

/// Selects the part of a spin Hamiltonian of the form
/// poly(beta) x (charge) hbar c / E_g x matrix x field component.
struct SpinChannel {
    std::uint8_t left = 0, right = 0;
    bool imag = false;
    Atom field = Atom::E1;
    Sym charge = Sym::e;

    friend auto operator<=>(const SpinChannel&, const SpinChannel&) = default;
    std::string name() const;
};

using SpinPolys = std::map<SpinChannel, BetaPoly>;

struct TbmtMismatch {
    SpinChannel channel;
    BetaPoly::Monomial monomial{};
    Rational fw;
    Rational tbmt;
};

struct TbmtMatch {
    int through = 5;
    SpinPolys fw;
    SpinPolys tbmt;
    std::vector<TbmtMismatch> mismatches;
    std::vector<std::string> errors;  // terms that do not fit the spin form

    bool pass() const { return mismatches.empty() && errors.empty(); }
};

/// Express a field-linear spin Hamiltonian (hbar, c, E_g, charges, mu'', d'')
/// as polynomials in the boost velocity: mu'' -> (g_e/2 - 1) e hbar c,
/// d'' -> (g_et/2 - 1) etilde hbar c, Pi -> (E_g / 2c) xi, xi = gamma beta.
SpinPolys spin_polynomials(const Expression& h, const ParticleParams& p, int through,
                           std::vector<std::string>* errors = nullptr);

/// The classical spin Hamiltonian -(e/mc) s.F - (etilde/mc) s.F~ with s = hbar Sigma / 2,
/// gamma expanded in beta.  The Dirac beta matrix multiplies the leading
/// field term and the longitudinal term, not the cross product.
SpinPolys tbmt_polynomials(const ParticleParams& p, int through);

TbmtMatch match_tbmt(const Expression& h_spin, const Expression& h_fw1, const Expression& h_fw2,
                     const ParticleParams& p, int through = 5);

/// Effective (electric, magnetic) dipole moments, m eliminated.  Order 1 is
/// the leading pair; order 4 carries the |xi| prefactor series.
std::pair<Vec3, Vec3> effective_dipoles(int order);

}  // namespace fwdyon
