#pragma once

// Independent reference implementations used only by the tests.

#include "fwdyon/expression.hpp"

#include <array>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using fwdyon::Rational;

/// Exact complex rational.
struct CQ {
    Rational re = 0;
    Rational im = 0;
    friend bool operator==(const CQ&, const CQ&) = default;
};
CQ operator*(const CQ& a, const CQ& b);
CQ operator+(const CQ& a, const CQ& b);

/// Exact 4x4 complex rational matrix, row-major.
using QMatrix = std::array<CQ, 16>;
QMatrix qmatmul(const QMatrix& a, const QMatrix& b);
QMatrix qscale(const QMatrix& a, const CQ& s);
QMatrix qadd(const QMatrix& a, const QMatrix& b);
bool qzero(const QMatrix& a);

/// Kronecker product of Pauli matrices written out entry by entry, times i^phase.
QMatrix dirac_matrix(int left, int right, int phase);

/// Canonicalized result of the brute-force expander: (dims, word) -> matrix.
using Dims = std::array<int, fwdyon::kNumSyms>;
using Expanded = std::map<std::pair<Dims, fwdyon::Word>, QMatrix>;

/// One product of factors: each factor is either a basis matrix or an atom.
struct Factor {
    bool is_matrix = false;
    fwdyon::BasisElement mat{};
    fwdyon::Atom atom{};
};
struct Product {
    Rational coeff = 1;
    Dims dims{};
    std::vector<Factor> factors;
};

/// Expand a sum of products by repeated rightmost-descent swaps.
Expanded brute_expand(const std::vector<Product>& products);

/// The engine's expression rendered in the same representation.
Expanded from_engine(const fwdyon::Expression& e);

/// Engine evaluation of the same products (via Expression multiplication).
fwdyon::Expression engine_eval(const std::vector<Product>& products);

bool same(const Expanded& a, const Expanded& b);

/// Random product with at most max_atoms atoms and max_mats matrix factors.
Product random_product(std::mt19937_64& rng, int max_atoms, int max_mats);

}  // namespace oracle
