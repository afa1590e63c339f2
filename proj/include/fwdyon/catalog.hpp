#pragma once

#include "fwdyon/expression.hpp"

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace fwdyon {

/// Hand-entered closed forms the derivation is checked against.  Keys:
///
///   dirac.order.N           H_FW^(N) in commutator form, exact (N = 1..6)
///   dirac.stage1.odd.N      first-stage odd slices, E_g powers included (N = 1..4)
///   dirac.stage1.even.N     first-stage even slices (N = 0..2)
///   dirac.physical.N        kinetic / Zeeman / spin-orbit form, linear in fields
///   dirac.orbit             rest energy + kinetic series + V
///   dirac.spin              intrinsic-dipole energy, orders 1..6
///   identity.*              intermediate operator identities (right-hand sides)
///   pauli.fw1.N, pauli.fw2.N anomalous-moment pieces per order
///   pauli.fw1, pauli.fw2    the same in xi form
///   pauli.order.N           Dirac-Pauli H_FW^(N), linear in fields
///   pauli.spin              dirac.spin + pauli.fw1 + pauli.fw2
///   intrinsic.mu_m.i, intrinsic.mu_p.i   intrinsic moments
///
/// Physical forms have m eliminated through m = E_g / 2c^2.
class ReferenceCatalog {
public:
    static constexpr int kFormatVersion = 1;

    const Expression& at(const std::string& key) const;
    bool contains(const std::string& key) const { return entries_.count(key) != 0; }
    void set(const std::string& key, Expression e) { entries_[key] = std::move(e); }
    const std::map<std::string, Expression>& entries() const { return entries_; }

    /// references[n-1] = dirac.order.n (or pauli.order.n).
    std::vector<Expression> dirac_orders() const;
    std::vector<Expression> pauli_orders() const;

    nlohmann::json to_json() const;
    static ReferenceCatalog from_json(const nlohmann::json& j);

    friend bool operator==(const ReferenceCatalog&, const ReferenceCatalog&) = default;

private:
    std::map<std::string, Expression> entries_;
};

ReferenceCatalog build_reference_catalog();

/// FW_FIXTURES if set, else the source-tree fixtures directory.
std::filesystem::path fixtures_dir();
std::filesystem::path catalog_path(const std::filesystem::path& dir = fixtures_dir());

ReferenceCatalog load_catalog(const std::filesystem::path& file = catalog_path());
void save_catalog(const ReferenceCatalog& c, const std::filesystem::path& file = catalog_path());

/// Building blocks shared by the catalog and the tests.
namespace forms {

/// ad_a^n(x) = [a, [a, ... [a, x]]].
Expression nested_commutator(const Expression& a, int n, const Expression& x, const Truncation& t = {});

/// First-stage odd slice O^(l) and even slice h^(n) without their E_g powers.
Expression stage1_odd(int l);
Expression stage1_even(int n);

/// X = -mu'' B + d'' E and Y = mu'' E + d'' B.
std::array<Expression, 3> anomalous_x();
std::array<Expression, 3> anomalous_y();

/// beta (Sigma.Pi)(X.Pi), the structure of the W^f chain.
Expression beta_sigma_pi_x_pi();
/// {Omega_o, Omega_o^f}.
Expression odd_anticommutator();

}  // namespace forms

}  // namespace fwdyon
