#pragma once

#include "fwdyon/catalog.hpp"
#include "fwdyon/fw_pipeline.hpp"
#include "fwdyon/hamiltonians.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fwdyon {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool pass() const;
    void append(const std::vector<Check>& more) { checks.insert(checks.end(), more.begin(), more.end()); }
};

nlohmann::json to_json(const SuiteReport& r);

/// The catalog plus the two symbolic runs every suite reads from.
struct Derivations {
    ReferenceCatalog catalog;
    FWRun dirac;  // exact
    FWRun pauli;  // generic moments, linear in fields
};

Derivations derive_all(ReferenceCatalog catalog);

/// (g_e, g_et) pairs of the spin-Hamiltonian cross-check.
std::vector<std::pair<Rational, Rational>> tbmt_grid();

std::vector<Check> check_dirac_orders(const Derivations& d);
std::vector<Check> check_lemmas(const Derivations& d);
std::vector<Check> check_physical(const Derivations& d);
std::vector<Check> check_omega_w(const ReferenceCatalog& cat);
std::vector<Check> check_order_identities(const ReferenceCatalog& cat);
std::vector<Check> check_pauli_orders(const Derivations& d);
std::vector<Check> check_pauli_spin(const Derivations& d);
std::vector<Check> check_tbmt_grid(const Derivations& d);
std::vector<Check> check_series();

/// Named groups for the command line: fw, pauli, identities, series, all.
SuiteReport run_suite(const std::string& name, const Derivations& d);

}  // namespace fwdyon
