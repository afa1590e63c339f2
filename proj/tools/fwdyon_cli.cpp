#include "fwdyon/catalog.hpp"
#include "fwdyon/scenario.hpp"
#include "fwdyon/suites.hpp"
#include "fwdyon/tbmt.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace fwdyon;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ReferenceCatalog fixture_catalog() {
    auto path = catalog_path();
    if (!std::filesystem::exists(path))
        throw UsageError("catalog not found at " + path.string() + " (set FW_FIXTURES or run export-catalog)");
    return load_catalog(path);
}

Vec3d parse_vec(const std::vector<double>& v, const std::string& flag) {
    if (v.empty()) return Vec3d::Zero();
    if (v.size() != 3) throw UsageError(flag + " takes three components");
    return {v[0], v[1], v[2]};
}

nlohmann::json vec_json(const Vec3d& v) { return {v.x(), v.y(), v.z()}; }

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int report(const SuiteReport& r) {
    emit(to_json(r));
    std::size_t failed = 0;
    for (const auto& c : r.checks)
        if (!c.pass) {
            ++failed;
            std::cerr << "FAIL " << c.name << ": " << c.detail << '\n';
        }
    std::cerr << r.suite << ": " << r.checks.size() - failed << "/" << r.checks.size() << " checks pass\n";
    return r.pass() ? kPass : kFail;
}

int cmd_derive(const std::string& model, int order, const std::string& format) {
    Expression h = model == "dirac" ? build_dirac_hamiltonian() : build_dirac_pauli_hamiltonian();
    FWOptions opts{order, model == "dirac" ? INT_MAX : 1};
    FWRun run = fw_run(h, opts);
    if (format == "latex") {
        for (int n = 1; n <= order; ++n) std::cout << "H_{FW}^{(" << n << ")} = " << to_latex(run.derived(n)) << "\n";
        return kPass;
    }
    nlohmann::json orders = nlohmann::json::array();
    for (int n = 1; n <= order; ++n) orders.push_back({{"order", n}, {"expression", to_json(run.derived(n))}});
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : run.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    emit({{"model", model}, {"orders", orders}, {"stages", run.stages.size()}, {"checks", checks}});
    return run.all_checks_pass() ? kPass : kFail;
}

int cmd_verify(std::string suite) {
    if (suite == "appendixB") suite = "identities";
    Derivations d = derive_all(fixture_catalog());
    SuiteReport r = run_suite(suite, d);
    if (suite == "all") {
        Check fresh{"fixture catalog equals the built-in catalog", d.catalog == build_reference_catalog(), ""};
        r.checks.insert(r.checks.begin(), fresh);
    }
    return report(r);
}

int cmd_series() {
    SuiteReport r{"series", check_series()};
    return report(r);
}

int cmd_simulate(const std::string& config, const std::string& out) {
    Scenario s = load_scenario(config);
    Trajectory tr = run_scenario(s);
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    write_csv(os, tr);
    InvariantDrift d = max_drift(tr, s.fields, s.particle);
    emit({{"samples", tr.size()},
          {"max_helicity_drift", d.helicity},
          {"max_spin_norm_drift", d.spin_norm},
          {"max_energy_drift", d.energy},
          {"out", out}});
    return kPass;
}

int cmd_boost(const std::vector<double>& beta, const std::vector<double>& first, const std::vector<double>& second,
              bool integrated) {
    Vec3d b = parse_vec(beta, "--beta");
    Vec3d a = parse_vec(first, integrated ? "--p" : "--mu-p");
    Vec3d m = parse_vec(second, integrated ? "--m" : "--mu-m");
    if (integrated) {
        auto [p_lab, m_lab] = boost_dipole_integrated(a, m, b);
        emit({{"law", "integrated"}, {"beta", vec_json(b)}, {"p", vec_json(p_lab)}, {"m", vec_json(m_lab)}});
    } else {
        auto [p_lab, m_lab] = boost_dipole(a, m, b);
        emit({{"law", "density"}, {"beta", vec_json(b)}, {"mu_p", vec_json(p_lab)}, {"mu_m", vec_json(m_lab)}});
    }
    return kPass;
}

int cmd_export(const std::string& out) {
    std::filesystem::path path = out.empty() ? catalog_path() : std::filesystem::path(out);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    save_catalog(build_reference_catalog(), path);
    std::cerr << "wrote " << path.string() << '\n';
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Foldy-Wouthuysen derivation and spin-dynamics checks for a spin-1/2 dyon"};
    app.require_subcommand(1);

    std::string model = "dirac", format = "json";
    int order = 6;
    auto* derive = app.add_subcommand("derive", "Print the derived H_FW orders 1..N");
    derive->add_option("--model", model)->check(CLI::IsMember({"dirac", "dirac-pauli"}));
    derive->add_option("--order", order)->check(CLI::Range(1, 6));
    derive->add_option("--format", format)->check(CLI::IsMember({"json", "latex"}));

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Check derived results against the fixture catalog");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"fw", "pauli", "appendixB", "identities", "series", "all"}));

    auto* series = app.add_subcommand("series-check", "Exact boost-velocity series identities");

    std::string config, out;
    auto* simulate = app.add_subcommand("simulate", "Integrate orbit and spin for a scenario file, write CSV");
    simulate->add_option("--config", config)->required()->check(CLI::ExistingFile);
    simulate->add_option("--out", out)->required();

    std::vector<double> beta, first, second;
    bool integrated = false;
    auto* boost = app.add_subcommand("boost-dipole", "Transform rest-frame dipole moments to the lab");
    boost->add_option("--beta", beta)->required()->expected(3)->delimiter(',');
    boost->add_option("--mu-p,--p", first)->expected(3)->delimiter(',');
    boost->add_option("--mu-m,--m", second)->expected(3)->delimiter(',');
    boost->add_flag("--integrated", integrated, "Integrated moments (p, m) instead of densities");

    std::string catalog_out;
    auto* exporter = app.add_subcommand("export-catalog", "Write the reference catalog JSON");
    exporter->add_option("--out", catalog_out, "Defaults to the fixtures directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*derive) return cmd_derive(model, order, format);
        if (*verify) return cmd_verify(suite);
        if (*series) return cmd_series();
        if (*simulate) return cmd_simulate(config, out);
        if (*boost) return cmd_boost(beta, first, second, integrated);
        if (*exporter) return cmd_export(catalog_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ScenarioError& e) {
        emit({{"error", e.what()}});
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidVelocity& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        emit({{"error", e.what()}});
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
