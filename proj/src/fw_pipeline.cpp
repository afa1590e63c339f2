#include "fwdyon/fw_pipeline.hpp"

#include <sstream>

namespace fwdyon {

OddEvenSplit split_even_odd(const Expression& h) {
    OddEvenSplit s;
    for (const auto& [k, q] : h.terms()) {
        if (k.dim.order() < 0)
            s.rest.add_canonical(k, q);
        else if (beta_grade(k.mat()) == Grade::Even)
            s.even.add_canonical(k, q);
        else
            s.odd.add_canonical(k, q);
    }
    return s;
}

Expression bch_conjugate(const Expression& s, const Expression& h, const Truncation& t) {
    if (s.is_zero()) return truncate(h, t);
    if (s.min_order() < 1) throw std::invalid_argument("generator must be at least first order in 1/E_g");
    if (!is_anti_hermitian(s, t)) throw std::invalid_argument("generator is not anti-Hermitian");
    Expression result = truncate(h, t);
    Expression nested = result;
    for (int n = 1; !nested.is_zero(); ++n) {
        nested = Rational(1, n) * commutator(s, nested, t);
        result += nested;
    }
    return result;
}

Expression bch_conjugate(const Expression& s, const Expression& h, int max_order) {
    return bch_conjugate(s, h, Truncation{max_order, INT_MAX});
}

int guaranteed_odd_start(int stage) {
    switch (stage) {
        case 1: return 1;
        case 2: return 3;
        default: return stage + 1;
    }
}

bool FWRun::all_checks_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Expression FWRun::transformed_even_slice(int n) const { return order_slice(transformed_even(), n); }

FWRun fw_run(const Expression& h, const FWOptions& opts) {
    const int target = opts.target_order;
    Truncation t{target, opts.max_field_degree};
    FWRun run;
    run.options = opts;

    Expression current = truncate(h, t);
    OddEvenSplit split = split_even_odd(current);
    const Expression beta = Expression::matrix(basis::beta());
    const DimensionVector inv_eg = dim({{Sym::Eg, -1}});

    for (int stage = 1; !split.odd.is_zero(); ++stage) {
        if (stage > target + 1) throw FWLemmaError("odd part did not vanish after the expected number of stages");
        Expression gen = mul(beta, split.odd).times_symbol(inv_eg);
        current = bch_conjugate(gen, current, t);
        split = split_even_odd(current);
        run.stages.push_back({gen, current, split});

        std::ostringstream name;
        name << "stage " << stage << " Hamiltonian is Hermitian";
        run.checks.push_back({name.str(), is_hermitian(current, t), ""});

        int start = guaranteed_odd_start(stage);
        int found = split.odd.is_zero() ? target + 1 : split.odd.min_order();
        std::ostringstream lemma, detail;
        lemma << "stage " << stage << " residual odd part starts at order >= " << start;
        detail << "lowest odd order " << (split.odd.is_zero() ? std::string("none") : std::to_string(found));
        bool ok = found >= start;
        run.checks.push_back({lemma.str(), ok, detail.str()});
        if (!ok) throw FWLemmaError(lemma.str() + " violated: " + detail.str());
    }

    // h'' = h' (stage 3 against stage 2) and later stages leave the even part alone.
    for (std::size_t k = 2; k < run.stages.size(); ++k) {
        const Expression& before = run.stages[k - 1].split.even;
        const Expression& after = run.stages[k].split.even;
        std::ostringstream name;
        name << "stage " << k + 1 << " leaves the even part unchanged through order " << target;
        Expression diff = after - before;
        std::ostringstream detail;
        if (!diff.is_zero()) detail << diff.size() << " differing terms, lowest order " << diff.min_order();
        run.checks.push_back({name.str(), diff.is_zero(), detail.str()});
    }
    if (run.stages.empty()) run.stages.push_back({{}, current, split});
    return run;
}

std::vector<FWOrderReport> make_reports(const FWRun& run, const std::vector<Expression>& references) {
    std::vector<FWOrderReport> out;
    for (int n = 1; n <= run.options.target_order; ++n) {
        FWOrderReport r;
        r.order = n;
        r.derived = run.derived(n);
        if (static_cast<std::size_t>(n) <= references.size()) r.reference = references[n - 1];
        r.diff = r.derived - r.reference;
        out.push_back(std::move(r));
    }
    return out;
}

Expression extract_order(const std::vector<FWOrderReport>& reports, int n) {
    for (const auto& r : reports)
        if (r.order == n) return r.derived;
    throw std::out_of_range("no report for order " + std::to_string(n));
}

nlohmann::json to_json(const FWOrderReport& r) {
    return {{"order", r.order},
            {"pass", r.pass()},
            {"derived", to_json(r.derived)},
            {"reference", to_json(r.reference)},
            {"diff", to_json(r.diff)}};
}

}  // namespace fwdyon
