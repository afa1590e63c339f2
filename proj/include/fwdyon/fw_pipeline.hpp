#pragma once

#include "fwdyon/expression.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fwdyon {

/// H = rest + even + odd, where rest holds the E_g-proportional mass term.
struct OddEvenSplit {
    Expression rest;
    Expression even;
    Expression odd;

    Expression even_slice(int n) const { return order_slice(even, n); }
    Expression odd_slice(int n) const { return order_slice(odd, n); }
};

OddEvenSplit split_even_odd(const Expression& h);

/// sum_n ad_S^n(H) / n!, truncating every nesting level.  Throws
/// std::invalid_argument unless S is anti-Hermitian and of order >= 1.
Expression bch_conjugate(const Expression& s, const Expression& h, const Truncation& t);
Expression bch_conjugate(const Expression& s, const Expression& h, int max_order);

struct FWOptions {
    int target_order = 6;
    /// Terms with more field atoms than this are dropped during the run.
    int max_field_degree = INT_MAX;
};

struct FWStage {
    Expression generator;
    Expression hamiltonian;
    OddEvenSplit split;
};

struct LemmaCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FWRun {
    FWOptions options;
    std::vector<FWStage> stages;
    std::vector<LemmaCheck> checks;

    /// Even part after the last stage (rest term excluded).
    const Expression& transformed_even() const { return stages.back().split.even; }
    /// H_FW^(n) for n = 0..target_order.
    Expression derived(int n) const { return transformed_even_slice(n); }
    bool all_checks_pass() const;

private:
    Expression transformed_even_slice(int n) const;
};

/// Raised when a residual odd part shows up below its guaranteed order.
class FWLemmaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Smallest order at which the odd part may appear after stage k (1-based).
int guaranteed_odd_start(int stage);

FWRun fw_run(const Expression& h, const FWOptions& opts = {});

struct FWOrderReport {
    int order = 0;
    Expression derived;
    Expression reference;
    Expression diff;

    bool pass() const { return diff.is_zero(); }
};

/// One report per order 1..target, comparing against references[n-1].
std::vector<FWOrderReport> make_reports(const FWRun& run, const std::vector<Expression>& references);

Expression extract_order(const std::vector<FWOrderReport>& reports, int n);

nlohmann::json to_json(const FWOrderReport& r);

}  // namespace fwdyon
