#pragma once

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semihilbert {

/// One evaluated inequality instance lhs <= rhs. `holds` is derived from the
/// slack and the relative tolerance; it cannot be set on its own.
template <class Id, class Params>
class InequalityReport {
public:
    InequalityReport(Id id, Params params, double lhs, double rhs, double rel_tol)
        : id_(id), params_(params), lhs_(lhs), rhs_(rhs), rel_tol_(rel_tol)
    {
    }

    Id id() const noexcept { return id_; }
    const Params& params() const noexcept { return params_; }
    double lhs() const noexcept { return lhs_; }
    double rhs() const noexcept { return rhs_; }
    double slack() const noexcept { return rhs_ - lhs_; }
    double tolerance() const noexcept { return rel_tol_; }
    double scale() const noexcept { return std::max({1.0, std::abs(lhs_), std::abs(rhs_)}); }
    /// slack / max(1, |lhs|, |rhs|)
    double relative_slack() const noexcept { return slack() / scale(); }
    bool holds() const noexcept { return slack() >= -rel_tol_ * scale(); }

private:
    Id id_;
    Params params_;
    double lhs_;
    double rhs_;
    double rel_tol_;
};

/// Parameters shared by operator bounds and vector lemmas; each id reads only
/// the members it depends on.
struct BoundParams {
    double alpha = 0.0;
    double beta = 0.0;
    double r = 1.0;
    int n = 2;

    friend bool operator==(const BoundParams&, const BoundParams&) = default;
};

struct ParamUse {
    bool alpha = false;
    bool beta = false;
    bool r = false;
    bool n = false;
};

struct ParamGrid {
    std::vector<double> alpha{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> beta{0.0, 0.5, 1.0, 10.0};
    std::vector<double> r{1.0, 2.0};
    std::vector<int> n{2, 3};

    /// Cartesian product restricted to the parameters `use` marks as relevant.
    std::vector<BoundParams> expand(ParamUse use) const
    {
        const std::vector<double> one_alpha{0.0};
        const std::vector<double> one_beta{0.0};
        const std::vector<double> one_r{1.0};
        const std::vector<int> one_n{2};
        std::vector<BoundParams> out;
        for (double a : use.alpha ? alpha : one_alpha) {
            for (double b : use.beta ? beta : one_beta) {
                for (double rr : use.r ? r : one_r) {
                    for (int nn : use.n ? n : one_n) {
                        out.push_back({a, b, rr, nn});
                    }
                }
            }
        }
        return out;
    }
};

/// Operands and outcome of one evaluation, kept for the worst case per id.
struct Witness {
    std::size_t trial = 0;
    BoundParams params;
    double lhs = 0.0;
    double rhs = 0.0;
    double relative_slack = 0.0;
    std::vector<std::pair<std::string, CMatrix>> operands;
};

struct IdStats {
    std::string id;
    ParamUse use;
    std::size_t evaluations = 0;
    std::size_t violations = 0;
    double min_slack = std::numeric_limits<double>::infinity(); ///< relative
    std::optional<Witness> argmin;
};

struct Violation {
    std::size_t trial = 0;
    std::string id;
    BoundParams params;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Worst relative residuals of the A-adjoint identities over all trials.
struct IdentityResiduals {
    double adjoint_equation = 0.0; ///< A T# = T* A
    double product_rule = 0.0;     ///< (TS)# = S# T#
    double norm_square = 0.0;      ///< ||T# T||_A = ||T||_A^2
    double double_adjoint = 0.0;   ///< (T#)# = P T P
};

struct VerificationSummary {
    std::string kind;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t skipped = 0;
    std::size_t min_dim = 0;
    std::size_t max_dim = 0;
    double singular_prob = 0.0;
    ParamGrid grid;
    std::size_t evaluations = 0;
    std::size_t violations = 0;
    std::vector<IdStats> per_id;
    std::vector<Violation> violation_list;
    std::optional<IdentityResiduals> identities;

    static constexpr std::size_t kMaxListedViolations = 100;
};

/// A published value next to the value this library computes for it.
/// `approx` claims agree within `tolerance` (absolute); `at_most` claims
/// agree when computed <= claimed + tolerance.
struct ClaimRow {
    enum class Kind { approx, at_most };

    std::string quantity;
    double claimed = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;
    Kind kind = Kind::approx;

    bool agrees() const noexcept
    {
        if (kind == Kind::at_most) {
            return computed <= claimed + tolerance;
        }
        return std::abs(computed - claimed) <= tolerance;
    }
    bool discrepancy() const noexcept { return !agrees(); }
};

namespace detail {

template <class Report>
void record(VerificationSummary& summary, IdStats& stats, std::size_t trial, const Report& report,
            const std::vector<std::pair<std::string, CMatrix>>& operands)
{
    ++summary.evaluations;
    ++stats.evaluations;
    const double rel = report.relative_slack();
    if (!report.holds()) {
        ++summary.violations;
        ++stats.violations;
        if (summary.violation_list.size() < VerificationSummary::kMaxListedViolations) {
            summary.violation_list.push_back({trial, stats.id, report.params(), report.lhs(), report.rhs()});
        }
    }
    if (rel < stats.min_slack) {
        stats.min_slack = rel;
        stats.argmin = Witness{trial, report.params(), report.lhs(), report.rhs(), rel, operands};
    }
}

inline void validate_grid(const ParamGrid& grid)
{
    auto bad = [](const char* what) { throw Error(ErrorKind::InvalidParams, what); };
    if (grid.alpha.empty() || grid.beta.empty() || grid.r.empty() || grid.n.empty()) {
        bad("parameter grid lists must be non-empty");
    }
    for (double a : grid.alpha) {
        if (!(a >= 0.0 && a <= 1.0)) bad("alpha must lie in [0, 1]");
    }
    for (double b : grid.beta) {
        if (!(b >= 0.0) || !std::isfinite(b)) bad("beta must be >= 0");
    }
    for (double r : grid.r) {
        if (!(r >= 1.0) || !std::isfinite(r)) bad("r must be >= 1");
    }
    for (int n : grid.n) {
        if (n < 1) bad("n must be >= 1");
    }
}

} // namespace detail

} // namespace semihilbert
