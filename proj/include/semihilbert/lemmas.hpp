#pragma once

#include "bounds.hpp"

namespace semihilbert {

// Vector inequalities for a, b, e with ||e||_A = 1. Throughout
// X = |<a,e>_A <e,b>_A|, P = ||a||_A ||b||_A and Q = |<a,b>_A|.
enum class LemmaId {
    KR0,
    MD1,
    MD2,
    L24,
    COR_ONE,
    L25_MAJOR1,
    COR27,
    HOLDER_QHB,
    MAX1,
    QADRI1,
    COMB1,
    REFINED_CS,
};

inline constexpr std::array kAllLemmaIds{
    LemmaId::KR0,   LemmaId::MD1,        LemmaId::MD2,  LemmaId::L24,    LemmaId::COR_ONE, LemmaId::L25_MAJOR1,
    LemmaId::COR27, LemmaId::HOLDER_QHB, LemmaId::MAX1, LemmaId::QADRI1, LemmaId::COMB1,   LemmaId::REFINED_CS,
};

constexpr std::string_view to_string(LemmaId id) noexcept
{
    switch (id) {
    case LemmaId::KR0: return "KR0";
    case LemmaId::MD1: return "MD1";
    case LemmaId::MD2: return "MD2";
    case LemmaId::L24: return "L24";
    case LemmaId::COR_ONE: return "COR_ONE";
    case LemmaId::L25_MAJOR1: return "L25_MAJOR1";
    case LemmaId::COR27: return "COR27";
    case LemmaId::HOLDER_QHB: return "HOLDER_QHB";
    case LemmaId::MAX1: return "MAX1";
    case LemmaId::QADRI1: return "QADRI1";
    case LemmaId::COMB1: return "COMB1";
    case LemmaId::REFINED_CS: return "REFINED_CS";
    }
    return "UNKNOWN";
}

inline std::optional<LemmaId> parse_lemma_id(std::string_view name)
{
    for (LemmaId id : kAllLemmaIds) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

constexpr ParamUse param_use(LemmaId id) noexcept
{
    switch (id) {
    case LemmaId::MD1:
    case LemmaId::COMB1: return {true, false, false, false};
    case LemmaId::MD2: return {true, false, true, false};
    case LemmaId::L24: return {true, true, false, false};
    case LemmaId::COR_ONE:
    case LemmaId::L25_MAJOR1:
    case LemmaId::COR27: return {true, true, true, false};
    case LemmaId::REFINED_CS: return {false, true, false, false};
    default: return {};
    }
}

inline constexpr double kLemmaTolerance = 1e-9;

using LemmaReport = InequalityReport<LemmaId, BoundParams>;

/// Evaluates one lemma. HOLDER_QHB needs `op` (an operator in B_A) and uses
/// x = e, y = b / ||b||_A, falling back to y = e when b is A-null.
inline LemmaReport eval_lemma(const SemiHilbertSpace& space, const CVector& a, const CVector& b, const CVector& e,
                              LemmaId id, const BoundParams& p, const CMatrix* op = nullptr)
{
    validate(p, param_use(id));
    const double e_norm = a_norm_vec(space, e);
    if (std::abs(e_norm - 1.0) > space.tol()) {
        throw Error(ErrorKind::NotUnitA, "||e||_A = " + std::to_string(e_norm) + ", expected 1");
    }
    const double na = a_norm_vec(space, a);
    const double nb = a_norm_vec(space, b);
    const double ae = std::abs(a_inner(space, a, e));
    const double eb = std::abs(a_inner(space, e, b));
    const double x = ae * eb;
    const double pp = na * nb;
    const double q = std::abs(a_inner(space, a, b));
    auto report = [&](double lhs, double rhs) { return LemmaReport(id, p, lhs, rhs, kLemmaTolerance); };

    const double al = p.alpha;
    const double r = p.r;
    switch (id) {
    case LemmaId::KR0: return report(x, 0.5 * (pp + q));
    case LemmaId::MD1: return report(x, 0.5 * (1.0 + al) * pp + 0.5 * (1.0 - al) * q);
    case LemmaId::MD2:
        return report(std::pow(x, r), 0.5 * (1.0 + al) * std::pow(pp, r) + 0.5 * (1.0 - al) * std::pow(q, r));
    case LemmaId::L24:
        return report(x * x, 0.25 * (gamma1(al, p.beta) * pp * pp + gamma2(al, p.beta) * pp * q));
    case LemmaId::COR_ONE:
        return report(std::pow(x, 2.0 * r), 0.25 * (gamma1(al, p.beta) * std::pow(pp, 2.0 * r) +
                                                     gamma2(al, p.beta) * std::pow(pp * q, r)));
    case LemmaId::L25_MAJOR1:
        return report(std::pow(x, 2.0 * r),
                      delta1(al, p.beta) * std::pow(pp, 2.0 * r) + delta2(al, p.beta) * std::pow(q, 2.0 * r));
    case LemmaId::COR27:
        return report(std::pow(x, 2.0 * r),
                      delta1(al, p.beta) * std::pow(pp, 2.0 * r) + delta2(al, p.beta) * std::pow(q * pp, r));
    case LemmaId::HOLDER_QHB: {
        if (op == nullptr) {
            throw Error(ErrorKind::InvalidParams, "HOLDER_QHB needs an operator argument");
        }
        const CMatrix adj = a_adjoint(space, *op);
        CVector y = e;
        if (nb > space.tol() * std::max(1.0, norm2(b) * std::sqrt(std::max(space.eigenvalues().front(), 0.0)))) {
            y = b;
            y *= 1.0 / nb;
        }
        const Complex txy = a_inner(space, *op * e, y);
        const double left = std::max(0.0, a_inner(space, adj * (*op * e), e).real());
        const double right = std::max(0.0, a_inner(space, *op * (adj * y), y).real());
        return report(std::norm(txy), std::sqrt(left * right));
    }
    case LemmaId::MAX1: return report(ae * ae + eb * eb, e_norm * e_norm * (std::max(na * na, nb * nb) + q));
    case LemmaId::QADRI1: return report(ae + eb, std::sqrt((na + nb) * std::max(na, nb) + 2.0 * q));
    case LemmaId::COMB1: {
        const double s = ae + eb;
        return report(s * s, std::sqrt(std::pow(na, 4) + std::pow(nb, 4) + 2.0 * q * q) + (1.0 + al) * pp +
                                 (1.0 - al) * q);
    }
    case LemmaId::REFINED_CS: {
        const double beta = p.beta;
        return report(q * q, beta / (1.0 + beta) * pp * pp + 1.0 / (1.0 + beta) * pp * q);
    }
    }
    throw Error(ErrorKind::InvalidParams, "unhandled lemma id");
}

struct LemmaVerifyConfig {
    std::size_t triples = 5000;
    std::size_t min_dim = 2;
    std::size_t max_dim = 6;
    std::uint64_t seed = 42;
    double singular_prob = 0.5;
    ParamGrid grid;
};

inline void validate(const LemmaVerifyConfig& c)
{
    VerifyConfig as_bounds;
    as_bounds.trials = c.triples;
    as_bounds.min_dim = c.min_dim;
    as_bounds.max_dim = c.max_dim;
    as_bounds.singular_prob = c.singular_prob;
    as_bounds.grid = c.grid;
    validate(as_bounds);
}

using LemmaSink = std::function<void(std::size_t trial, const LemmaReport&)>;

/// Samples (a, b, e) with e in ran(A), A-normalized, plus an operator in B_A
/// for HOLDER_QHB. Trial k draws from Rng(seed + k); rank-0 spaces are skipped.
inline VerificationSummary verify_lemmas_random(const LemmaVerifyConfig& c, const LemmaSink& sink = {})
{
    validate(c);
    VerificationSummary summary;
    summary.kind = "lemmas";
    summary.seed = c.seed;
    summary.trials = c.triples;
    summary.min_dim = c.min_dim;
    summary.max_dim = c.max_dim;
    summary.singular_prob = c.singular_prob;
    summary.grid = c.grid;

    std::vector<std::vector<BoundParams>> grids;
    for (LemmaId id : kAllLemmaIds) {
        IdStats stats;
        stats.id = std::string(to_string(id));
        stats.use = param_use(id);
        summary.per_id.push_back(std::move(stats));
        grids.push_back(c.grid.expand(param_use(id)));
    }

    auto column = [](const CVector& v) {
        CMatrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) {
            m(i, 0) = v[i];
        }
        return m;
    };

    for (std::size_t k = 0; k < c.triples; ++k) {
        Rng rng(c.seed + k);
        const std::size_t dim = rng.uniform_index(c.min_dim, c.max_dim);
        const SemiHilbertSpace space = random_space(dim, rng.next_seed(), c.singular_prob);
        if (space.rank() == 0) {
            ++summary.skipped;
            continue;
        }
        const CVector a = rng.gaussian_vector(dim);
        const CVector b = rng.gaussian_vector(dim);
        CVector e = space.projA() * rng.gaussian_vector(dim);
        e *= 1.0 / a_norm_vec(space, e);
        const CMatrix t = random_operator_in_BA(space, rng.next_seed());

        const std::vector<std::pair<std::string, CMatrix>> operands{
            {"A", space.A()}, {"a", column(a)}, {"b", column(b)}, {"e", column(e)}, {"T", t}};
        for (std::size_t i = 0; i < kAllLemmaIds.size(); ++i) {
            for (const BoundParams& p : grids[i]) {
                const LemmaReport report = eval_lemma(space, a, b, e, kAllLemmaIds[i], p, &t);
                detail::record(summary, summary.per_id[i], k, report, operands);
                if (sink) {
                    sink(k, report);
                }
            }
        }
    }
    return summary;
}

} // namespace semihilbert
