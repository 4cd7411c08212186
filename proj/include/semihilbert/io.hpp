/**
 * @file io.hpp
 * @brief JSON and CSV serialization of matrices, spaces and reports.
 *
 * Matrix documents: {"rows": r, "cols": c, "data": [[re, im], ...]} with data
 * row-major and exactly r*c entries. A bare number in `data` is read as a
 * real entry. Spaces add a "tol" field next to the matrix fields of A.
 */

#pragma once

#include "applications.hpp"
#include "lemmas.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace semihilbert {

using Json = nlohmann::ordered_json;

inline Json to_json(const CMatrix& m)
{
    Json data = Json::array();
    for (const Complex& z : m.entries()) {
        data.push_back(Json::array({z.real(), z.imag()}));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline CMatrix matrix_from_json(const Json& j)
{
    auto fail = [](const std::string& what) -> CMatrix { throw Error(ErrorKind::Parse, what); };
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
        return fail("matrix document needs rows, cols and data");
    }
    const Json& jr = j.at("rows");
    const Json& jc = j.at("cols");
    if (!jr.is_number_unsigned() || !jc.is_number_unsigned()) {
        return fail("rows and cols must be non-negative integers");
    }
    const auto rows = jr.get<std::size_t>();
    const auto cols = jc.get<std::size_t>();
    const Json& data = j.at("data");
    if (!data.is_array()) {
        return fail("data must be an array");
    }
    if (data.size() != rows * cols) {
        return fail("data has " + std::to_string(data.size()) + " entries, expected " +
                    std::to_string(rows * cols));
    }
    std::vector<Complex> entries;
    entries.reserve(data.size());
    for (const Json& z : data) {
        if (z.is_number()) {
            entries.emplace_back(z.get<double>(), 0.0);
        } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
            entries.emplace_back(z[0].get<double>(), z[1].get<double>());
        } else {
            return fail("each data entry must be [re, im] or a number");
        }
    }
    try {
        return CMatrix(rows, cols, std::move(entries));
    } catch (const Error& e) {
        return fail(e.what());
    }
}

inline Json parse_json_text(const std::string& text, const std::string& origin)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Parse, origin + ": " + e.what());
    }
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline CMatrix read_matrix_file(const std::string& path)
{
    return matrix_from_json(parse_json_text(read_text_file(path), path));
}

inline Json to_json(const SemiHilbertSpace& space)
{
    Json j = to_json(space.A());
    j["tol"] = space.tol();
    return j;
}

inline SemiHilbertSpace space_from_json(const Json& j)
{
    const CMatrix a = matrix_from_json(j);
    double tol = kDefaultSpaceTolerance;
    if (j.contains("tol")) {
        if (!j.at("tol").is_number()) {
            throw Error(ErrorKind::Parse, "tol must be a number");
        }
        tol = j.at("tol").get<double>();
    }
    return make_space(a, tol);
}

/// Full-precision number, or a string for non-finite values (JSON has no infinity).
inline Json number_or_label(double x)
{
    if (std::isfinite(x)) {
        return x;
    }
    if (std::isnan(x)) {
        return "NaN";
    }
    return x > 0 ? "INFINITE" : "-INFINITE";
}

inline Json to_json(const RadiusResult& r)
{
    return Json{{"value", number_or_label(r.value())}, {"finite", r.is_finite()},
                {"method", std::string(to_string(r.method()))}};
}

inline Json to_json(const BoundParams& p, ParamUse use)
{
    Json j = Json::object();
    if (use.alpha) j["alpha"] = p.alpha;
    if (use.beta) j["beta"] = p.beta;
    if (use.r) j["r"] = p.r;
    if (use.n) j["n"] = p.n;
    return j;
}

template <class Id>
Json to_json(const InequalityReport<Id, BoundParams>& r)
{
    return Json{{"id", std::string(to_string(r.id()))},
                {"params", to_json(r.params(), param_use(r.id()))},
                {"lhs", number_or_label(r.lhs())},
                {"rhs", number_or_label(r.rhs())},
                {"slack", number_or_label(r.slack())},
                {"relative_slack", number_or_label(r.relative_slack())},
                {"tolerance", r.tolerance()},
                {"holds", r.holds()}};
}

inline Json to_json(const ParamGrid& g)
{
    return Json{{"alpha", g.alpha}, {"beta", g.beta}, {"r", g.r}, {"n", g.n}};
}

inline Json to_json(const ClaimRow& c)
{
    return Json{{"quantity", c.quantity},
                {"claimed", c.claimed},
                {"computed", number_or_label(c.computed)},
                {"tolerance", c.tolerance},
                {"kind", c.kind == ClaimRow::Kind::approx ? "approx" : "at_most"},
                {"discrepancy", c.discrepancy()}};
}

inline Json to_json(const VerificationSummary& s)
{
    Json per_id = Json::array();
    for (const IdStats& st : s.per_id) {
        Json item{{"id", st.id},
                  {"evaluations", st.evaluations},
                  {"violations", st.violations},
                  {"min_slack", number_or_label(st.min_slack)}};
        if (st.argmin) {
            const Witness& w = *st.argmin;
            Json operands = Json::object();
            for (const auto& [name, m] : w.operands) {
                operands[name] = to_json(m);
            }
            item["argmin"] = Json{{"trial", w.trial},
                                  {"params", to_json(w.params, st.use)},
                                  {"lhs", number_or_label(w.lhs)},
                                  {"rhs", number_or_label(w.rhs)},
                                  {"relative_slack", number_or_label(w.relative_slack)},
                                  {"operands", std::move(operands)}};
        }
        per_id.push_back(std::move(item));
    }
    Json violations = Json::array();
    for (const Violation& v : s.violation_list) {
        violations.push_back(Json{{"trial", v.trial},
                                  {"id", v.id},
                                  {"params", to_json(v.params, {true, true, true, true})},
                                  {"lhs", number_or_label(v.lhs)},
                                  {"rhs", number_or_label(v.rhs)}});
    }
    Json j{{"kind", s.kind},
           {"config",
            Json{{"seed", s.seed},
                 {"trials", s.trials},
                 {"min_dim", s.min_dim},
                 {"max_dim", s.max_dim},
                 {"singular_prob", s.singular_prob},
                 {"grid", to_json(s.grid)}}},
           {"evaluations", s.evaluations},
           {"violations", s.violations},
           {"skipped", s.skipped},
           {"per_id", std::move(per_id)},
           {"violation_list", std::move(violations)}};
    if (s.identities) {
        j["identity_residuals"] = Json{{"adjoint_equation", s.identities->adjoint_equation},
                                       {"product_rule", s.identities->product_rule},
                                       {"norm_square", s.identities->norm_square},
                                       {"double_adjoint", s.identities->double_adjoint}};
    }
    return j;
}

inline Json to_json(const SturmReport& r)
{
    Json j{{"N", r.n},
           {"h", r.h},
           {"constant_coefficients", r.constant},
           {"computed", r.computed},
           {"spectral_radius", r.spectral_radius},
           {"thm31", to_json(r.thm31)},
           {"in6", to_json(r.in6)}};
    if (r.exact) {
        j["exact"] = *r.exact;
        j["rel_err"] = *r.rel_err();
        j["largest_eigenvalue"] = *r.largest_eigenvalue;
        j["rel_err_largest"] = *r.rel_err_largest();
    }
    return j;
}

inline Json to_json(const ReactionDiffusionReport& r)
{
    return Json{{"N", r.n},          {"lhs", r.w_t},        {"w_laplacian", r.w_laplacian}, {"sup_fprime", r.sup_fprime},
                {"rhs", r.rhs()},    {"slack", r.slack()}, {"holds", r.holds()}};
}

inline Json to_json(const FockReport& r)
{
    return Json{{"nmax", r.nmax},
                {"in_b_a", r.in_b_a},
                {"in_b_a_half", r.in_b_a_half},
                {"w_A", to_json(r.w)},
                {"pairing", r.pairing},
                {"commutator_defect", r.commutator_defect},
                {"claims", Json::array({to_json(r.pairing_claim)})}};
}

inline Json to_json(const SpinReport& r)
{
    Json claims = Json::array();
    for (const ClaimRow& c : r.claims) {
        claims.push_back(to_json(c));
    }
    Json j{{"J", r.config.j},
           {"B", r.config.b},
           {"beta", r.config.beta},
           {"rho", to_json(r.rho)},
           {"in_b_a", r.in_b_a},
           {"w_rho", to_json(r.w)},
           {"norm_rho", to_json(r.norm)}};
    if (r.n_sum) j["n_sum"] = *r.n_sum;
    if (r.w_square) j["w_square"] = *r.w_square;
    if (r.thm31) j["thm31"] = to_json(*r.thm31);
    j["claims"] = std::move(claims);
    return j;
}

/// Round-trip decimal for structured (CSV) output.
inline std::string full_precision(double x)
{
    if (!std::isfinite(x)) {
        return number_or_label(x).get<std::string>();
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Six significant digits for human-readable output.
inline std::string six_digits(double x)
{
    if (!std::isfinite(x)) {
        return number_or_label(x).get<std::string>();
    }
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

inline constexpr const char* kReportCsvHeader = "id,alpha,beta,r,n,lhs,rhs,slack,holds";

/// Parameters an id does not read are left empty.
template <class Id>
void write_csv_row(std::ostream& os, const InequalityReport<Id, BoundParams>& r)
{
    const ParamUse use = param_use(r.id());
    const BoundParams& p = r.params();
    os << to_string(r.id()) << ',' << (use.alpha ? full_precision(p.alpha) : "") << ','
       << (use.beta ? full_precision(p.beta) : "") << ',' << (use.r ? full_precision(p.r) : "") << ','
       << (use.n ? std::to_string(p.n) : "") << ',' << full_precision(r.lhs()) << ',' << full_precision(r.rhs())
       << ',' << full_precision(r.slack()) << ',' << (r.holds() ? "true" : "false") << '\n';
}

/// The last two columns compare against the largest eigenvalue 2 h^-2 (1 + cos(pi h)).
inline constexpr const char* kSturmCsvHeader = "N,h,computed,exact,rel_err,largest_eigenvalue,rel_err_largest";

inline void write_csv_row(std::ostream& os, const SturmReport& r)
{
    os << r.n << ',' << full_precision(r.h) << ',' << full_precision(r.computed) << ','
       << (r.exact ? full_precision(*r.exact) : "") << ',' << (r.exact ? full_precision(*r.rel_err()) : "") << ','
       << (r.exact ? full_precision(*r.largest_eigenvalue) : "") << ','
       << (r.exact ? full_precision(*r.rel_err_largest()) : "") << '\n';
}

} // namespace semihilbert
