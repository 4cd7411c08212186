// semihilbert: command-line front end for the bound catalog, the random
// verification suites, the worked examples and the application demos.
//
// Exit codes: 0 success, 1 an inequality failed (or a worked example
// disagrees), 2 usage, parse or input error.

#include "semihilbert/semihilbert.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace sh = semihilbert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string path;
    std::string format;

    /// Structured to a file (json unless asked otherwise); text to stdout
    /// unless a format was requested explicitly.
    std::string effective_format() const
    {
        if (!format.empty()) {
            return format;
        }
        return path.empty() ? "text" : "json";
    }
};

void add_output_options(CLI::App* cmd, Output& out)
{
    cmd->add_option("--out", out.path, "write the report to this file");
    cmd->add_option("--format", out.format, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
}

/// Emits one report in the requested format.
template <class Csv, class Text>
void emit(const Output& out, const sh::Json& json, Csv&& csv, Text&& text)
{
    std::ostringstream body;
    const std::string fmt = out.effective_format();
    if (fmt == "json") {
        body << json.dump(2) << '\n';
    } else if (fmt == "csv") {
        csv(body);
    } else {
        text(body);
    }
    if (out.path.empty()) {
        std::cout << body.str();
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) {
        throw sh::Error(sh::ErrorKind::InvalidConfig, "cannot write " + out.path);
    }
    file << body.str();
}

std::string fmt6(double x) { return sh::six_digits(x); }

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

void write_claims_text(std::ostream& os, const std::vector<sh::ClaimRow>& rows)
{
    os << pad("quantity", 40) << pad("claimed", 12) << pad("computed", 12) << "status\n";
    for (const auto& r : rows) {
        os << pad(r.quantity, 40) << pad(fmt6(r.claimed), 12) << pad(fmt6(r.computed), 12)
           << (r.agrees() ? "ok" : "DISCREPANCY") << '\n';
    }
}

void write_claims_csv(std::ostream& os, const std::vector<sh::ClaimRow>& rows)
{
    os << "quantity,claimed,computed,tolerance,kind,discrepancy\n";
    for (const auto& r : rows) {
        os << '"' << r.quantity << '"' << ',' << sh::full_precision(r.claimed) << ','
           << sh::full_precision(r.computed) << ',' << sh::full_precision(r.tolerance) << ','
           << (r.kind == sh::ClaimRow::Kind::approx ? "approx" : "at_most") << ','
           << (r.discrepancy() ? "true" : "false") << '\n';
    }
}

template <class Report>
void write_report_text(std::ostream& os, const Report& r)
{
    const auto use = sh::param_use(r.id());
    os << to_string(r.id());
    if (use.alpha) os << "  alpha=" << fmt6(r.params().alpha);
    if (use.beta) os << "  beta=" << fmt6(r.params().beta);
    if (use.r) os << "  r=" << fmt6(r.params().r);
    if (use.n) os << "  n=" << r.params().n;
    os << "\n  lhs   = " << fmt6(r.lhs()) << "\n  rhs   = " << fmt6(r.rhs()) << "\n  slack = " << fmt6(r.slack())
       << "\n  holds = " << (r.holds() ? "yes" : "no") << '\n';
}

void write_summary_text(std::ostream& os, const sh::VerificationSummary& s)
{
    os << s.kind << ": " << s.trials << (s.kind == "lemmas" ? " triples" : " trials") << ", dims " << s.min_dim
       << ".." << s.max_dim << ", seed " << s.seed << ", singular_prob " << fmt6(s.singular_prob) << '\n';
    os << "  " << pad("id", 14) << pad("evaluations", 13) << pad("violations", 12) << "min relative slack\n";
    for (const auto& st : s.per_id) {
        os << "  " << pad(st.id, 14) << pad(std::to_string(st.evaluations), 13)
           << pad(std::to_string(st.violations), 12) << fmt6(st.min_slack) << '\n';
    }
    if (s.skipped > 0) {
        os << "  skipped (rank 0): " << s.skipped << '\n';
    }
    if (s.identities) {
        os << "  identity residuals: A T# = T*A " << fmt6(s.identities->adjoint_equation) << ", (TS)# = S#T# "
           << fmt6(s.identities->product_rule) << ", ||T#T|| = ||T||^2 " << fmt6(s.identities->norm_square)
           << ", (T#)# = PTP " << fmt6(s.identities->double_adjoint) << '\n';
    }
    os << "  violations: " << s.violations << " of " << s.evaluations << '\n';
    for (const auto& v : s.violation_list) {
        os << "    trial " << v.trial << ' ' << v.id << " lhs=" << fmt6(v.lhs) << " rhs=" << fmt6(v.rhs) << '\n';
    }
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const std::size_t d = std::stoul(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {d, d};
        }
        const std::string lo = text.substr(0, dots);
        const std::string hi = text.substr(dots + 2);
        const std::size_t a = std::stoul(lo, &used);
        if (used != lo.size()) throw std::invalid_argument(text);
        const std::size_t b = std::stoul(hi, &used);
        if (used != hi.size()) throw std::invalid_argument(text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw sh::Error(sh::ErrorKind::InvalidConfig, "dims must look like 2..6, got '" + text + "'");
    }
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::size_t trials = 1000;
    std::size_t triples = 5000;
    std::string dims = "2..6";
    std::uint64_t seed = 42;
    double singular_prob = 0.5;
    sh::ParamGrid grid;
    Output out;
};

int cmd_verify(const VerifyArgs& a)
{
    const auto [lo, hi] = parse_dims(a.dims);
    sh::VerifyConfig bc;
    bc.trials = a.trials;
    bc.min_dim = lo;
    bc.max_dim = hi;
    bc.seed = a.seed;
    bc.singular_prob = a.singular_prob;
    bc.grid = a.grid;
    sh::LemmaVerifyConfig lc;
    lc.triples = a.triples;
    lc.min_dim = lo;
    lc.max_dim = hi;
    lc.seed = a.seed;
    lc.singular_prob = a.singular_prob;
    lc.grid = a.grid;
    sh::validate(bc);
    sh::validate(lc);

    const bool csv = a.out.effective_format() == "csv";
    std::ostringstream rows;
    if (csv) {
        rows << "trial," << sh::kReportCsvHeader << '\n';
    }
    const sh::VerificationSummary bounds = csv ? sh::verify_random(bc, [&](std::size_t k, const sh::BoundReport& r) {
        rows << k << ',';
        sh::write_csv_row(rows, r);
    })
                                               : sh::verify_random(bc);
    const sh::VerificationSummary lemmas =
        csv ? sh::verify_lemmas_random(lc, [&](std::size_t k, const sh::LemmaReport& r) {
            rows << k << ',';
            sh::write_csv_row(rows, r);
        })
            : sh::verify_lemmas_random(lc);

    const sh::Json json{{"bounds", sh::to_json(bounds)},
                        {"lemmas", sh::to_json(lemmas)},
                        {"violations", bounds.violations + lemmas.violations}};
    emit(
        a.out, json, [&](std::ostream& os) { os << rows.str(); },
        [&](std::ostream& os) {
            write_summary_text(os, bounds);
            write_summary_text(os, lemmas);
            os << "total violations: " << bounds.violations + lemmas.violations << '\n';
        });
    return bounds.violations + lemmas.violations == 0 ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- paper-examples

int cmd_paper_examples(const Output& out)
{
    const std::vector<sh::WorkedExample> examples = sh::worked_examples();
    sh::Json json = sh::Json::array();
    bool all = true;
    for (const auto& ex : examples) {
        sh::Json rows = sh::Json::array();
        for (const auto& r : ex.rows) {
            rows.push_back(sh::to_json(r));
        }
        json.push_back(sh::Json{{"example", ex.name}, {"all_agree", ex.all_agree()}, {"rows", rows}});
        all = all && ex.all_agree();
    }
    emit(
        out, sh::Json{{"examples", json}, {"all_agree", all}},
        [&](std::ostream& os) {
            std::vector<sh::ClaimRow> flat;
            for (const auto& ex : examples) {
                flat.insert(flat.end(), ex.rows.begin(), ex.rows.end());
            }
            write_claims_csv(os, flat);
        },
        [&](std::ostream& os) {
            for (const auto& ex : examples) {
                os << ex.name << '\n';
                write_claims_text(os, ex.rows);
                os << '\n';
            }
            os << (all ? "all published values reproduced\n" : "some published values are not reproduced\n");
        });
    return all ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- bound / lemma

struct BoundArgs {
    std::string id;
    std::string a_path;
    std::string t_path;
    std::string s_path;
    sh::BoundParams params{0.5, 1.0, 1.0, 2};
    double tol = sh::kDefaultSpaceTolerance;
    Output out;
};

int cmd_bound(const BoundArgs& a)
{
    const auto id = sh::parse_bound_id(a.id);
    if (!id) {
        throw sh::Error(sh::ErrorKind::InvalidParams, "unknown bound id '" + a.id + "'");
    }
    const sh::SemiHilbertSpace space = sh::make_space(sh::read_matrix_file(a.a_path), a.tol);
    const sh::CMatrix t = sh::read_matrix_file(a.t_path);
    std::optional<sh::BoundReport> report;
    if (sh::is_pair_bound(*id)) {
        if (a.s_path.empty()) {
            throw sh::Error(sh::ErrorKind::InvalidParams, a.id + " needs -S");
        }
        report = sh::eval_pair(space, t, sh::read_matrix_file(a.s_path), *id, a.params);
    } else {
        report = sh::eval_single(space, t, *id, a.params);
    }
    emit(
        a.out, sh::to_json(*report),
        [&](std::ostream& os) {
            os << sh::kReportCsvHeader << '\n';
            sh::write_csv_row(os, *report);
        },
        [&](std::ostream& os) { write_report_text(os, *report); });
    return report->holds() ? kExitOk : kExitFailed;
}

struct LemmaArgs {
    std::string id;
    std::string a_path;
    std::string va_path;
    std::string vb_path;
    std::string ve_path;
    std::string t_path;
    bool normalize = false;
    sh::BoundParams params{0.5, 1.0, 1.0, 2};
    Output out;
};

sh::CVector read_vector_file(const std::string& path)
{
    const sh::CMatrix m = sh::read_matrix_file(path);
    if (m.cols() != 1 && m.rows() != 1) {
        throw sh::Error(sh::ErrorKind::Parse, path + ": a vector must be a single row or column");
    }
    return sh::CVector(std::vector<sh::Complex>(m.entries().begin(), m.entries().end()));
}

int cmd_lemma(const LemmaArgs& a)
{
    const auto id = sh::parse_lemma_id(a.id);
    if (!id) {
        throw sh::Error(sh::ErrorKind::InvalidParams, "unknown lemma id '" + a.id + "'");
    }
    const sh::SemiHilbertSpace space = sh::make_space(sh::read_matrix_file(a.a_path));
    const sh::CVector va = read_vector_file(a.va_path);
    const sh::CVector vb = read_vector_file(a.vb_path);
    sh::CVector ve = read_vector_file(a.ve_path);
    if (a.normalize) {
        const double len = sh::a_norm_vec(space, ve);
        if (!(len > 0.0)) {
            throw sh::Error(sh::ErrorKind::NotUnitA, "e lies in ker A and cannot be normalized");
        }
        ve *= 1.0 / len;
    }
    std::optional<sh::CMatrix> t;
    if (!a.t_path.empty()) {
        t = sh::read_matrix_file(a.t_path);
    }
    const sh::LemmaReport report = sh::eval_lemma(space, va, vb, ve, *id, a.params, t ? &*t : nullptr);
    emit(
        a.out, sh::to_json(report),
        [&](std::ostream& os) {
            os << sh::kReportCsvHeader << '\n';
            sh::write_csv_row(os, report);
        },
        [&](std::ostream& os) { write_report_text(os, report); });
    return report.holds() ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- applications

struct SturmArgs {
    std::vector<std::size_t> n{1, 3, 7, 15, 31, 63};
    std::string profile = "constant";
    Output out;
};

sh::SturmConfig sturm_config(std::size_t n, const std::string& profile)
{
    sh::SturmConfig c = sh::SturmConfig::constant(n);
    if (profile == "smooth") {
        // p(x) = 1 + x, q(x) = x (1 - x), w(x) = 1 + x^2
        const double h = c.h();
        for (std::size_t j = 0; j <= n; ++j) {
            c.p[j] = 1.0 + (static_cast<double>(j) + 0.5) * h;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const double x = static_cast<double>(j + 1) * h;
            c.q[j] = x * (1.0 - x);
            c.w[j] = 1.0 + x * x;
        }
    }
    return c;
}

int cmd_sturm(const SturmArgs& a)
{
    std::vector<sh::SturmReport> reports;
    bool consistent = true;
    for (std::size_t n : a.n) {
        reports.push_back(sh::sturm_report(sturm_config(n, a.profile)));
        const auto& r = reports.back();
        // A_h = diag(w) makes A^{1/2} T A^{-1/2} symmetric, so w_A is its spectral radius.
        consistent = consistent && r.thm31.holds() && r.in6.holds() &&
                     std::abs(r.computed - r.spectral_radius) <= 1e-9 * r.spectral_radius;
    }
    sh::Json rows = sh::Json::array();
    for (const auto& r : reports) {
        rows.push_back(sh::to_json(r));
    }
    emit(
        a.out, sh::Json{{"profile", a.profile}, {"reports", rows}, {"consistent", consistent}},
        [&](std::ostream& os) {
            os << sh::kSturmCsvHeader << '\n';
            for (const auto& r : reports) {
                sh::write_csv_row(os, r);
            }
        },
        [&](std::ostream& os) {
            os << pad("N", 6) << pad("h", 12) << pad("w_A(T_h)", 14) << pad("closed form", 14) << pad("rel_err", 14)
               << pad("lambda_max", 14) << pad("rel_err", 14) << "THM31  IN6\n";
            for (const auto& r : reports) {
                os << pad(std::to_string(r.n), 6) << pad(fmt6(r.h), 12) << pad(fmt6(r.computed), 14)
                   << pad(r.exact ? fmt6(*r.exact) : "-", 14) << pad(r.exact ? fmt6(*r.rel_err()) : "-", 14)
                   << pad(r.exact ? fmt6(*r.largest_eigenvalue) : "-", 14)
                   << pad(r.exact ? fmt6(*r.rel_err_largest()) : "-", 14) << pad(r.thm31.holds() ? "holds" : "FAILS", 7)
                   << (r.in6.holds() ? "holds" : "FAILS") << '\n';
            }
            bool flagged = false;
            for (const auto& r : reports) {
                flagged = flagged || (r.rel_err() && *r.rel_err() > 1e-8);
            }
            if (flagged) {
                os << "note: 2h^-2(1 - cos(pi h)) is the smallest eigenvalue of T_h; the numerical radius is the "
                      "largest, 2h^-2(1 + cos(pi h))\n";
            }
        });
    return consistent ? kExitOk : kExitFailed;
}

int cmd_spin(const sh::SpinConfig& c, const Output& out)
{
    const sh::SpinReport r = sh::spin_report(c);
    const double trace = sh::trace(r.rho).real();
    const bool consistent = std::abs(trace - 1.0) <= 1e-12 && sh::is_hermitian(r.rho) &&
                            (!r.thm31 || r.thm31->holds());
    emit(
        out, sh::to_json(r), [&](std::ostream& os) { write_claims_csv(os, r.claims); },
        [&](std::ostream& os) {
            os << "J=" << fmt6(c.j) << " B=" << fmt6(c.b) << " beta=" << fmt6(c.beta) << "  (A = rho, S = sx (x) I)\n";
            os << "  w_rho(S)          = " << fmt6(r.w.value()) << '\n';
            os << "  ||S||_rho         = " << fmt6(r.norm.value()) << '\n';
            if (r.thm31) {
                os << "  ||S#S + SS#||_rho = " << fmt6(*r.n_sum) << '\n';
                os << "  w_rho(S^2)        = " << fmt6(*r.w_square) << '\n';
                os << "  THM31 rhs         = " << fmt6(r.thm31->rhs()) << "  (rhs^(1/4) = "
                   << fmt6(std::pow(r.thm31->rhs(), 0.25)) << ", " << (r.thm31->holds() ? "holds" : "FAILS")
                   << ")\n";
                os << "published chain (J=1, B=0, beta -> 0):\n";
                write_claims_text(os, r.claims);
            } else {
                os << "  S has no rho-adjoint at this temperature (rho is numerically singular)\n";
            }
        });
    return consistent ? kExitOk : kExitFailed;
}

int cmd_fock(const std::vector<std::size_t>& nmax, const Output& out)
{
    std::vector<sh::FockReport> reports;
    for (std::size_t m : nmax) {
        reports.push_back(sh::fock_report(m));
    }
    sh::Json rows = sh::Json::array();
    for (const auto& r : reports) {
        rows.push_back(sh::to_json(r));
    }
    emit(
        out, sh::Json{{"reports", rows}},
        [&](std::ostream& os) {
            os << "nmax,in_b_a,in_b_a_half,w_A,pairing,claimed_pairing,discrepancy,commutator_defect\n";
            for (const auto& r : reports) {
                os << r.nmax << ',' << (r.in_b_a ? "true" : "false") << ',' << (r.in_b_a_half ? "true" : "false")
                   << ',' << sh::full_precision(r.w.value()) << ',' << sh::full_precision(r.pairing) << ','
                   << sh::full_precision(r.pairing_claim.claimed) << ','
                   << (r.pairing_claim.discrepancy() ? "true" : "false") << ','
                   << sh::full_precision(r.commutator_defect) << '\n';
            }
        },
        [&](std::ostream& os) {
            os << "A = N = a^dag a, T = a + a^dag\n";
            os << pad("nmax", 6) << pad("T in B_A", 10) << pad("T in B_A^1/2", 14) << pad("w_A(T)", 10)
               << pad("<NT|1>,|1>>", 13) << pad("published", 11) << "[a,a^dag]_nn\n";
            for (const auto& r : reports) {
                os << pad(std::to_string(r.nmax), 6) << pad(r.in_b_a ? "yes" : "no", 10)
                   << pad(r.in_b_a_half ? "yes" : "no", 14) << pad(fmt6(r.w.value()), 10)
                   << pad(fmt6(r.pairing), 13)
                   << pad(fmt6(r.pairing_claim.claimed) + (r.pairing_claim.discrepancy() ? " (!)" : ""), 11)
                   << fmt6(r.commutator_defect) << '\n';
            }
            os << "(!) published pairing differs from the computed one\n";
        });
    return kExitOk;
}

struct RdiffArgs {
    std::size_t n = 16;
    std::optional<double> v;
    std::optional<double> fprime;
    std::uint64_t seed = 7;
    Output out;
};

int cmd_rdiff(const RdiffArgs& a)
{
    if (a.n < 1) {
        throw sh::Error(sh::ErrorKind::InvalidConfig, "--n must be >= 1");
    }
    // Unset profiles are drawn from the seed: V ~ U(0, 2), f' ~ U(-5, 5).
    sh::Rng rng(a.seed);
    std::vector<double> v(a.n);
    std::vector<double> fp(a.n);
    for (std::size_t j = 0; j < a.n; ++j) {
        v[j] = a.v ? *a.v : 2.0 * rng.uniform();
        fp[j] = a.fprime ? *a.fprime : 10.0 * rng.uniform() - 5.0;
    }
    const sh::ReactionDiffusionReport r = sh::reaction_diffusion_check(a.n, v, fp);
    emit(
        a.out, sh::to_json(r),
        [&](std::ostream& os) {
            os << "N,lhs,w_laplacian,sup_fprime,rhs,slack,holds\n"
               << r.n << ',' << sh::full_precision(r.w_t) << ',' << sh::full_precision(r.w_laplacian) << ','
               << sh::full_precision(r.sup_fprime) << ',' << sh::full_precision(r.rhs()) << ','
               << sh::full_precision(r.slack()) << ',' << (r.holds() ? "true" : "false") << '\n';
        },
        [&](std::ostream& os) {
            os << "N=" << r.n << "  A = diag(exp(-V)), T = Delta_h + diag(f')\n"
               << "  w_A(T)              = " << fmt6(r.w_t) << '\n'
               << "  w_A(Delta_h)        = " << fmt6(r.w_laplacian) << '\n'
               << "  sup |f'|            = " << fmt6(r.sup_fprime) << '\n'
               << "  w_A(Delta_h)+sup|f'| = " << fmt6(r.rhs()) << "  (" << (r.holds() ? "holds" : "FAILS")
               << ")\n";
        });
    return r.holds() ? kExitOk : kExitFailed;
}

void add_param_options(CLI::App* cmd, sh::BoundParams& p)
{
    cmd->add_option("--alpha", p.alpha, "alpha in [0, 1]")->capture_default_str();
    cmd->add_option("--beta", p.beta, "beta >= 0")->capture_default_str();
    cmd->add_option("--r", p.r, "power r >= 1")->capture_default_str();
    cmd->add_option("--n", p.n, "power n >= 1")->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical radius and seminorm inequalities on semi-Hilbertian spaces"};
    app.require_subcommand(1);

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "run the random bound and lemma suites");
    c_verify->add_option("--trials", verify.trials, "random operator trials")->capture_default_str();
    c_verify->add_option("--triples", verify.triples, "random vector triples for the lemmas")->capture_default_str();
    c_verify->add_option("--dims", verify.dims, "dimension range lo..hi")->capture_default_str();
    c_verify->add_option("--seed", verify.seed, "base seed; trial k uses seed + k")->capture_default_str();
    c_verify->add_option("--singular-prob", verify.singular_prob, "probability of a singular weight")
        ->capture_default_str();
    c_verify->add_option("--alpha", verify.grid.alpha, "alpha grid")->delimiter(',');
    c_verify->add_option("--beta", verify.grid.beta, "beta grid")->delimiter(',');
    c_verify->add_option("--r", verify.grid.r, "r grid")->delimiter(',');
    c_verify->add_option("--n", verify.grid.n, "n grid")->delimiter(',');
    add_output_options(c_verify, verify.out);

    Output examples_out;
    auto* c_examples = app.add_subcommand("paper-examples", "recompute the published worked examples");
    add_output_options(c_examples, examples_out);

    BoundArgs bound;
    auto* c_bound = app.add_subcommand("bound", "evaluate one bound on matrices read from files");
    c_bound->add_option("id", bound.id, "bound id, e.g. THM31")->required();
    c_bound->add_option("-A", bound.a_path, "weight matrix file")->required();
    c_bound->add_option("-T", bound.t_path, "operator T file")->required();
    c_bound->add_option("-S", bound.s_path, "operator S file (pair bounds)");
    c_bound->add_option("--tol", bound.tol, "membership tolerance")->capture_default_str();
    add_param_options(c_bound, bound.params);
    add_output_options(c_bound, bound.out);

    LemmaArgs lemma;
    auto* c_lemma = app.add_subcommand("lemma", "evaluate one vector lemma on vectors read from files");
    c_lemma->add_option("id", lemma.id, "lemma id, e.g. KR0")->required();
    c_lemma->add_option("-A", lemma.a_path, "weight matrix file")->required();
    c_lemma->add_option("--a-vec", lemma.va_path, "vector a file")->required();
    c_lemma->add_option("--b-vec", lemma.vb_path, "vector b file")->required();
    c_lemma->add_option("--e-vec", lemma.ve_path, "vector e file, ||e||_A = 1")->required();
    c_lemma->add_option("-T", lemma.t_path, "operator file (HOLDER_QHB)");
    c_lemma->add_flag("--normalize", lemma.normalize, "rescale e to ||e||_A = 1");
    add_param_options(c_lemma, lemma.params);
    add_output_options(c_lemma, lemma.out);

    SturmArgs sturm;
    auto* c_sturm = app.add_subcommand("sturm", "discrete Sturm-Liouville operator");
    c_sturm->add_option("--n", sturm.n, "interior grid sizes")->delimiter(',');
    c_sturm->add_option("--profile", sturm.profile, "coefficients")
        ->check(CLI::IsMember({"constant", "smooth"}))
        ->capture_default_str();
    add_output_options(c_sturm, sturm.out);

    sh::SpinConfig spin;
    Output spin_out;
    auto* c_spin = app.add_subcommand("spin", "two-spin thermal state as weight");
    c_spin->add_option("--j", spin.j, "coupling J")->capture_default_str();
    c_spin->add_option("--b", spin.b, "field B")->capture_default_str();
    c_spin->add_option("--beta", spin.beta, "inverse temperature")->capture_default_str();
    add_output_options(c_spin, spin_out);

    std::vector<std::size_t> nmax{8};
    Output fock_out;
    auto* c_fock = app.add_subcommand("fock", "truncated Fock space with the number operator as weight");
    c_fock->add_option("--nmax", nmax, "truncation levels")->delimiter(',');
    add_output_options(c_fock, fock_out);

    RdiffArgs rdiff;
    auto* c_rdiff = app.add_subcommand("rdiff", "linearized reaction-diffusion subadditivity check");
    c_rdiff->add_option("--n", rdiff.n, "interior grid size")->capture_default_str();
    c_rdiff->add_option("--v", rdiff.v, "constant potential V (random when unset)");
    c_rdiff->add_option("--fprime", rdiff.fprime, "constant f' (random when unset)");
    c_rdiff->add_option("--seed", rdiff.seed, "seed for random profiles")->capture_default_str();
    add_output_options(c_rdiff, rdiff.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*c_verify) return cmd_verify(verify);
        if (*c_examples) return cmd_paper_examples(examples_out);
        if (*c_bound) return cmd_bound(bound);
        if (*c_lemma) return cmd_lemma(lemma);
        if (*c_sturm) return cmd_sturm(sturm);
        if (*c_spin) return cmd_spin(spin, spin_out);
        if (*c_fock) return cmd_fock(nmax, fock_out);
        if (*c_rdiff) return cmd_rdiff(rdiff);
    } catch (const sh::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
