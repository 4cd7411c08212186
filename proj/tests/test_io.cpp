#include "semihilbert/io.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace semihilbert;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvalidInput;
}

} // namespace

TEST_CASE("matrix JSON round-trip is exact")
{
    Rng rng(1);
    for (std::size_t r = 1; r <= 4; ++r) {
        for (std::size_t c = 1; c <= 4; ++c) {
            const CMatrix m = rng.gaussian_matrix(r, c);
            const CMatrix back = matrix_from_json(parse_json_text(to_json(m).dump(), "test"));
            CHECK(back == m);
        }
    }
    const CMatrix z{{Complex(0.1, -1e-300), 1e300}};
    CHECK(matrix_from_json(parse_json_text(to_json(z).dump(), "test")) == z);
}

TEST_CASE("matrix JSON layout")
{
    const Json j = to_json(CMatrix{{1.0, Complex(2.0, -3.0)}});
    CHECK(j.dump() == R"({"rows":1,"cols":2,"data":[[1.0,0.0],[2.0,-3.0]]})");
    // Bare numbers are real entries.
    const CMatrix m = matrix_from_json(Json::parse(R"({"rows":2,"cols":1,"data":[4, [0, 1]]})"));
    CHECK(m(0, 0) == Complex(4.0, 0.0));
    CHECK(m(1, 0) == Complex(0.0, 1.0));
}

TEST_CASE("malformed matrix documents are Parse errors")
{
    auto parse = [](const std::string& text) { return matrix_from_json(parse_json_text(text, "test")); };
    CHECK(kind_of([&] { parse(R"({"rows":2,"cols":2,"data":[[1,0],[0,0],[1,0]]})"); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { parse(R"({"rows":1,"cols":1})"); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { parse(R"({"rows":-1,"cols":1,"data":[]})"); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { parse(R"({"rows":1,"cols":1,"data":[[1,2,3]]})"); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { parse(R"({"rows":1,"cols":1,"data":["x"]})"); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { parse(R"([1, 2)"); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { parse(R"(42)"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { read_matrix_file("/nonexistent/matrix.json"); }) == ErrorKind::Parse);
}

TEST_CASE("space JSON carries the tolerance")
{
    const SemiHilbertSpace s = make_space(CMatrix{{1.0, -1.0}, {-1.0, 2.0}}, 1e-7);
    const SemiHilbertSpace back = space_from_json(to_json(s));
    CHECK(back.A() == s.A());
    CHECK(back.tol() == 1e-7);
    const SemiHilbertSpace plain = space_from_json(to_json(s.A()));
    CHECK(plain.tol() == kDefaultSpaceTolerance);
    CHECK(kind_of([&] {
              Json j = to_json(s);
              j["tol"] = "small";
              space_from_json(j);
          }) == ErrorKind::Parse);
}

TEST_CASE("non-finite values serialize as labels")
{
    CHECK(number_or_label(1.5) == Json(1.5));
    CHECK(number_or_label(std::numeric_limits<double>::infinity()) == Json("INFINITE"));
    CHECK(number_or_label(std::nan("")) == Json("NaN"));
    const Json r = to_json(RadiusResult::infinite());
    CHECK(r["value"] == "INFINITE");
    CHECK(r["finite"] == false);
    CHECK(full_precision(std::numeric_limits<double>::infinity()) == "INFINITE");
}

TEST_CASE("report CSV rows leave unused parameters empty")
{
    std::ostringstream os;
    write_csv_row(os, BoundReport(BoundId::IN6, {0.5, 1.0, 1.0, 2}, 16.0, 22.5, kBoundTolerance));
    CHECK(os.str() == "IN6,,,,,16,22.5,6.5,true\n");

    os.str("");
    write_csv_row(os, BoundReport(BoundId::THM32, {0.5, 1.0, 2.0, 2}, 1.0, 0.5, kBoundTolerance));
    CHECK(os.str() == "THM32,0.5,1,2,,1,0.5,-0.5,false\n");

    os.str("");
    write_csv_row(os, BoundReport(BoundId::IN2_POWER, {0.0, 0.0, 1.0, 3}, 0.1, 0.75, kBoundTolerance));
    CHECK(os.str() == "IN2_POWER,,,,3,0.10000000000000001,0.75,0.65000000000000002,true\n");

    const std::string header = kReportCsvHeader;
    CHECK(header == "id,alpha,beta,r,n,lhs,rhs,slack,holds");
}

TEST_CASE("bound report JSON")
{
    const Json j = to_json(BoundReport(BoundId::THM31, {0.5, 1.0, 2.0, 3}, 16.0, 20.9375, kBoundTolerance));
    CHECK(j["id"] == "THM31");
    CHECK(j["params"].size() == 2);
    CHECK(j["params"]["alpha"] == 0.5);
    CHECK(j["holds"] == true);
    CHECK(j["slack"] == 4.9375);
}

TEST_CASE("verification summary JSON echoes argmin operands")
{
    VerifyConfig c;
    c.trials = 3;
    const Json j = to_json(verify_random(c));
    CHECK(j["kind"] == "bounds");
    CHECK(j["config"]["trials"] == 3);
    CHECK(j["violations"] == 0);
    CHECK(j["per_id"].size() == kAllBoundIds.size());
    const Json& first = j["per_id"][0];
    REQUIRE(first.contains("argmin"));
    const CMatrix a = matrix_from_json(first["argmin"]["operands"]["A"]);
    CHECK(a.is_square());
    CHECK(j.contains("identity_residuals"));
}

TEST_CASE("Sturm CSV row")
{
    std::ostringstream os;
    write_csv_row(os, sturm_report(SturmConfig::constant(1)));
    const std::string row = os.str();
    CHECK(row.rfind("1,0.5,8,", 0) == 0);
    CHECK(std::count(row.begin(), row.end(), ',') == 6);
    const std::string header = kSturmCsvHeader;
    CHECK(header.rfind("N,h,computed,exact,rel_err", 0) == 0);
}
