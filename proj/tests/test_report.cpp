#include <doctest.h>

#include <random>

#include "eicp/error.hpp"
#include "eicp/report.hpp"
#include "support.hpp"

using namespace eicp;
using namespace testing_support;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

ReportOptions with_spectrum() {
  ReportOptions o;
  o.want_spectrum = true;
  return o;
}

}  // namespace

TEST_CASE("first example report verdicts") {
  const Report r = build_report(example1(), with_spectrum());
  CHECK(r.verdicts.spectrum_in_k1 == true);
  CHECK(r.verdicts.spectrum_in_k1_cop == true);
  CHECK(r.verdicts.spectrum_in_k2 == true);
  CHECK(r.verdicts.spectrum_in_gamma == true);
  CHECK(r.verdicts.k1_cop_in_k1 == true);
  CHECK(r.verdicts.k2_hull_in_k1_cop_hull == true);
  // Rows 1 and 2 give a two-row interval spanning the gap in K1'.
  CHECK(r.verdicts.k2_intervals_in_k1_cop == false);
  CHECK(r.tolerances.feasibility == 1e-8 * example1().scale());
}

TEST_CASE("family reports") {
  const Report a = build_report(all_ones_family(4, 2.0).pair);
  REQUIRE(a.k1);
  REQUIRE(a.k2);
  REQUIRE(a.gamma);
  CHECK(rel_err(a.k1->hull().lo(), a.k2->hull().lo()) <= 1e-9);
  CHECK(rel_err(a.k1->hull().hi(), a.k2->hull().hi()) <= 1e-9);
  CHECK(a.gamma->lo() < a.k1->hull().lo());

  const Report b = build_report(proportional_family(4, 2.0, 1.0, 1.5).pair);
  CHECK(b.k2->hull().lo() < b.gamma->lo());
  CHECK(b.gamma->hi() < b.k2->hull().hi());
}

TEST_CASE("report JSON round trip") {
  std::mt19937_64 rng(71);
  std::vector<Report> reports{build_report(example1(), with_spectrum())};
  ReportOptions shifted = with_spectrum();
  shifted.shift_mode = ShiftMode::Auto;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = uniform_n(rng, 1, 5);
    const MatrixPair p(random_symmetric(rng, n, -2.0, 2.0), random_sdd(rng, n));
    reports.push_back(build_report(p, trial % 2 ? shifted : with_spectrum()));
  }
  for (const Report& r : reports) {
    const std::string text = report_to_json(r);
    const Report back = report_from_json(text);
    CHECK(back == r);
    CHECK(report_to_json(back) == text);
    CHECK(report_from_json(report_to_json(r, -1)) == r);
  }
  CHECK(code_of([] { report_from_json("{}"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { report_from_json("not json"); }) == ErrorCode::ParseError);
}

TEST_CASE("shifted reports keep spectrum membership") {
  std::mt19937_64 rng(72);
  ReportOptions o = with_spectrum();
  o.shift_mode = ShiftMode::Auto;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform_n(rng, 1, 5);
    const MatrixPair p(random_symmetric(rng, n, -2.0, 2.0), random_sdd(rng, n));
    const Report r = build_report(p, o);
    CHECK(r.shift > 0.0);
    REQUIRE(r.k2);
    CHECK(r.verdicts.spectrum_in_k1 == true);
    CHECK(r.verdicts.spectrum_in_k1_cop == true);
    CHECK(r.verdicts.spectrum_in_k2 == true);
    CHECK(r.verdicts.spectrum_in_gamma == true);
    if (p.cert_a().copositivity.copositive()) {
      const Report plain = build_report(p, with_spectrum());
      CHECK(plain.verdicts.spectrum_in_k2 == r.verdicts.spectrum_in_k2);
    }
  }
}

TEST_CASE("required sets raise hypothesis violations") {
  const double a[] = {1, -2, -2, 1};
  const MatrixPair p(SymMatrix(2, a), SymMatrix::identity(2));
  ReportOptions o;
  o.require_sets = true;
  CHECK(code_of([&] { build_report(p, o); }) == ErrorCode::HypothesisViolation);
  o.require_sets = false;
  const Report r = build_report(p, o);
  CHECK(r.k1);
  CHECK_FALSE(r.k2);
  o.require_sets = true;
  o.shift_mode = ShiftMode::Auto;
  CHECK(build_report(p, o).k2);
}

TEST_CASE("instance parsing") {
  const MatrixPair p = parse_instance(R"({"n": 2, "A": [[2, -1], [-1, 3]]})");
  CHECK(p.b() == SymMatrix::identity(2));
  CHECK(p.cert_b().is_sdd);
  CHECK(p.cert_b().is_pd);

  const MatrixPair tiny = parse_instance(R"({"n": 2, "A": [[2, 1], [1.0000000000001, 3]]})");
  CHECK(tiny.a()(0, 1) == tiny.a()(1, 0));

  CHECK(code_of([] { parse_instance(R"({"n": 2, "A": [[2, 1], [1.5, 3]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_instance(R"({"n": 2, "A": [[2, 1]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_instance(R"({"n": 2, "A": [[2, 1], [1, "x"]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_instance(R"({"A": [[1]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_instance("[1, 2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_instance_file("/nonexistent/file.json"); }) == ErrorCode::ParseError);

  const MatrixPair e = example1();
  CHECK(parse_instance(instance_to_json(e.a(), e.b())) == e);
}

TEST_CASE("text rendering") {
  const std::string text = render_text(build_report(example1(), with_spectrum()));
  CHECK(text.find("K2  = [0.822107, 2.36464]") != std::string::npos);
  CHECK(text.find("support {1,2,3}") != std::string::npos);
  CHECK(text.find("Pi    ") != std::string::npos);
}
