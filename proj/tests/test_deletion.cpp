#include <doctest.h>

#include "jumploci/braid.hpp"
#include "jumploci/character_variety.hpp"
#include "jumploci/corpus.hpp"
#include "jumploci/deletion.hpp"
#include "support.hpp"

using namespace jumploci;
using testing::chr;
using testing::error_code_of;

namespace {

CohomologyDims dims(std::size_t h0, std::size_t h1, std::size_t h2) { return {h0, h1, h2}; }

const LinkingMatrix kHopf({{0, 1}, {1, 0}});
const LinkingMatrix kTangent({{0, 2}, {2, 0}});
const LinkingMatrix kLines({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

}  // namespace

TEST_CASE("meridian scalar examples") {
  const auto trivial = meridian_scalar(TorsionCharacter::trivial(3), 0, kLines);
  CHECK(trivial.lambda.is_one());
  CHECK(trivial.circle_dim == 1);

  const auto hopf = meridian_scalar(chr("0,1/3"), 0, kHopf);
  CHECK(hopf.lambda == CycScalar::zeta(3));
  CHECK(hopf.circle_dim == 0);
  CHECK(hopf.exponent == Exponent(1, 3));

  const auto tangent = meridian_scalar(chr("0,1/2"), 0, kTangent);
  CHECK(tangent.lambda.is_one());
  CHECK(tangent.is_trivial());
  CHECK(is_zero(tangent.exponent));

  CHECK(meridian_scalar(chr("1/3,0"), 1, LinkingMatrix({{0, 3}, {3, 0}})).is_trivial());
  CHECK(error_code_of([] { meridian_scalar(chr("1/3,0"), 0, kHopf); }) == Errc::hypothesis_violation);
  CHECK(error_code_of([] { meridian_scalar(chr("0,0,0"), 0, kHopf); }) == Errc::arity);
}

TEST_CASE("predict_deleted_h1 examples") {
  CHECK(predict_deleted_h1(1, CycScalar::zeta(3)) == 1);
  CHECK(predict_deleted_h1(1, CycScalar::one()) == 0);
  for (std::size_t r = 2; r <= 5; ++r) CHECK(predict_deleted_h1(r, CycScalar::one()) == r - 1);
  CHECK(error_code_of([] { predict_deleted_h1(0, CycScalar::one()); }) == Errc::contradiction);
}

TEST_CASE("predict_multi_deleted examples") {
  const auto lines = artin_presentation(concurrent_lines_braid(3));
  const auto hopf = artin_presentation(BraidWord(2, {1, 1}));
  const auto unknot = artin_presentation(BraidWord(1, {}));

  const auto t = chr("0,1/3,2/3");
  REQUIRE(twisted_dims(lines, t) == dims(0, 1, 1));
  const auto predicted = predict_multi_deleted(dims(0, 1, 1), t, {0}, kLines);
  CHECK(predicted == dims(0, 0, 0));
  CHECK(predicted == twisted_dims(hopf, chr("1/3,2/3")));
  CHECK(predict_multi_deleted(dims(0, 1, 1), t, {0}, kLines) ==
        dims(0, predict_deleted_h1(1, meridian_scalar(t, 0, kLines).lambda), 0));

  const auto u = chr("0,0,1/3");
  const auto dims_u = twisted_dims(lines, u);
  CHECK(meridian_scalar(u, 0, kLines).lambda == CycScalar::zeta(3));
  CHECK(meridian_scalar(u, 1, kLines).lambda == CycScalar::zeta(3));
  const auto both = predict_multi_deleted(dims_u, u, {0, 1}, kLines);
  CHECK(both.h1 == dims_u.h1);
  CHECK(both == twisted_dims(unknot, chr("1/3")));
}

TEST_CASE("trivial character follows the b1 rule") {
  CHECK(predict_multi_deleted(dims(1, 3, 2), TorsionCharacter::trivial(3), {1}, kLines) == dims(1, 2, 1));
  CHECK(predict_multi_deleted(dims(1, 3, 2), TorsionCharacter::trivial(3), {0, 2}, kLines) == dims(1, 1, 0));
}

TEST_CASE("routes") {
  const auto lines = artin_presentation(concurrent_lines_braid(3));
  const auto t = chr("0,0,1/3");
  const auto d = twisted_dims(lines, t);
  CHECK(error_code_of([&] { predict_multi_deleted(d, t, {0}, kLines, Route::strict); }) ==
        Errc::hypothesis_violation);
  const auto expected = twisted_dims(artin_presentation(concurrent_lines_braid(2)), chr("0,1/3"));
  CHECK(predict_multi_deleted(d, t, {0}, kLines, Route::enlarged) == expected);
  CHECK(predict_multi_deleted(d, t, {0}, kLines, Route::direct) == expected);
  CHECK(to_string(Route::enlarged) == "enlarged");

  CHECK(error_code_of([] { predict_multi_deleted(dims(0, 1, 1), chr("1/3,0,0"), {0}, kLines); }) ==
        Errc::hypothesis_violation);
  CHECK(error_code_of([] { predict_multi_deleted(dims(1, 3, 2), TorsionCharacter::trivial(3), {0, 1, 2}, kLines);
        }) == Errc::component_underflow);
  CHECK(error_code_of([] { predict_multi_deleted(dims(0, 0, 0), chr("0,1/3,2/3"), {0}, kLines); }) ==
        Errc::contradiction);
}

TEST_CASE("iterated deletions agree with one multi-deletion") {
  const std::vector<std::pair<std::string, std::int64_t>> cases{{"three-lines", 6}, {"four-lines", 4}};
  for (const auto& [name, order] : cases) {
    const auto e = corpus(name);
    const auto p = artin_presentation(e.braid);
    const auto l = linking_matrix(e.braid);
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = i + 1; j < l.size(); ++j) {
        for (const auto& t : grid(l.size(), order, kDefaultBudget, {i, j})) {
          const auto d = twisted_dims(p, t);
          CHECK(predict_iterated(d, t, {i, j}, l) == predict_multi_deleted(d, t, {i, j}, l));
        }
      }
    }
  }
}

TEST_CASE("transform_jump_locus examples") {
  const auto tangent = scan(artin_presentation(contact_pair_braid(2)), 4);
  const auto predicted = transform_jump_locus(tangent, 1, kTangent, 0);
  CHECK(predicted == std::vector<TorsionCharacter>{chr("0")});
  CHECK(transform_jump_locus(tangent, 5, kTangent, 0).empty());

  const auto lines = scan(artin_presentation(concurrent_lines_braid(3)), 3);
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto out = transform_jump_locus(lines, k, kLines, 0);
    const bool has_trivial = std::find(out.begin(), out.end(), TorsionCharacter::trivial(2)) != out.end();
    CHECK(has_trivial == (k <= 2));
  }
}

TEST_CASE("transform_jump_locus refuses partial coverage") {
  const auto p = artin_presentation(concurrent_lines_braid(3));
  ScanOptions other;
  other.fixed_trivial = {1};
  const auto wrong_slice = scan(p, 3, other);
  CHECK(error_code_of([&] { transform_jump_locus(wrong_slice, 1, kLines, 0); }) == Errc::coverage_mismatch);

  auto thinned = scan(p, 3);
  thinned.records.erase(thinned.records.begin() + 1);
  CHECK(error_code_of([&] { transform_jump_locus(thinned, 1, kLines, 0); }) == Errc::coverage_mismatch);
}

TEST_CASE("verify_deletion examples") {
  const auto hopf = verify_deletion(make_scenario("hopf", BraidWord(2, {1, 1}), {0}), 6);
  CHECK(hopf.passed);
  CHECK(hopf.rows.size() == 6);
  CHECK(hopf.mismatches() == 0);

  const auto lines = verify_deletion(make_scenario("three-lines", concurrent_lines_braid(3), {0}), 3);
  CHECK(lines.passed);
  CHECK(lines.rows.size() == 9);
  bool saw_drop = false;
  for (const auto& row : lines.rows) {
    if (row.character == chr("0,1/3,2/3")) {
      saw_drop = true;
      CHECK(row.dims_u.h1 == 1);
      CHECK(row.computed->h1 == 0);
      CHECK(row.match);
    }
  }
  CHECK(saw_drop);

  const auto e = corpus("cusp-line");
  const auto cusp_line = verify_deletion(make_scenario("cusp-line", e.braid, {e.default_deleted}), 6);
  CHECK(cusp_line.passed);
  CHECK(cusp_line.rows.size() == 6);
  CHECK(cusp_line.set_checks.size() == 2);
}

TEST_CASE("make_scenario validation") {
  CHECK(error_code_of([] { make_scenario("x", BraidWord(2, {1}), {0}); }) == Errc::component_underflow);
  CHECK(error_code_of([] { make_scenario("x", BraidWord(2, {1, 1}), {2}); }) == Errc::invalid_component);
  CHECK(error_code_of([] { make_scenario("x", BraidWord(2, {1, 1}), {0, 1}); }) == Errc::component_underflow);
  CHECK(error_code_of([] { make_scenario("x", concurrent_lines_braid(3), {1, 1}); }) == Errc::invalid_component);
  const auto s = make_scenario("x", concurrent_lines_braid(4), {3, 1});
  CHECK(s.deleted == std::vector<std::size_t>{1, 3});
  CHECK(s.deleted_braid == BraidWord(2, {1, 1}));
}

TEST_CASE("a wrong linking matrix is reported, not hidden") {
  const auto s = make_scenario("bad", contact_pair_braid(2), {0}, kHopf);
  const auto report = verify_deletion(s, 4);
  CHECK_FALSE(report.passed);
  CHECK(report.mismatches() > 0);
}
