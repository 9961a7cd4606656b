#include <doctest.h>

#include "jumploci/braid.hpp"
#include "jumploci/corpus.hpp"
#include "jumploci/puiseux.hpp"
#include "support.hpp"

using namespace jumploci;
using testing::error_code_of;

namespace {

BivariatePoly poly(std::vector<std::tuple<long, int, int>> terms) {
  BivariatePoly f;
  for (const auto& [c, i, j] : terms) f.terms.push_back({mpq_class(c), i, j});
  return f;
}

Series series(std::vector<std::pair<long, int>> terms, std::optional<int> precision = std::nullopt) {
  std::vector<std::pair<mpq_class, int>> q;
  for (const auto& [c, e] : terms) q.emplace_back(mpq_class(c), e);
  return Series(q, precision);
}

Parametrization param(Series x, Series y) { return {std::move(x), std::move(y)}; }

}  // namespace

TEST_CASE("intersection multiplicity examples") {
  const auto y = poly({{1, 0, 1}});
  CHECK(error_code_of([&] { intersection_multiplicity(y, param(series({{1, 1}}), series({}))); }) ==
        Errc::non_reduced_input);
  CHECK(intersection_multiplicity(poly({{1, 0, 1}, {-1, 1, 0}}), param(series({{1, 1}}), series({{-1, 1}}))) == 1);
  CHECK(intersection_multiplicity(y, param(series({{1, 2}}), series({{1, 3}}))) == 3);
  CHECK(intersection_multiplicity(poly({{1, 0, 1}, {-1, 2, 0}}), param(series({{1, 1}}), series({{-1, 2}}))) == 2);
}

TEST_CASE("truncation is never silently exceeded") {
  const auto tangent = poly({{1, 0, 1}, {-1, 2, 0}});
  CHECK(intersection_multiplicity(tangent, param(series({{1, 1}}), series({{-1, 2}}, 3))) == 2);
  CHECK(error_code_of([&] { intersection_multiplicity(tangent, param(series({{1, 1}}), series({}, 2))); }) ==
        Errc::insufficient_truncation);
  // A truncated zero series cannot be told apart from a deeper contact.
  CHECK(error_code_of([&] { intersection_multiplicity(poly({{1, 0, 1}}), param(series({{1, 1}}), series({}, 5)));
        }) == Errc::insufficient_truncation);
  CHECK(error_code_of([] { series({{1, 4}}, 4); }) == Errc::parse);
  CHECK(error_code_of([] { series({{1, -1}}); }) == Errc::parse);
}

TEST_CASE("branch validation") {
  Branch ok{"cusp", poly({{1, 0, 2}, {-1, 3, 0}}), param(series({{1, 2}}), series({{1, 3}}))};
  CHECK_NOTHROW(ok.validate());
  Branch non_primitive{"double", std::nullopt, param(series({{1, 2}}), series({{1, 4}}))};
  CHECK(error_code_of([&] { non_primitive.validate(); }) == Errc::parse);
  Branch off_origin{"shifted", std::nullopt, param(series({{1, 0}, {1, 1}}), series({{1, 1}}))};
  CHECK(error_code_of([&] { off_origin.validate(); }) == Errc::parse);
  Branch empty{"empty", std::nullopt, std::nullopt};
  CHECK(error_code_of([&] { empty.validate(); }) == Errc::parse);

  Branch line{"line", poly({{1, 0, 1}}), param(series({{1, 1}}), series({}))};
  CHECK(error_code_of([&] { intersection_multiplicity(line, line); }) == Errc::non_reduced_input);
}

TEST_CASE("linking matrix from branch examples") {
  std::vector<Branch> lines;
  for (long a : {0L, 1L, -1L}) {
    lines.push_back({"line", poly({{1, 0, 1}, {-a, 1, 0}}), param(series({{1, 1}}), series({{a, 1}}))});
  }
  CHECK(linking_matrix_from_branches(lines).rows() ==
        std::vector<std::vector<std::int64_t>>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

  std::vector<Branch> tangent{
      {"up", poly({{1, 0, 1}, {-1, 2, 0}}), param(series({{1, 1}}), series({{1, 2}}))},
      {"down", poly({{1, 0, 1}, {1, 2, 0}}), param(series({{1, 1}}), series({{-1, 2}}))}};
  CHECK(linking_matrix_from_branches(tangent).at(0, 1) == 2);

  std::vector<Branch> cusp_line{
      {"cusp", poly({{1, 0, 2}, {-1, 3, 0}}), param(series({{1, 2}}), series({{1, 3}}))},
      {"line", poly({{1, 0, 1}}), param(series({{1, 1}}), series({}))}};
  CHECK(linking_matrix_from_branches(cusp_line).at(0, 1) == 3);
}

TEST_CASE("corpus branch data: symmetry, resultants and agreement with braids") {
  for (const auto& name : corpus_names()) {
    const auto entry = corpus(name);
    if (entry.branches.empty()) continue;
    CAPTURE(name);
    const auto& br = entry.branches;
    for (std::size_t i = 0; i < br.size(); ++i) {
      for (std::size_t j = i + 1; j < br.size(); ++j) {
        REQUIRE(br[i].poly);
        REQUIRE(br[j].poly);
        const auto ij = intersection_multiplicity(br[i], br[j]);
        CHECK(ij == intersection_multiplicity(br[j], br[i]));
        CHECK(ij == resultant_valuation(*br[i].poly, *br[j].poly));
        CHECK(ij >= 1);
      }
    }
    const auto from_branches = linking_matrix_from_branches(br);
    CHECK(from_branches == linking_matrix(entry.braid));
    CHECK(from_branches == entry.expected_linking);
  }
}

TEST_CASE("resultant valuation") {
  CHECK(resultant_valuation(poly({{1, 0, 1}, {-2, 1, 0}}), poly({{1, 0, 1}, {-3, 1, 0}})) == 1);
  CHECK(resultant_valuation(poly({{1, 0, 2}, {-1, 3, 0}}), poly({{1, 0, 1}})) == 3);
  CHECK(resultant_valuation(poly({{1, 0, 1}, {-1, 2, 0}}), poly({{1, 0, 1}, {1, 2, 0}})) == 2);
  // Cusp against the parabola y = x^2: Res_y = x^4 - x^3.
  CHECK(resultant_valuation(poly({{1, 0, 2}, {-1, 3, 0}}), poly({{1, 0, 1}, {-1, 2, 0}})) == 3);
  CHECK(intersection_multiplicity(poly({{1, 0, 1}, {-1, 2, 0}}), param(series({{1, 2}}), series({{1, 3}}))) == 3);
  CHECK(error_code_of([&] { resultant_valuation(poly({{1, 0, 1}}), poly({{2, 0, 1}})); }) == Errc::non_reduced_input);
}
