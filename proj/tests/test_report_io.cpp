#include <doctest.h>

#include <sstream>

#include "jumploci/braid.hpp"
#include "jumploci/character_variety.hpp"
#include "jumploci/corpus.hpp"
#include "jumploci/deletion.hpp"
#include "jumploci/report_io.hpp"
#include "support.hpp"

using namespace jumploci;
using testing::chr;
using testing::error_code_of;

TEST_CASE("braid json") {
  const auto b = braid_from_json(Json::parse(R"({"strands": 3, "word": [1, -2, 1]})"));
  CHECK(b == BraidWord(3, {1, -2, 1}));
  CHECK(braid_from_json(braid_to_json(b)) == b);
  CHECK(error_code_of([] { braid_from_json(Json::parse(R"({"strands": 2, "word": [2]})")); }) == Errc::parse);
  CHECK(error_code_of([] { braid_from_json(Json::parse(R"({"strands": 2, "word": [0]})")); }) == Errc::parse);
  CHECK(error_code_of([] { braid_from_json(Json::parse(R"({"word": [1]})")); }) == Errc::parse);
  try {
    braid_from_json(Json::parse(R"({"strands": 2, "word": [1, "x"]})"));
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("braid.word[1]") != std::string::npos);
  }
}

TEST_CASE("branch json") {
  const auto j = Json::parse(R"({"name": "cusp", "poly": [[1, 0, 2], [-1, 3, 0]],
                                 "param": {"x": [[1, 2]], "y": [[1, 3]], "trunc": 8}})");
  const auto b = branch_from_json(j);
  CHECK(b.param->precision() == std::optional<int>(8));
  CHECK(b.poly->terms.size() == 2);
  CHECK(branch_from_json(branch_to_json(b)) == b);

  const auto exact = branch_from_json(Json::parse(R"({"param": {"x": [[1, 1]], "y": [["1/2", 2]]}})"));
  CHECK(exact.param->precision() == std::nullopt);
  CHECK(exact.param->y.coeffs().back() == mpq_class(1, 2));
  CHECK(branch_from_json(branch_to_json(exact)) == exact);

  CHECK(error_code_of([] { branch_from_json(Json::parse(R"({"param": {"x": [[1, 2]], "y": [[1, 4]]}})")); }) ==
        Errc::parse);
  CHECK(error_code_of([] { branch_from_json(Json::parse(R"({"param": {"x": [[1, 9]], "y": [], "trunc": 5}})")); }) ==
        Errc::parse);
}

TEST_CASE("linking and presentation json use 1-based labels") {
  const auto l = linking_from_json(Json::parse("[[0, 3], [3, 0]]"));
  CHECK(l.at(0, 1) == 3);
  CHECK(linking_to_json(l) == Json::parse("[[0, 3], [3, 0]]"));
  CHECK(error_code_of([] { linking_from_json(Json::parse("[[0, 1], [2, 0]]")); }) == Errc::parse);

  const auto p = artin_presentation(BraidWord(3, {1, 2, 1, 1, 2, 1, 1, 2, 1}));
  const auto j = presentation_to_json(p);
  CHECK(j["labels"] == Json::parse("[1, 2, 1]"));
  const auto back = presentation_from_json(j);
  CHECK(back.labels == p.labels);
  CHECK(back.relators == p.relators);
  CHECK(back.components == p.components);
}

TEST_CASE("input bundle") {
  const auto bundle = input_from_json(Json::parse(R"({"braid": {"strands": 2, "word": [1, 1]},
      "branches": [{"poly": [[1, 0, 1], [-1, 1, 0]]}, {"param": {"x": [[1, 1]], "y": [[-1, 1]]}}],
      "linking": [[0, 1], [1, 0]]})"));
  CHECK(bundle.braid == BraidWord(2, {1, 1}));
  CHECK(bundle.branches->size() == 2);
  CHECK(bundle.linking->at(0, 1) == 1);
  CHECK_FALSE(bundle.presentation.has_value());
  CHECK(error_code_of([] { input_from_json(Json::parse("[1]")); }) == Errc::parse);
}

TEST_CASE("scan reports round-trip") {
  const auto report = scan(artin_presentation(contact_pair_braid(2)), 4, {}, "tangent-pair");
  const auto j = scan_report_to_json(report);
  CHECK(scan_report_from_json(j) == report);
  CHECK(scan_report_to_json(scan_report_from_json(Json::parse(j.dump()))).dump() == j.dump());

  std::ostringstream csv;
  write_scan_csv(csv, report);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "q_1,q_2,h0,h1,h2");
  std::string first;
  std::getline(lines, first);
  CHECK(first == "0,0,1,2,1");
}

TEST_CASE("verification reports round-trip") {
  const auto e = corpus("cusp-line");
  const auto report = verify_deletion(make_scenario("cusp-line", e.braid, {e.default_deleted}), 6);
  const auto j = verification_report_to_json(report);
  const auto back = verification_report_from_json(Json::parse(j.dump()));
  CHECK(verification_report_to_json(back).dump() == j.dump());
  CHECK(back.passed == report.passed);
  CHECK(back.rows.size() == report.rows.size());
  CHECK(back.deleted == report.deleted);

  std::ostringstream table;
  write_verification_table(table, report);
  CHECK(table.str().find("PASS") != std::string::npos);
}

TEST_CASE("characters and dims json") {
  CHECK(character_to_json(chr("0,1/3")) == Json::parse(R"(["0", "1/3"])"));
  CHECK(character_from_json(Json::parse(R"([0, "2/3"])")) == chr("0,2/3"));
  CHECK(error_code_of([] { character_from_json(Json::parse(R"(["1/0"])")); }) == Errc::invalid_exponent);
  const CohomologyDims d{0, 1, 1};
  CHECK(dims_from_json(dims_to_json(d)) == d);
}
