#include "jumploci/corpus.hpp"

#include "jumploci/error.hpp"

namespace jumploci {

namespace {

Series exact(std::vector<std::pair<mpq_class, int>> terms) { return Series(std::move(terms), std::nullopt); }

// y = a x
Branch line(std::string name, long slope) {
  Branch b;
  b.name = std::move(name);
  b.poly = BivariatePoly{{{mpq_class(1), 0, 1}, {mpq_class(-slope), 1, 0}}};
  b.param = Parametrization{exact({{1, 1}}), exact({{slope, 1}})};
  return b;
}

// y = c x^2
Branch parabola(std::string name, long c) {
  Branch b;
  b.name = std::move(name);
  b.poly = BivariatePoly{{{mpq_class(1), 0, 1}, {mpq_class(-c), 2, 0}}};
  b.param = Parametrization{exact({{1, 1}}), exact({{c, 2}})};
  return b;
}

// y^2 = x^3
Branch cusp_branch() {
  Branch b;
  b.name = "y^2-x^3";
  b.poly = BivariatePoly{{{mpq_class(1), 0, 2}, {mpq_class(-1), 3, 0}}};
  b.param = Parametrization{exact({{1, 2}}), exact({{1, 3}})};
  return b;
}

LinkingMatrix all_ones(std::size_t r) {
  LinkingMatrix l(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) l.set_pair(i, j, 1);
  }
  return l;
}

TorsionCharacter chi(std::vector<Exponent> q) { return TorsionCharacter(std::move(q)); }

CorpusEntry hopf() {
  CorpusEntry e;
  e.name = "hopf";
  e.germ = "(y-x)(y+x)";
  e.braid = contact_pair_braid(1);
  e.branches = {line("y-x", 1), line("y+x", -1)};
  e.expected_linking = all_ones(2);
  e.facts = {{"complement is homotopy equivalent to a 2-torus; V^1_1 = {1}", "derived"},
             {"b_1 = 2", "reference"}};
  return e;
}

CorpusEntry concurrent_lines(std::size_t r, std::string name) {
  CorpusEntry e;
  e.name = std::move(name);
  e.braid = concurrent_lines_braid(r);
  const long slopes[] = {0, 1, -1, 2, -2};
  std::string germ;
  for (std::size_t i = 0; i < r; ++i) {
    e.branches.push_back(line("y-(" + std::to_string(slopes[i]) + ")x", slopes[i]));
    germ += "(y-(" + std::to_string(slopes[i]) + ")x)";
  }
  e.germ = germ;
  e.expected_linking = all_ones(r);
  std::vector<std::int64_t> row(r, 1);
  e.v1_cosets = {TorsionCoset(TorsionCharacter::trivial(r), {row})};
  e.default_order = r == 3 ? 6 : 4;
  e.facts = {{"V^1_1 away from 1 is the subtorus t_1...t_r = 1, with h1 = r-2 there", "derived"},
             {"b_1 = " + std::to_string(r), "reference"}};
  return e;
}

CorpusEntry tangent_pair() {
  CorpusEntry e;
  e.name = "tangent-pair";
  e.germ = "(y-x^2)(y+x^2)";
  e.braid = contact_pair_braid(2);
  e.branches = {parabola("y-x^2", 1), parabola("y+x^2", -1)};
  e.expected_linking = LinkingMatrix({{0, 2}, {2, 0}});
  e.default_order = 4;
  e.v1_cosets = {TorsionCoset(chi({Exponent(1, 2), Exponent(0)}), {{1, 1}})};
  e.facts = {{"V^1_1 away from 1 is the translated subtorus t_1 t_2 = -1 (grid scans N = 4, 8)", "derived"},
             {"h1 = 1 on that coset", "derived"}};
  return e;
}

CorpusEntry cusp() {
  CorpusEntry e;
  e.name = "cusp";
  e.germ = "y^2-x^3";
  e.braid = BraidWord(2, {1, 1, 1});
  e.branches = {cusp_branch()};
  e.expected_linking = LinkingMatrix(1);
  e.v1_cosets = {TorsionCoset::point(chi({Exponent(1, 6)})), TorsionCoset::point(chi({Exponent(5, 6)}))};
  e.facts = {{"trefoil complement; V^1_1 away from 1 is the primitive sixth roots of unity", "derived"},
             {"single branch: no deletion scenario", "trivial"}};
  return e;
}

CorpusEntry cusp_line() {
  CorpusEntry e;
  e.name = "cusp-line";
  e.germ = "(y^2-x^3)y";
  // The two cusp points rotate one and a half turns about the line: Delta^3 on 3 strands.
  e.braid = BraidWord(3, {1, 2, 1, 1, 2, 1, 1, 2, 1});
  e.branches = {cusp_branch(), line("y", 0)};
  e.expected_linking = LinkingMatrix({{0, 3}, {3, 0}});
  e.default_deleted = 1;
  e.v1_cosets = {TorsionCoset(chi({Exponent(0), Exponent(1, 3)}), {{2, 1}}),
                 TorsionCoset(chi({Exponent(0), Exponent(2, 3)}), {{2, 1}})};
  e.facts = {{"strands 1 and 3 form the cusp, strand 2 the line", "derived"},
             {"V^1_1 away from 1 is t_1^2 t_2 = exp(+-2 pi i/3) (grid scans N = 6, 12)", "derived"},
             {"l_12 = ord_s(s^3) = 3", "derived"}};
  return e;
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"hopf", "three-lines", "four-lines", "tangent-pair", "cusp", "cusp-line"};
  return names;
}

CorpusEntry corpus(std::string_view name) {
  if (name == "hopf") return hopf();
  if (name == "three-lines") return concurrent_lines(3, "three-lines");
  if (name == "four-lines") return concurrent_lines(4, "four-lines");
  if (name == "tangent-pair") return tangent_pair();
  if (name == "cusp") return cusp();
  if (name == "cusp-line") return cusp_line();
  throw Error(Errc::unknown_corpus, "no corpus entry '" + std::string(name) + "'");
}

}  // namespace jumploci
