#include <doctest.h>

#include <random>

#include "jumploci/braid.hpp"
#include "jumploci/character_variety.hpp"
#include "jumploci/corpus.hpp"
#include "jumploci/fox.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace jumploci;
using testing::chr;
using testing::error_code_of;

namespace {

CohomologyDims dims(std::size_t h0, std::size_t h1, std::size_t h2) { return {h0, h1, h2}; }

std::int64_t scan_order(const CorpusEntry& e) { return components(e.braid).count >= 4 ? 2 : 6; }

}  // namespace

TEST_CASE("fox derivative examples") {
  const std::vector<std::size_t> labels{0, 1};
  const auto t = chr("1/3,1/4");
  CHECK(fox_derivative({1, 2}, 0, t, labels).is_one());
  CHECK(fox_derivative({-1}, 0, t, labels) == -CycScalar::zeta(3).inverse());
  CHECK(fox_derivative({1, 2, -1, -2}, 0, t, labels) == CycScalar::one() - CycScalar::zeta(4));
  CHECK(fox_derivative({1, 2, -1, -2}, 1, t, labels) == CycScalar::zeta(3) - CycScalar::one());
  CHECK(fox_derivative({}, 0, t, labels).is_zero());
}

TEST_CASE("fundamental formula of Fox calculus") {
  // sum_j (dw/dx_j)(x_j - 1) = w - 1 in any abelian image.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> gen(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<std::size_t> length(0, 10);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<CycScalar> images;
    for (int j = 0; j < 3; ++j) images.push_back(CycScalar::zeta(12, std::uniform_int_distribution<int>(0, 11)(rng)));
    FreeWord w(length(rng));
    for (auto& letter : w) letter = sign(rng) ? gen(rng) : -gen(rng);
    CycScalar image = CycScalar::one();
    for (const int letter : w) {
      const auto& x = images[static_cast<std::size_t>(std::abs(letter)) - 1];
      image *= letter > 0 ? x : x.inverse();
    }
    CycScalar lhs;
    for (std::size_t j = 0; j < 3; ++j) lhs += fox_derivative(w, j, images) * (images[j] - CycScalar::one());
    CHECK(lhs == image - CycScalar::one());
  }
}

TEST_CASE("twisted dims examples") {
  for (const auto& name : corpus_names()) {
    const auto e = corpus(name);
    const auto r = components(e.braid).count;
    CAPTURE(name);
    CHECK(twisted_dims(artin_presentation(e.braid), TorsionCharacter::trivial(r)) == dims(1, r, r - 1));
  }
  const auto hopf = artin_presentation(BraidWord(2, {1, 1}));
  CHECK(twisted_dims(hopf, chr("0,1/3")) == dims(0, 0, 0));
  CHECK(twisted_dims(artin_presentation(concurrent_lines_braid(3)), chr("1/3,1/3,1/3")) == dims(0, 1, 1));

  const auto tangent = artin_presentation(contact_pair_braid(2));
  CHECK(twisted_dims(tangent, chr("1/4,1/4")) == dims(0, 1, 1));
  for (const auto& t : {chr("1/4,1/4"), chr("1/8,3/8"), chr("0,1/2"), chr("5/6,2/3")}) {
    const auto j = fox_jacobian(tangent, t);
    for (std::size_t r = 0; r < j.rows(); ++r) {
      for (std::size_t c = 0; c < j.cols(); ++c) CHECK(j.at(r, c).is_zero());
    }
  }

  CHECK(error_code_of([&] { twisted_dims(hopf, chr("1/2")); }) == Errc::arity);
}

TEST_CASE("unknot complement") {
  const auto unknot = artin_presentation(BraidWord(1, {}));
  CHECK(twisted_dims(unknot, chr("0")) == dims(1, 1, 0));
  CHECK(twisted_dims(unknot, chr("1/5")) == dims(0, 0, 0));
}

TEST_CASE("trefoil jumps exactly at the roots of its Alexander polynomial") {
  const auto cusp = artin_presentation(BraidWord(2, {1, 1, 1}));
  for (std::int64_t a = 1; a < 12; ++a) {
    const TorsionCharacter t({Exponent(a, 12)});
    const bool root = Exponent(a, 12) == Exponent(1, 6) || Exponent(a, 12) == Exponent(5, 6);
    CAPTURE(t.to_string());
    CHECK(twisted_dims(cusp, t) == (root ? dims(0, 1, 1) : dims(0, 0, 0)));
  }
}

TEST_CASE("twisted dims agree with the minor-rank oracle") {
  const auto p = artin_presentation(concurrent_lines_braid(3));
  for (const auto& t : grid(3, 3)) {
    const auto inv = t.inverse();
    oracle::Rows d2;
    for (const auto& rel : p.relators) {
      std::vector<CycScalar> row;
      for (std::size_t j = 0; j < p.generators; ++j) row.push_back(fox_derivative(rel, j, inv, p.labels));
      d2.push_back(std::move(row));
    }
    oracle::Rows d1;
    for (std::size_t j = 0; j < p.generators; ++j) d1.push_back({inv.coordinate(p.labels[j]) - CycScalar::one()});
    const auto r1 = oracle::minor_rank(d1);
    const auto r2 = oracle::minor_rank(d2);
    CHECK(twisted_dims(p, t) == dims(1 - r1, p.generators - r1 - r2, p.relators.size() - r2));
  }
}

TEST_CASE("pointwise invariants on corpus grids") {
  for (const auto& name : corpus_names()) {
    const auto e = corpus(name);
    const auto p = artin_presentation(e.braid);
    CAPTURE(name);
    for (const auto& t : grid(p.components, scan_order(e))) {
      const auto d = twisted_dims(p, t);
      CAPTURE(t.to_string());
      CHECK(d.euler_characteristic() == 0);
      CHECK(d.h0 == (t.is_trivial() ? 1u : 0u));
      if (!t.is_trivial()) CHECK(d.h1 == d.h2);
      CHECK(twisted_dims(p, t.inverse()) == d);
      for (const auto& g : galois_orbit(t)) CHECK(twisted_dims(p, g) == d);
    }
  }
}

TEST_CASE("dims do not depend on the dropped relator") {
  for (const auto& name : corpus_names()) {
    const auto e = corpus(name);
    const auto r = components(e.braid).count;
    CAPTURE(name);
    const auto base = artin_presentation(e.braid);
    for (std::size_t dropped = 0; dropped + 1 < e.braid.strands(); ++dropped) {
      const auto p = artin_presentation(e.braid, dropped);
      for (const auto& t : grid(r, r >= 4 ? 2 : 4)) CHECK(twisted_dims(p, t) == twisted_dims(base, t));
    }
  }
}

TEST_CASE("jump membership") {
  const auto hopf = artin_presentation(BraidWord(2, {1, 1}));
  CHECK(jump_membership(hopf, chr("0,0"), 0, 1));
  CHECK(jump_membership(hopf, chr("0,0"), 1, 2));
  CHECK_FALSE(jump_membership(hopf, chr("0,0"), 1, 3));
  for (const auto& t : grid(2, 4)) {
    if (t.is_trivial()) continue;
    CHECK_FALSE(jump_membership(hopf, t, 0, 1));
  }
  const auto t = chr("1/3,2/3");
  CHECK(jump_membership(hopf, t, 1, 1) == (twisted_dims(hopf, t).h1 >= 1));
}

TEST_CASE("torsion characters") {
  const auto t = chr("4/3, -1/4");
  CHECK(t[0] == Exponent(1, 3));
  CHECK(t[1] == Exponent(3, 4));
  CHECK(t.order() == 12);
  CHECK(t.inverse() == chr("2/3,1/4"));
  CHECK(t.to_string() == "(1/3, 3/4)");
  CHECK(TorsionCharacter::trivial(3).is_trivial());
  CHECK(error_code_of([] { chr("1/0"); }) == Errc::invalid_exponent);
  CHECK(error_code_of([] { chr("a"); }) == Errc::parse);
}
