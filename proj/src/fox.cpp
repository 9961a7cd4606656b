#include "jumploci/fox.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "jumploci/error.hpp"

namespace jumploci {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (const int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

FreeWord free_product(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

std::string format_word(const FreeWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (const int x : w) {
    os << "x" << std::abs(x);
    if (x < 0) os << "^-1";
  }
  return os.str();
}

void Presentation::validate() const {
  if (labels.size() != generators) throw Error(Errc::arity, "one label per generator required");
  std::vector<bool> hit(components, false);
  for (const auto c : labels) {
    if (c >= components) throw Error(Errc::arity, "label " + std::to_string(c) + " out of range");
    hit[c] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw Error(Errc::arity, "every component needs at least one generator");
  }
  for (const auto& rel : relators) {
    for (const int x : rel) {
      if (x == 0 || static_cast<std::size_t>(std::abs(x)) > generators) {
        throw Error(Errc::arity, "relator letter " + std::to_string(x) + " out of range");
      }
    }
  }
  for (const auto& row : abelianized_relators()) {
    if (std::any_of(row.begin(), row.end(), [](long v) { return v != 0; })) {
      throw Error(Errc::malformed_braid, "relator does not abelianize to zero");
    }
  }
}

std::vector<std::vector<long>> Presentation::abelianized_relators() const {
  std::vector<std::vector<long>> out;
  for (const auto& rel : relators) {
    std::vector<long> row(components, 0);
    for (const int x : rel) row[labels[static_cast<std::size_t>(std::abs(x)) - 1]] += x > 0 ? 1 : -1;
    out.push_back(std::move(row));
  }
  return out;
}

TorsionCharacter::TorsionCharacter(std::vector<Exponent> exponents) : q_(std::move(exponents)) {
  for (auto& q : q_) q = mod_one(q);
}

TorsionCharacter TorsionCharacter::trivial(std::size_t r) {
  return TorsionCharacter(std::vector<Exponent>(r, Exponent(0)));
}

bool TorsionCharacter::is_trivial() const {
  return std::all_of(q_.begin(), q_.end(), [](const Exponent& q) { return is_zero(q); });
}

TorsionCharacter TorsionCharacter::inverse() const {
  std::vector<Exponent> neg;
  neg.reserve(q_.size());
  for (const auto& q : q_) neg.push_back(-q);
  return TorsionCharacter(std::move(neg));
}

std::string TorsionCharacter::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (i) out += ", ";
    out += format_exponent(q_[i]);
  }
  return out + ")";
}

std::size_t CohomologyDims::degree(int i) const {
  switch (i) {
    case 0: return h0;
    case 1: return h1;
    case 2: return h2;
    default: throw Error(Errc::arity, "cohomological degree must be 0, 1 or 2");
  }
}

std::string CohomologyDims::to_string() const {
  return "(" + std::to_string(h0) + ", " + std::to_string(h1) + ", " + std::to_string(h2) + ")";
}

namespace {

// Whole Jacobian row of w in one left-to-right pass:
// d(uv)/dx = du/dx + phi(u) dv/dx.
std::vector<CycScalar> fox_row(const FreeWord& w, const std::vector<CycScalar>& images,
                               const std::vector<CycScalar>& inverses, std::uint32_t conductor) {
  const CycScalar zero(mpq_class(0), conductor);
  std::vector<CycScalar> row(images.size(), zero);
  CycScalar prefix(mpq_class(1), conductor);
  for (const int x : w) {
    const std::size_t g = static_cast<std::size_t>(std::abs(x)) - 1;
    if (x > 0) {
      row[g] += prefix;
      prefix *= images[g];
    } else {
      prefix *= inverses[g];
      row[g] -= prefix;
    }
  }
  return row;
}

struct Evaluation {
  std::uint32_t conductor;
  std::vector<CycScalar> images;
  std::vector<CycScalar> inverses;
};

Evaluation evaluate_generators(const std::vector<std::size_t>& labels, const TorsionCharacter& t) {
  Evaluation ev;
  ev.conductor = static_cast<std::uint32_t>(t.order());
  std::vector<CycScalar> coords;
  std::vector<CycScalar> inv_coords;
  for (std::size_t i = 0; i < t.size(); ++i) {
    coords.push_back(t.coordinate(i).embed(ev.conductor));
    inv_coords.push_back(root_of_unity(-t[i]).embed(ev.conductor));
  }
  for (const auto c : labels) {
    if (c >= t.size()) throw Error(Errc::arity, "generator label beyond character length");
    ev.images.push_back(coords[c]);
    ev.inverses.push_back(inv_coords[c]);
  }
  return ev;
}

}  // namespace

CycScalar fox_derivative(const FreeWord& w, std::size_t j, const std::vector<CycScalar>& images) {
  if (j >= images.size()) throw Error(Errc::arity, "generator index out of range");
  std::uint32_t conductor = 1;
  for (const auto& s : images) conductor = std::lcm(conductor, s.conductor());
  std::vector<CycScalar> imgs;
  std::vector<CycScalar> invs;
  for (const auto& s : images) {
    imgs.push_back(s.embed(conductor));
    invs.push_back(imgs.back().inverse());
  }
  for (const int x : w) {
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > images.size()) {
      throw Error(Errc::arity, "letter " + std::to_string(x) + " out of range");
    }
  }
  return fox_row(w, imgs, invs, conductor)[j];
}

CycScalar fox_derivative(const FreeWord& w, std::size_t j, const TorsionCharacter& t,
                         const std::vector<std::size_t>& labels) {
  const auto ev = evaluate_generators(labels, t);
  if (j >= labels.size()) throw Error(Errc::arity, "generator index out of range");
  for (const int x : w) {
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > labels.size()) {
      throw Error(Errc::arity, "letter " + std::to_string(x) + " out of range");
    }
  }
  return fox_row(w, ev.images, ev.inverses, ev.conductor)[j];
}

CycMatrix fox_jacobian(const Presentation& p, const TorsionCharacter& t) {
  const auto ev = evaluate_generators(p.labels, t);
  std::vector<std::vector<CycScalar>> rows;
  rows.reserve(p.relators.size());
  for (const auto& rel : p.relators) rows.push_back(fox_row(rel, ev.images, ev.inverses, ev.conductor));
  if (rows.empty()) return CycMatrix(0, p.generators);
  return CycMatrix(rows);
}

CohomologyDims twisted_dims(const Presentation& p, const TorsionCharacter& t) {
  if (t.size() != p.components) {
    throw Error(Errc::arity, "character has " + std::to_string(t.size()) + " coordinates, presentation has " +
                                 std::to_string(p.components) + " components");
  }
  const TorsionCharacter dual = t.inverse();
  const auto ev = evaluate_generators(p.labels, dual);

  // C_2 -> C_1 -> C_0 with d1 = (phi(x_j) - 1)_j and d2 = Fox Jacobian.
  CycMatrix d1(p.generators, 1);
  const CycScalar one(mpq_class(1), ev.conductor);
  for (std::size_t j = 0; j < p.generators; ++j) d1.set(j, 0, ev.images[j] - one);
  const std::size_t rank1 = d1.rank();
  const std::size_t rank2 = fox_jacobian(p, dual).rank();

  CohomologyDims dims;
  dims.h0 = 1 - rank1;
  dims.h1 = p.generators - rank1 - rank2;
  dims.h2 = p.relators.size() - rank2;
  return dims;
}

bool jump_membership(const Presentation& p, const TorsionCharacter& t, int degree, std::size_t k) {
  if (k < 1) throw Error(Errc::arity, "multiplicity must be at least 1");
  return twisted_dims(p, t).degree(degree) >= k;
}

}  // namespace jumploci
