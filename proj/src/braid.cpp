#include "jumploci/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "jumploci/error.hpp"

namespace jumploci {

BraidWord::BraidWord(std::size_t strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ == 0) throw Error(Errc::malformed_braid, "braid needs at least one strand");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const int k = std::abs(letters_[i]);
    if (k < 1 || static_cast<std::size_t>(k) >= strands_) {
      throw Error(Errc::malformed_braid, "letter " + std::to_string(letters_[i]) + " at position " +
                                             std::to_string(i) + " out of range for " +
                                             std::to_string(strands_) + " strands");
    }
  }
}

bool BraidWord::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](int k) { return k > 0; });
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << "B" << strands_ << "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i];
  os << "]";
  return os.str();
}

BraidWord contact_pair_braid(int contact) {
  return BraidWord(2, std::vector<int>(static_cast<std::size_t>(2 * contact), 1));
}

BraidWord concurrent_lines_braid(std::size_t lines) {
  std::vector<int> word;
  for (std::size_t rep = 0; rep < lines; ++rep) {
    for (std::size_t k = 1; k < lines; ++k) word.push_back(static_cast<int>(k));
  }
  return BraidWord(lines, std::move(word));
}

std::vector<std::size_t> ComponentPartition::strands_of(std::size_t component) const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < label.size(); ++s) {
    if (label[s] == component) out.push_back(s);
  }
  return out;
}

namespace {

// occupancy[p] = strand (named by its starting position) at position p.
template <typename Visit>
std::vector<std::size_t> walk(const BraidWord& b, Visit&& visit) {
  std::vector<std::size_t> occupancy(b.strands());
  std::iota(occupancy.begin(), occupancy.end(), std::size_t{0});
  for (const int letter : b.letters()) {
    const std::size_t p = static_cast<std::size_t>(std::abs(letter)) - 1;
    visit(letter, occupancy[p], occupancy[p + 1], occupancy);
    std::swap(occupancy[p], occupancy[p + 1]);
  }
  return occupancy;
}

}  // namespace

ComponentPartition components(const BraidWord& b) {
  const auto final_occupancy = walk(b, [](int, std::size_t, std::size_t, const auto&) {});
  // The strand ending at position p closes up into the strand starting at p.
  std::vector<std::size_t> next(b.strands());
  for (std::size_t p = 0; p < b.strands(); ++p) next[final_occupancy[p]] = p;

  ComponentPartition part;
  part.label.assign(b.strands(), b.strands());
  for (std::size_t s = 0; s < b.strands(); ++s) {
    if (part.label[s] != b.strands()) continue;
    for (std::size_t cur = s; part.label[cur] == b.strands(); cur = next[cur]) part.label[cur] = part.count;
    ++part.count;
  }
  return part;
}

LinkingMatrix::LinkingMatrix(const std::vector<std::vector<std::int64_t>>& rows)
    : r_(rows.size()), data_(rows.size() * rows.size()) {
  for (std::size_t i = 0; i < r_; ++i) {
    if (rows[i].size() != r_) throw Error(Errc::arity, "linking matrix must be square");
    for (std::size_t j = 0; j < r_; ++j) data_[i * r_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < r_; ++i) {
    if (at(i, i) != 0) throw Error(Errc::arity, "linking matrix diagonal must be zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (at(i, j) != at(j, i)) throw Error(Errc::arity, "linking matrix must be symmetric");
    }
  }
}

void LinkingMatrix::set_pair(std::size_t i, std::size_t j, std::int64_t value) {
  data_[i * r_ + j] = value;
  data_[j * r_ + i] = value;
}

LinkingMatrix LinkingMatrix::without(std::size_t c) const {
  if (c >= r_) throw Error(Errc::invalid_component, "component " + std::to_string(c));
  LinkingMatrix out(r_ - 1);
  for (std::size_t i = 0, oi = 0; i < r_; ++i) {
    if (i == c) continue;
    for (std::size_t j = 0, oj = 0; j < r_; ++j) {
      if (j == c) continue;
      out.data_[oi * out.r_ + oj] = at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

std::vector<std::vector<std::int64_t>> LinkingMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(r_, std::vector<std::int64_t>(r_));
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < r_; ++j) out[i][j] = at(i, j);
  }
  return out;
}

LinkingMatrix linking_matrix(const BraidWord& b) {
  const auto part = components(b);
  const std::size_t r = part.count;
  std::vector<std::int64_t> twice(r * r, 0);
  walk(b, [&](int letter, std::size_t s1, std::size_t s2, const auto&) {
    const std::size_t a = part.label[s1];
    const std::size_t c = part.label[s2];
    if (a == c) return;
    const int sign = letter > 0 ? 1 : -1;
    twice[a * r + c] += sign;
    twice[c * r + a] += sign;
  });
  LinkingMatrix out(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const auto v = twice[i * r + j];
      if (v % 2 != 0) {
        throw Error(Errc::malformed_braid, "odd crossing count between components " + std::to_string(i) +
                                               " and " + std::to_string(j));
      }
      out.set_pair(i, j, v / 2);
    }
  }
  return out;
}

std::size_t inter_component_crossings(const BraidWord& b) {
  const auto part = components(b);
  std::size_t count = 0;
  walk(b, [&](int, std::size_t s1, std::size_t s2, const auto&) {
    if (part.label[s1] != part.label[s2]) ++count;
  });
  return count;
}

namespace {

// Applies the Artin automorphism of one braid letter to a word.
FreeWord act(int letter, const FreeWord& w) {
  const int k = std::abs(letter);
  FreeWord image_k;   // image of x_k
  FreeWord image_k1;  // image of x_{k+1}
  if (letter > 0) {
    image_k = {k, k + 1, -k};
    image_k1 = {k};
  } else {
    image_k = {k + 1};
    image_k1 = {-(k + 1), k, k + 1};
  }
  FreeWord out;
  out.reserve(w.size() * 2);
  for (const int x : w) {
    const int g = std::abs(x);
    if (g != k && g != k + 1) {
      out.push_back(x);
      continue;
    }
    const FreeWord& img = g == k ? image_k : image_k1;
    if (x > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      const auto inv = free_inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

}  // namespace

Presentation artin_presentation(const BraidWord& b, std::optional<std::size_t> dropped) {
  const std::size_t n = b.strands();
  const std::size_t drop = dropped.value_or(n - 1);
  if (drop >= n) throw Error(Errc::arity, "dropped relator index out of range");

  std::vector<FreeWord> images(n);
  for (std::size_t j = 0; j < n; ++j) images[j] = {static_cast<int>(j + 1)};
  for (const int letter : b.letters()) {
    for (auto& img : images) img = act(letter, img);
  }

  const auto part = components(b);
  Presentation p;
  p.generators = n;
  p.components = part.count;
  p.labels = part.label;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == drop) continue;
    p.relators.push_back(free_product(images[j], {-static_cast<int>(j + 1)}));
  }
  return p;
}

BraidWord delete_component(const BraidWord& b, std::size_t c) {
  const auto part = components(b);
  if (part.count < 2) throw Error(Errc::component_underflow, "cannot delete the only component");
  if (c >= part.count) throw Error(Errc::invalid_component, "no component " + std::to_string(c));

  std::vector<int> letters;
  walk(b, [&](int letter, std::size_t s1, std::size_t s2, const std::vector<std::size_t>& occupancy) {
    if (part.label[s1] == c || part.label[s2] == c) return;
    const std::size_t p = static_cast<std::size_t>(std::abs(letter)) - 1;
    std::size_t kept_before = 0;
    for (std::size_t q = 0; q < p; ++q) {
      if (part.label[occupancy[q]] != c) ++kept_before;
    }
    const int k = static_cast<int>(kept_before) + 1;
    letters.push_back(letter > 0 ? k : -k);
  });
  const std::size_t remaining = b.strands() - part.strands_of(c).size();
  return BraidWord(remaining, std::move(letters));
}

}  // namespace jumploci
