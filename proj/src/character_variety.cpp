#include "jumploci/character_variety.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "jumploci/error.hpp"

namespace jumploci {

IntMatrix hermite_normal_form(IntMatrix rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const auto& row) {
                              return std::all_of(row.begin(), row.end(), [](std::int64_t v) { return v == 0; });
                            }),
             rows.end());
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    // Euclid on column `col` among rows >= pivot_row.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || std::abs(rows[i][col]) < std::abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        const std::int64_t q = rows[i][col] / rows[pivot_row][col];
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[pivot_row][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0) {
      for (auto& v : rows[pivot_row]) v = -v;
    }
    const std::int64_t p = rows[pivot_row][col];
    for (std::size_t i = 0; i < pivot_row; ++i) {
      std::int64_t q = rows[i][col] / p;
      if (rows[i][col] - q * p < 0) --q;
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

TorsionCharacter embed_deleted(const TorsionCharacter& t, std::size_t position) {
  if (position > t.size()) throw Error(Errc::invalid_component, "insert position " + std::to_string(position));
  auto q = t.exponents();
  q.insert(q.begin() + static_cast<std::ptrdiff_t>(position), Exponent(0));
  return TorsionCharacter(std::move(q));
}

TorsionCharacter restrict_character(const TorsionCharacter& t, const std::vector<std::size_t>& removed) {
  std::vector<Exponent> q;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) q.push_back(t[i]);
  }
  return TorsionCharacter(std::move(q));
}

TorsionCoset::TorsionCoset(TorsionCharacter translate, IntMatrix equations)
    : translate_(std::move(translate)) {
  for (const auto& row : equations) {
    if (row.size() != translate_.size()) throw Error(Errc::arity, "coset equation length mismatch");
  }
  equations_ = hermite_normal_form(std::move(equations));
}

TorsionCoset TorsionCoset::whole_torus(std::size_t r) { return TorsionCoset(TorsionCharacter::trivial(r), {}); }

TorsionCoset TorsionCoset::point(const TorsionCharacter& t) {
  IntMatrix id(t.size(), std::vector<std::int64_t>(t.size(), 0));
  for (std::size_t i = 0; i < t.size(); ++i) id[i][i] = 1;
  return TorsionCoset(t, std::move(id));
}

bool TorsionCoset::contains(const TorsionCharacter& t) const {
  if (t.size() != translate_.size()) throw Error(Errc::arity, "character length does not match coset");
  for (const auto& row : equations_) {
    Exponent sum(0);
    for (std::size_t i = 0; i < row.size(); ++i) sum += Exponent(row[i]) * (t[i] - translate_[i]);
    if (!is_zero(mod_one(sum))) return false;
  }
  return true;
}

std::optional<std::size_t> grid_size(std::int64_t order, std::size_t r) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (total > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(order)) return std::nullopt;
    total *= static_cast<std::size_t>(order);
  }
  return total;
}

std::vector<TorsionCharacter> grid(std::size_t r, std::int64_t order, std::size_t budget,
                                   const std::vector<std::size_t>& fixed_trivial) {
  if (order < 1) throw Error(Errc::arity, "order bound must be at least 1");
  std::vector<std::size_t> free_coords;
  for (std::size_t i = 0; i < r; ++i) {
    if (std::find(fixed_trivial.begin(), fixed_trivial.end(), i) == fixed_trivial.end()) free_coords.push_back(i);
  }
  const auto total = grid_size(order, free_coords.size());
  if (!total || *total > budget) {
    throw Error(Errc::budget_exceeded,
                "grid needs " + (total ? std::to_string(*total) : std::string("more than 2^64")) +
                    " evaluations, budget is " + std::to_string(budget));
  }
  std::vector<TorsionCharacter> out;
  out.reserve(*total);
  std::vector<std::int64_t> digits(free_coords.size(), 0);
  for (std::size_t n = 0; n < *total; ++n) {
    std::vector<Exponent> q(r, Exponent(0));
    for (std::size_t k = 0; k < free_coords.size(); ++k) q[free_coords[k]] = Exponent(digits[k], order);
    out.emplace_back(std::move(q));
    for (std::size_t k = free_coords.size(); k-- > 0;) {
      if (++digits[k] < order) break;
      digits[k] = 0;
    }
  }
  return out;
}

std::vector<TorsionCharacter> enumerate_coset(const TorsionCoset& k, std::int64_t order, std::size_t budget) {
  std::vector<TorsionCharacter> out;
  for (auto& t : grid(k.ambient_dimension(), order, budget)) {
    if (k.contains(t)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<TorsionCharacter> galois_orbit(const TorsionCharacter& t) {
  const std::int64_t n = t.order();
  std::set<TorsionCharacter> orbit;
  for (std::int64_t a = 1; a <= n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    std::vector<Exponent> q;
    for (const auto& e : t.exponents()) q.push_back(e * a);
    orbit.emplace(std::move(q));
  }
  return {orbit.begin(), orbit.end()};
}

const CohomologyDims* ScanReport::find(const TorsionCharacter& t) const {
  auto it = std::lower_bound(records.begin(), records.end(), t,
                             [](const ScanRecord& rec, const TorsionCharacter& c) { return rec.character < c; });
  if (it == records.end() || !(it->character == t)) return nullptr;
  return &it->dims;
}

const std::vector<TorsionCharacter>& ScanReport::locus(int degree, std::size_t k) const {
  static const std::vector<TorsionCharacter> empty;
  auto it = loci.find(JumpRequest{degree, k});
  return it == loci.end() ? empty : it->second;
}

std::vector<CohomologyDims> evaluate_all(const Presentation& p, const std::vector<TorsionCharacter>& chars,
                                         std::size_t jobs) {
  std::vector<CohomologyDims> out(chars.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(1, chars.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < chars.size(); ++i) out[i] = twisted_dims(p, chars[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < chars.size(); i = next++) out[i] = twisted_dims(p, chars[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = chars.size();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::map<JumpRequest, std::vector<TorsionCharacter>> assemble_loci(const std::vector<ScanRecord>& records,
                                                                   const std::vector<JumpRequest>& requests) {
  std::vector<JumpRequest> wanted = requests;
  if (wanted.empty()) {
    for (int i = 0; i <= 2; ++i) {
      std::size_t top = 0;
      for (const auto& rec : records) top = std::max(top, rec.dims.degree(i));
      for (std::size_t k = 1; k <= top; ++k) wanted.push_back({i, k});
    }
  }
  std::map<JumpRequest, std::vector<TorsionCharacter>> loci;
  for (const auto& req : wanted) {
    if (req.degree < 0 || req.degree > 2 || req.multiplicity < 1) {
      throw Error(Errc::arity, "jump locus request needs degree in 0..2 and k >= 1");
    }
    auto& list = loci[req];
    for (const auto& rec : records) {
      if (rec.dims.degree(req.degree) >= req.multiplicity) list.push_back(rec.character);
    }
  }
  return loci;
}

ScanReport scan(const Presentation& p, std::int64_t order, const ScanOptions& options, std::string presentation_id) {
  for (const auto c : options.fixed_trivial) {
    if (c >= p.components) throw Error(Errc::invalid_component, "fixed coordinate " + std::to_string(c));
  }
  auto chars = grid(p.components, order, options.budget, options.fixed_trivial);
  const auto dims = evaluate_all(p, chars, options.jobs);

  ScanReport report;
  report.presentation_id = std::move(presentation_id);
  report.order = order;
  report.components = p.components;
  report.fixed_trivial = options.fixed_trivial;
  std::sort(report.fixed_trivial.begin(), report.fixed_trivial.end());
  report.records.reserve(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i) report.records.push_back({std::move(chars[i]), dims[i]});
  std::sort(report.records.begin(), report.records.end(),
            [](const ScanRecord& a, const ScanRecord& b) { return a.character < b.character; });
  report.loci = assemble_loci(report.records, options.requests);
  return report;
}

}  // namespace jumploci
