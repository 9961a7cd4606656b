#include "jumploci/deletion.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "jumploci/error.hpp"

namespace jumploci {

namespace {

std::vector<std::size_t> normalized(std::vector<std::size_t> s, std::size_t r) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw Error(Errc::invalid_component, "deleted components must be distinct");
  }
  for (const auto c : s) {
    if (c >= r) throw Error(Errc::invalid_component, "no component " + std::to_string(c));
  }
  if (s.size() >= r) throw Error(Errc::component_underflow, "at least one branch must remain");
  return s;
}

LinkingMatrix remove_all(LinkingMatrix l, const std::vector<std::size_t>& sorted_components) {
  for (auto it = sorted_components.rbegin(); it != sorted_components.rend(); ++it) l = l.without(*it);
  return l;
}

std::size_t subtract(std::size_t value, std::size_t count, const char* what) {
  if (count > value) {
    throw Error(Errc::contradiction, std::string("predicted negative ") + what);
  }
  return value - count;
}

}  // namespace

DeletionScenario make_scenario(std::string name, const BraidWord& braid, std::vector<std::size_t> deleted,
                               std::optional<LinkingMatrix> linking) {
  DeletionScenario s;
  s.name = std::move(name);
  s.braid = braid;
  s.linking = linking ? *linking : linking_matrix(braid);
  const auto r = components(braid).count;
  if (s.linking.size() != r) throw Error(Errc::arity, "linking matrix size differs from component count");
  if (r < 2) throw Error(Errc::component_underflow, "deletion needs at least two branches");
  s.deleted = normalized(std::move(deleted), r);
  s.deleted_braid = braid;
  for (auto it = s.deleted.rbegin(); it != s.deleted.rend(); ++it) {
    s.deleted_braid = delete_component(s.deleted_braid, *it);
  }
  return s;
}

MeridianMonodromy meridian_scalar(const TorsionCharacter& t, std::size_t i, const LinkingMatrix& l) {
  if (t.size() != l.size()) throw Error(Errc::arity, "character and linking matrix sizes differ");
  if (i >= t.size()) throw Error(Errc::invalid_component, "no component " + std::to_string(i));
  if (!t.is_trivial_at(i)) {
    throw Error(Errc::hypothesis_violation,
                "coordinate " + std::to_string(i) + " of " + t.to_string() + " is not 1");
  }
  MeridianMonodromy m{Exponent(0), CycScalar::one(), 0};
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j == i) continue;
    m.exponent += Exponent(l.at(i, j)) * t[j];
    m.lambda *= t.coordinate(j).pow(l.at(i, j));
  }
  m.exponent = mod_one(m.exponent);
  m.circle_dim = m.lambda.is_one() ? 1 : 0;
  return m;
}

std::size_t predict_deleted_h1(std::size_t h1_u, const CycScalar& lambda) {
  if (!lambda.is_one()) return h1_u;
  if (h1_u == 0) throw Error(Errc::contradiction, "lambda = 1 but h1 = 0");
  return h1_u - 1;
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::strict: return "strict";
    case Route::enlarged: return "enlarged";
    case Route::direct: return "direct";
  }
  return "unknown";
}

namespace {

CohomologyDims count_formula(const CohomologyDims& dims_u, const TorsionCharacter& t,
                             const std::vector<std::size_t>& s, const LinkingMatrix& l) {
  std::size_t drops = 0;
  for (const auto i : s) drops += meridian_scalar(t, i, l).circle_dim;
  return {dims_u.h0, subtract(dims_u.h1, drops, "h1"), subtract(dims_u.h2, drops, "h2")};
}

}  // namespace

CohomologyDims predict_multi_deleted(const CohomologyDims& dims_u, const TorsionCharacter& t,
                                     const std::vector<std::size_t>& deleted, const LinkingMatrix& l,
                                     Route route) {
  if (t.size() != l.size()) throw Error(Errc::arity, "character and linking matrix sizes differ");
  const auto s = normalized(deleted, l.size());
  for (const auto i : s) {
    if (!t.is_trivial_at(i)) {
      throw Error(Errc::hypothesis_violation, "deleted coordinate " + std::to_string(i) + " is not 1");
    }
  }
  const std::size_t r = l.size();

  if (t.is_trivial()) {
    const std::size_t b1 = r - s.size();
    return {1, b1, b1 - 1};
  }

  std::vector<std::size_t> extra;
  for (std::size_t i = 0; i < r; ++i) {
    if (t.is_trivial_at(i) && !std::binary_search(s.begin(), s.end(), i)) extra.push_back(i);
  }

  switch (route) {
    case Route::strict:
      if (!extra.empty()) {
        throw Error(Errc::hypothesis_violation,
                    "coordinate " + std::to_string(extra.front()) + " outside the deleted set is 1");
      }
      return count_formula(dims_u, t, s, l);
    case Route::direct:
      return count_formula(dims_u, t, s, l);
    case Route::enlarged:
      break;
  }
  if (extra.empty()) return count_formula(dims_u, t, s, l);

  // Remove every trivial branch, then put back the ones outside S.
  std::vector<std::size_t> all = s;
  all.insert(all.end(), extra.begin(), extra.end());
  std::sort(all.begin(), all.end());
  const CohomologyDims smallest = count_formula(dims_u, t, all, l);

  const LinkingMatrix l_v = remove_all(l, s);
  const TorsionCharacter t_v = restrict_character(t, s);
  std::size_t regained = 0;
  for (const auto i : extra) {
    const auto shift = static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), i) - s.begin());
    regained += meridian_scalar(t_v, i - shift, l_v).circle_dim;
  }
  return {smallest.h0, smallest.h1 + regained, smallest.h2 + regained};
}

CohomologyDims predict_iterated(const CohomologyDims& dims_u, const TorsionCharacter& t,
                                const std::vector<std::size_t>& deleted, const LinkingMatrix& l) {
  auto s = normalized(deleted, l.size());
  CohomologyDims dims = dims_u;
  TorsionCharacter cur = t;
  LinkingMatrix cur_l = l;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    dims = predict_multi_deleted(dims, cur, {*it}, cur_l);
    cur = restrict_character(cur, {*it});
    cur_l = cur_l.without(*it);
  }
  return dims;
}

std::vector<TorsionCharacter> transform_jump_locus(const ScanReport& report_u, std::size_t k, const LinkingMatrix& l,
                                                   std::size_t deleted) {
  if (k < 1) throw Error(Errc::arity, "multiplicity must be at least 1");
  if (report_u.components != l.size()) throw Error(Errc::arity, "report and linking matrix sizes differ");
  if (deleted >= l.size()) throw Error(Errc::invalid_component, "no component " + std::to_string(deleted));
  if (l.size() < 2) throw Error(Errc::component_underflow, "deletion needs at least two branches");
  for (const auto c : report_u.fixed_trivial) {
    if (c != deleted) throw Error(Errc::coverage_mismatch, "scan holds another coordinate fixed");
  }

  std::vector<TorsionCharacter> out;
  for (const auto& small : grid(l.size() - 1, report_u.order, std::numeric_limits<std::size_t>::max())) {
    const auto t = embed_deleted(small, deleted);
    const auto* dims = report_u.find(t);
    if (!dims) throw Error(Errc::coverage_mismatch, "scan lacks slice point " + t.to_string());
    const bool keep = dims->h1 >= k + 1 || (dims->h1 >= k && !meridian_scalar(t, deleted, l).is_trivial());
    if (keep) out.push_back(small);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t VerificationReport::mismatches() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.match ? 0 : 1;
  for (const auto& check : set_checks) n += check.match ? 0 : 1;
  return n;
}

VerificationReport verify_deletion(const DeletionScenario& scenario, std::int64_t order, const VerifyOptions& options) {
  const auto p_u = artin_presentation(scenario.braid);
  const auto p_v = artin_presentation(scenario.deleted_braid);
  if (p_v.components != scenario.remaining()) {
    throw Error(Errc::malformed_braid, "deleted braid has an unexpected number of components");
  }

  ScanOptions u_opts{options.budget, options.jobs, scenario.deleted, {}};
  ScanOptions v_opts{options.budget, options.jobs, {}, {}};
  for (const auto k : options.multiplicities) {
    u_opts.requests.push_back({1, k});
    u_opts.requests.push_back({1, k + 1});
    v_opts.requests.push_back({1, k});
  }
  std::sort(u_opts.requests.begin(), u_opts.requests.end());
  u_opts.requests.erase(std::unique(u_opts.requests.begin(), u_opts.requests.end()), u_opts.requests.end());
  const auto report_u = scan(p_u, order, u_opts, scenario.name);
  const auto report_v = scan(p_v, order, v_opts, scenario.name + "-deleted");

  VerificationReport report;
  report.scenario = scenario.name;
  report.braid = scenario.braid.to_string();
  report.deleted = scenario.deleted;
  report.order = order;

  for (const auto& rec : report_u.records) {
    VerificationRow row;
    row.character = rec.character;
    row.restricted = restrict_character(rec.character, scenario.deleted);
    row.dims_u = rec.dims;
    if (const auto* dims = report_v.find(row.restricted)) row.computed = *dims;
    try {
      for (const auto i : scenario.deleted) {
        row.lambdas.push_back(meridian_scalar(rec.character, i, scenario.linking).exponent);
      }
      row.predicted = predict_multi_deleted(rec.dims, rec.character, scenario.deleted, scenario.linking);
      row.predicted_direct =
          predict_multi_deleted(rec.dims, rec.character, scenario.deleted, scenario.linking, Route::direct);
      if (scenario.deleted.size() == 1) {
        const auto lambda = meridian_scalar(rec.character, scenario.deleted.front(), scenario.linking).lambda;
        const auto h1 = predict_deleted_h1(rec.dims.h1, lambda);
        if (row.computed && h1 != row.computed->h1) row.note = "single-branch h1 rule disagrees";
      }
    } catch (const Error& e) {
      row.note = e.what();
    }
    if (!row.computed) {
      row.note = "no computed dims for " + row.restricted.to_string();
    } else if (row.note.empty()) {
      if (*row.predicted != *row.computed) {
        row.note = "prediction differs from computation";
      } else if (*row.predicted_direct != *row.computed) {
        row.note = "direct route diverges";
      } else {
        row.match = true;
      }
    }
    report.rows.push_back(std::move(row));
  }

  if (scenario.deleted.size() == 1) {
    const auto c = scenario.deleted.front();
    for (const auto k : options.multiplicities) {
      SetCheck check;
      check.k = k;
      try {
        for (const auto& small : transform_jump_locus(report_u, k, scenario.linking, c)) {
          check.predicted.push_back(embed_deleted(small, c));
        }
      } catch (const Error&) {
        check.match = false;
        report.set_checks.push_back(std::move(check));
        continue;
      }
      for (const auto& small : report_v.locus(1, k)) check.computed.push_back(embed_deleted(small, c));
      std::sort(check.predicted.begin(), check.predicted.end());
      std::sort(check.computed.begin(), check.computed.end());
      check.match = check.predicted == check.computed;
      report.set_checks.push_back(std::move(check));
    }
  }

  report.passed = report.mismatches() == 0;
  return report;
}

}  // namespace jumploci
