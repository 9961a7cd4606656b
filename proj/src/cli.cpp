#include "jumploci/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jumploci/corpus.hpp"
#include "jumploci/error.hpp"
#include "jumploci/report_io.hpp"

namespace jumploci {

namespace {

struct Resolved {
  std::string id;
  InputBundle bundle;
  std::optional<CorpusEntry> entry;
};

Resolved resolve_input(const JobSpec& job) {
  const int sources = int(job.corpus_name.has_value()) + int(job.input_path.has_value()) + int(job.inline_json.has_value());
  if (sources != 1) throw Error(Errc::parse, "exactly one of --corpus, --input, --inline is required");
  Resolved r;
  if (job.corpus_name) {
    auto entry = corpus(*job.corpus_name);
    r.id = entry.name;
    r.bundle.braid = entry.braid;
    if (!entry.branches.empty()) r.bundle.branches = entry.branches;
    r.entry = std::move(entry);
    return r;
  }
  std::string text;
  if (job.input_path) {
    std::ifstream in(*job.input_path);
    if (!in) throw Error(Errc::parse, "cannot read " + *job.input_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    r.id = *job.input_path;
  } else {
    text = *job.inline_json;
    r.id = "inline";
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::parse, std::string("invalid JSON: ") + e.what());
  }
  r.bundle = input_from_json(j);
  return r;
}

Presentation presentation_of(const Resolved& r) {
  if (r.bundle.presentation) return *r.bundle.presentation;
  if (r.bundle.braid) return artin_presentation(*r.bundle.braid);
  throw Error(Errc::parse, "input needs a braid or a presentation");
}

std::size_t resolve_budget(const JobSpec& job) {
  if (job.budget) return *job.budget;
  if (const char* env = std::getenv("JUMPLOCI_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw Error(Errc::parse, "JUMPLOCI_BUDGET must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

std::vector<std::size_t> zero_based(const std::vector<std::size_t>& labels) {
  std::vector<std::size_t> out;
  for (const auto c : labels) {
    if (c == 0) throw Error(Errc::invalid_component, "component labels are 1-based");
    out.push_back(c - 1);
  }
  return out;
}

void print_matrix(std::ostream& os, const LinkingMatrix& l) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) os << (j ? " " : "") << l.at(i, j);
    os << "\n";
  }
}

int do_linking(const Resolved& r, const JobSpec& job, std::ostream& out) {
  std::optional<LinkingMatrix> from_braid;
  std::optional<LinkingMatrix> from_branches;
  if (r.bundle.braid) from_braid = linking_matrix(*r.bundle.braid);
  if (r.bundle.branches) from_branches = linking_matrix_from_branches(*r.bundle.branches);
  if (!from_braid && !from_branches && !r.bundle.linking) throw Error(Errc::parse, "linking needs a braid or branches");
  bool agree = true;
  std::vector<const LinkingMatrix*> all;
  if (from_braid) all.push_back(&*from_braid);
  if (from_branches) all.push_back(&*from_branches);
  if (r.bundle.linking) all.push_back(&*r.bundle.linking);
  for (const auto* m : all) agree = agree && *m == *all.front();

  if (job.format == Format::json) {
    Json j;
    j["input"] = r.id;
    if (from_braid) j["from_braid"] = linking_to_json(*from_braid);
    if (from_branches) j["from_branches"] = linking_to_json(*from_branches);
    if (r.bundle.linking) j["given"] = linking_to_json(*r.bundle.linking);
    j["agree"] = agree;
    out << j.dump(2) << "\n";
  } else {
    if (from_braid) {
      out << "# from braid\n";
      print_matrix(out, *from_braid);
    }
    if (from_branches) {
      out << "# from branches\n";
      print_matrix(out, *from_branches);
    }
    if (r.bundle.linking) {
      out << "# given\n";
      print_matrix(out, *r.bundle.linking);
    }
    out << (agree ? "agree" : "DISAGREE") << "\n";
  }
  return agree ? kExitOk : kExitFailed;
}

int do_dims(const Resolved& r, const JobSpec& job, std::ostream& out) {
  if (!job.character) throw Error(Errc::parse, "dims needs --char");
  const auto p = presentation_of(r);
  const auto t = parse_character(*job.character);
  const auto d = twisted_dims(p, t);
  std::optional<bool> member;
  if (job.degree || job.multiplicity) member = jump_membership(p, t, job.degree.value_or(1), job.multiplicity.value_or(1));
  if (job.format == Format::json) {
    Json j;
    j["input"] = r.id;
    j["q"] = character_to_json(t);
    j["h0"] = d.h0;
    j["h1"] = d.h1;
    j["h2"] = d.h2;
    if (member) {
      j["degree"] = job.degree.value_or(1);
      j["k"] = job.multiplicity.value_or(1);
      j["member"] = *member;
    }
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < t.size(); ++i) out << "q_" << i + 1 << ",";
    out << "h0,h1,h2" << (member ? ",member" : "") << "\n";
    for (const auto& q : t.exponents()) out << format_exponent(q) << ",";
    out << d.h0 << "," << d.h1 << "," << d.h2;
    if (member) out << "," << (*member ? "true" : "false");
    out << "\n";
  }
  return kExitOk;
}

int do_scan(const Resolved& r, const JobSpec& job, std::ostream& out) {
  const auto p = presentation_of(r);
  ScanOptions opts;
  opts.budget = resolve_budget(job);
  opts.jobs = job.jobs;
  if (job.degree || job.multiplicity) opts.requests.push_back({job.degree.value_or(1), job.multiplicity.value_or(1)});
  const auto order = job.order.value_or(r.entry ? r.entry->default_order : 6);
  const auto report = scan(p, order, opts, r.id);
  if (job.format == Format::json) {
    out << scan_report_to_json(report).dump(2) << "\n";
  } else {
    write_scan_csv(out, report);
  }
  return kExitOk;
}

int do_verify(const Resolved& r, const JobSpec& job, std::ostream& out) {
  if (!r.bundle.braid) throw Error(Errc::parse, "verify-deletion needs a braid");
  std::vector<std::size_t> deleted = zero_based(job.deleted);
  if (deleted.empty()) deleted.push_back(r.entry ? r.entry->default_deleted : 0);
  const auto scenario = make_scenario(r.id, *r.bundle.braid, deleted, r.bundle.linking);
  VerifyOptions opts;
  opts.budget = resolve_budget(job);
  opts.jobs = job.jobs;
  if (job.multiplicity) opts.multiplicities = {*job.multiplicity};
  const auto order = job.order.value_or(r.entry ? r.entry->default_order : 6);
  const auto report = verify_deletion(scenario, order, opts);
  if (job.format == Format::json) {
    out << verification_report_to_json(report).dump(2) << "\n";
  } else {
    write_verification_table(out, report);
  }
  return report.passed ? kExitOk : kExitFailed;
}

int do_corpus(const JobSpec& job, std::ostream& out) {
  if (!job.corpus_name) {
    if (job.format == Format::json) {
      out << Json(corpus_names()).dump(2) << "\n";
    } else {
      for (const auto& n : corpus_names()) out << n << "\n";
    }
    return kExitOk;
  }
  const auto e = corpus(*job.corpus_name);
  Json j;
  j["name"] = e.name;
  j["germ"] = e.germ;
  j["braid"] = braid_to_json(e.braid);
  Json branches = Json::array();
  for (const auto& b : e.branches) branches.push_back(branch_to_json(b));
  j["branches"] = branches;
  j["linking"] = linking_to_json(e.expected_linking);
  j["default_delete"] = e.default_deleted + 1;
  j["default_order"] = e.default_order;
  Json cosets = Json::array();
  for (const auto& k : e.v1_cosets) {
    Json c;
    c["translate"] = character_to_json(k.translate());
    c["equations"] = k.equations();
    cosets.push_back(c);
  }
  j["v1_cosets"] = cosets;
  Json facts = Json::array();
  for (const auto& f : e.facts) facts.push_back(Json{{"statement", f.statement}, {"provenance", f.provenance}});
  j["facts"] = facts;
  if (job.format == Format::json) {
    out << j.dump(2) << "\n";
  } else {
    out << "name: " << e.name << "\ngerm: " << e.germ << "\nbraid: " << e.braid.to_string() << "\nlinking:\n";
    print_matrix(out, e.expected_linking);
    for (const auto& f : e.facts) out << "fact [" << f.provenance << "]: " << f.statement << "\n";
  }
  return kExitOk;
}

int dispatch(const JobSpec& job, std::ostream& out) {
  if (job.order && *job.order < 1) throw Error(Errc::parse, "--order must be at least 1");
  if (job.degree && (*job.degree < 0 || *job.degree > 2)) throw Error(Errc::parse, "--degree must be 0, 1 or 2");
  if (job.multiplicity && *job.multiplicity < 1) throw Error(Errc::parse, "--mult must be at least 1");
  if (job.command == Command::corpus) return do_corpus(job, out);
  const auto r = resolve_input(job);
  switch (job.command) {
    case Command::linking: return do_linking(r, job, out);
    case Command::dims: return do_dims(r, job, out);
    case Command::scan: return do_scan(r, job, out);
    case Command::verify_deletion: return do_verify(r, job, out);
    case Command::corpus: break;
  }
  return kExitOk;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    if (job.output_path) {
      std::ofstream file(*job.output_path);
      if (!file) throw Error(Errc::parse, "cannot write " + *job.output_path);
      return dispatch(job, file);
    }
    return dispatch(job, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::budget_exceeded ? kExitBudget : kExitInvalid;
  }
}

}  // namespace jumploci
