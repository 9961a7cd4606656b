#include "jumploci/report_io.hpp"

#include <ostream>
#include <sstream>

#include "jumploci/error.hpp"

namespace jumploci {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(Errc::parse, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t as_size(const Json& j, const std::string& path) {
  const auto v = as_int(j, path);
  if (v < 0) fail(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

mpq_class as_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) {
    try {
      mpq_class q(j.get<std::string>());
      if (q.get_den() == 0) fail(path, "zero denominator");
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      fail(path, "bad rational '" + j.get<std::string>() + "'");
    }
  }
  fail(path, "expected an integer or a rational string like \"1/2\"");
}

Json rational_to_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Exponent as_exponent(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Exponent(j.get<std::int64_t>());
  if (!j.is_string()) fail(path, "expected an exponent");
  try {
    return parse_exponent(j.get<std::string>());
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_exponent) throw;
    fail(path, e.what());
  }
}

Series series_from_json(const Json& terms, std::optional<int> precision, const std::string& path) {
  std::vector<std::pair<mpq_class, int>> out;
  const auto& arr = as_array(terms, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = path + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) fail(p, "expected [coeff, exponent]");
    out.emplace_back(as_rational(arr[i][0], p + "[0]"), static_cast<int>(as_int(arr[i][1], p + "[1]")));
  }
  try {
    return Series(std::move(out), precision);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Json series_to_json(const Series& s) {
  Json terms = Json::array();
  for (std::size_t e = 0; e < s.coeffs().size(); ++e) {
    if (s.coeffs()[e] != 0) terms.push_back(Json::array({rational_to_json(s.coeffs()[e]), e}));
  }
  return terms;
}

std::vector<std::size_t> labels_from_json(const Json& j, const std::string& path) {
  std::vector<std::size_t> out;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto v = as_int(arr[i], path + "[" + std::to_string(i) + "]");
    if (v < 1) fail(path, "component labels are 1-based");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

Json labels_to_json(const std::vector<std::size_t>& labels) {
  Json out = Json::array();
  for (const auto c : labels) out.push_back(c + 1);
  return out;
}

Json characters_to_json(const std::vector<TorsionCharacter>& chars) {
  Json out = Json::array();
  for (const auto& t : chars) out.push_back(character_to_json(t));
  return out;
}

std::vector<TorsionCharacter> characters_from_json(const Json& j, const std::string& path) {
  std::vector<TorsionCharacter> out;
  for (const auto& c : as_array(j, path)) out.push_back(character_from_json(c));
  return out;
}

Json optional_dims(const std::optional<CohomologyDims>& d) { return d ? dims_to_json(*d) : Json(nullptr); }

std::optional<CohomologyDims> optional_dims_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return dims_from_json(j);
}

}  // namespace

BraidWord braid_from_json(const Json& j) {
  const auto strands = as_size(field(j, "strands", "braid"), "braid.strands");
  std::vector<int> word;
  const auto& arr = as_array(field(j, "word", "braid"), "braid.word");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = "braid.word[" + std::to_string(i) + "]";
    const auto v = as_int(arr[i], p);
    if (v == 0) fail(p, "letters are nonzero");
    word.push_back(static_cast<int>(v));
  }
  try {
    return BraidWord(strands, std::move(word));
  } catch (const Error& e) {
    fail("braid", e.what());
  }
}

Json braid_to_json(const BraidWord& b) {
  Json j;
  j["strands"] = b.strands();
  j["word"] = b.letters();
  return j;
}

Branch branch_from_json(const Json& j, const std::string& path) {
  Branch b;
  if (!j.is_object()) fail(path, "expected an object");
  if (auto it = j.find("name"); it != j.end() && it->is_string()) b.name = it->get<std::string>();
  if (b.name.empty()) b.name = path;
  if (auto it = j.find("param"); it != j.end()) {
    const auto pp = path + ".param";
    std::optional<int> precision;
    if (auto t = it->find("trunc"); t != it->end()) precision = static_cast<int>(as_int(*t, pp + ".trunc"));
    b.param = Parametrization{series_from_json(field(*it, "x", pp), precision, pp + ".x"),
                              series_from_json(field(*it, "y", pp), precision, pp + ".y")};
  }
  if (auto it = j.find("poly"); it != j.end()) {
    BivariatePoly f;
    const auto pp = path + ".poly";
    const auto& arr = as_array(*it, pp);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = pp + "[" + std::to_string(i) + "]";
      if (!arr[i].is_array() || arr[i].size() != 3) fail(p, "expected [coeff, i, j]");
      f.terms.push_back({as_rational(arr[i][0], p), static_cast<int>(as_int(arr[i][1], p)),
                         static_cast<int>(as_int(arr[i][2], p))});
    }
    b.poly = std::move(f);
  }
  try {
    b.validate();
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return b;
}

Json branch_to_json(const Branch& b) {
  Json j;
  j["name"] = b.name;
  if (b.poly) {
    Json terms = Json::array();
    for (const auto& m : b.poly->terms) terms.push_back(Json::array({rational_to_json(m.coeff), m.x_degree, m.y_degree}));
    j["poly"] = terms;
  }
  if (b.param) {
    Json p;
    p["x"] = series_to_json(b.param->x);
    p["y"] = series_to_json(b.param->y);
    if (const auto prec = b.param->precision()) p["trunc"] = *prec;
    j["param"] = p;
  }
  return j;
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  p.generators = as_size(field(j, "generators", "presentation"), "presentation.generators");
  p.labels = labels_from_json(field(j, "labels", "presentation"), "presentation.labels");
  std::size_t r = 0;
  for (const auto c : p.labels) r = std::max(r, c + 1);
  p.components = r;
  if (auto it = j.find("components"); it != j.end()) p.components = as_size(*it, "presentation.components");
  const auto& rels = as_array(field(j, "relators", "presentation"), "presentation.relators");
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const auto path = "presentation.relators[" + std::to_string(i) + "]";
    FreeWord w;
    for (const auto& x : as_array(rels[i], path)) w.push_back(static_cast<int>(as_int(x, path)));
    p.relators.push_back(std::move(w));
  }
  try {
    p.validate();
  } catch (const Error& e) {
    fail("presentation", e.what());
  }
  return p;
}

Json presentation_to_json(const Presentation& p) {
  Json j;
  j["generators"] = p.generators;
  j["components"] = p.components;
  j["labels"] = labels_to_json(p.labels);
  j["relators"] = p.relators;
  return j;
}

LinkingMatrix linking_from_json(const Json& j) {
  std::vector<std::vector<std::int64_t>> rows;
  const auto& arr = as_array(j, "linking");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = "linking[" + std::to_string(i) + "]";
    std::vector<std::int64_t> row;
    for (const auto& v : as_array(arr[i], p)) row.push_back(as_int(v, p));
    rows.push_back(std::move(row));
  }
  try {
    return LinkingMatrix(rows);
  } catch (const Error& e) {
    fail("linking", e.what());
  }
}

Json linking_to_json(const LinkingMatrix& l) { return l.rows(); }

InputBundle input_from_json(const Json& j) {
  if (!j.is_object()) fail("input", "expected an object");
  InputBundle in;
  if (auto it = j.find("braid"); it != j.end()) in.braid = braid_from_json(*it);
  if (auto it = j.find("branches"); it != j.end()) {
    std::vector<Branch> branches;
    const auto& arr = as_array(*it, "branches");
    for (std::size_t i = 0; i < arr.size(); ++i) branches.push_back(branch_from_json(arr[i], "branches[" + std::to_string(i) + "]"));
    in.branches = std::move(branches);
  }
  if (auto it = j.find("linking"); it != j.end()) in.linking = linking_from_json(*it);
  if (auto it = j.find("presentation"); it != j.end()) in.presentation = presentation_from_json(*it);
  if (!in.braid && !in.branches && !in.linking && !in.presentation) {
    fail("input", "expected at least one of braid, branches, linking, presentation");
  }
  return in;
}

TorsionCharacter parse_character(const std::string& text) {
  std::vector<Exponent> q;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) fail("character", "empty coordinate in '" + text + "'");
    q.push_back(parse_exponent(item.substr(first, last - first + 1)));
  }
  return TorsionCharacter(std::move(q));
}

Json character_to_json(const TorsionCharacter& t) {
  Json out = Json::array();
  for (const auto& q : t.exponents()) out.push_back(format_exponent(q));
  return out;
}

TorsionCharacter character_from_json(const Json& j) {
  std::vector<Exponent> q;
  const auto& arr = as_array(j, "character");
  for (std::size_t i = 0; i < arr.size(); ++i) q.push_back(as_exponent(arr[i], "character[" + std::to_string(i) + "]"));
  return TorsionCharacter(std::move(q));
}

Json dims_to_json(const CohomologyDims& d) {
  Json j;
  j["h0"] = d.h0;
  j["h1"] = d.h1;
  j["h2"] = d.h2;
  return j;
}

CohomologyDims dims_from_json(const Json& j) {
  return {as_size(field(j, "h0", "dims"), "dims.h0"), as_size(field(j, "h1", "dims"), "dims.h1"),
          as_size(field(j, "h2", "dims"), "dims.h2")};
}

Json scan_report_to_json(const ScanReport& r) {
  Json j;
  j["presentation"] = r.presentation_id;
  j["order"] = r.order;
  j["components"] = r.components;
  j["fixed_trivial"] = labels_to_json(r.fixed_trivial);
  Json records = Json::array();
  for (const auto& rec : r.records) {
    Json row;
    row["q"] = character_to_json(rec.character);
    row["h0"] = rec.dims.h0;
    row["h1"] = rec.dims.h1;
    row["h2"] = rec.dims.h2;
    records.push_back(row);
  }
  j["records"] = records;
  Json loci = Json::array();
  for (const auto& [req, chars] : r.loci) {
    Json l;
    l["degree"] = req.degree;
    l["k"] = req.multiplicity;
    l["characters"] = characters_to_json(chars);
    loci.push_back(l);
  }
  j["loci"] = loci;
  return j;
}

ScanReport scan_report_from_json(const Json& j) {
  ScanReport r;
  const auto& id = field(j, "presentation", "scan");
  if (!id.is_string()) fail("scan.presentation", "expected a string");
  r.presentation_id = id.get<std::string>();
  r.order = as_int(field(j, "order", "scan"), "scan.order");
  r.components = as_size(field(j, "components", "scan"), "scan.components");
  r.fixed_trivial = labels_from_json(field(j, "fixed_trivial", "scan"), "scan.fixed_trivial");
  for (const auto& row : as_array(field(j, "records", "scan"), "scan.records")) {
    r.records.push_back({character_from_json(field(row, "q", "scan.records")), dims_from_json(row)});
  }
  for (const auto& l : as_array(field(j, "loci", "scan"), "scan.loci")) {
    JumpRequest req{static_cast<int>(as_int(field(l, "degree", "scan.loci"), "scan.loci.degree")),
                    as_size(field(l, "k", "scan.loci"), "scan.loci.k")};
    r.loci[req] = characters_from_json(field(l, "characters", "scan.loci"), "scan.loci.characters");
  }
  return r;
}

void write_scan_csv(std::ostream& os, const ScanReport& r) {
  for (std::size_t i = 0; i < r.components; ++i) os << "q_" << i + 1 << ",";
  os << "h0,h1,h2\n";
  for (const auto& rec : r.records) {
    for (const auto& q : rec.character.exponents()) os << format_exponent(q) << ",";
    os << rec.dims.h0 << "," << rec.dims.h1 << "," << rec.dims.h2 << "\n";
  }
}

Json verification_report_to_json(const VerificationReport& r) {
  Json j;
  j["scenario"] = r.scenario;
  j["braid"] = r.braid;
  j["deleted"] = labels_to_json(r.deleted);
  j["order"] = r.order;
  j["passed"] = r.passed;
  j["mismatches"] = r.mismatches();
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json o;
    o["t"] = character_to_json(row.character);
    o["t_deleted"] = character_to_json(row.restricted);
    o["dims_u"] = dims_to_json(row.dims_u);
    Json lambdas = Json::array();
    for (const auto& q : row.lambdas) lambdas.push_back(format_exponent(q));
    o["lambda"] = lambdas;
    o["predicted"] = optional_dims(row.predicted);
    o["predicted_direct"] = optional_dims(row.predicted_direct);
    o["computed"] = optional_dims(row.computed);
    o["match"] = row.match;
    o["note"] = row.note;
    rows.push_back(o);
  }
  j["rows"] = rows;
  Json checks = Json::array();
  for (const auto& c : r.set_checks) {
    Json o;
    o["k"] = c.k;
    o["predicted"] = characters_to_json(c.predicted);
    o["computed"] = characters_to_json(c.computed);
    o["match"] = c.match;
    checks.push_back(o);
  }
  j["set_checks"] = checks;
  return j;
}

VerificationReport verification_report_from_json(const Json& j) {
  VerificationReport r;
  const std::string path = "verification";
  r.scenario = field(j, "scenario", path).get<std::string>();
  r.braid = field(j, "braid", path).get<std::string>();
  r.deleted = labels_from_json(field(j, "deleted", path), path + ".deleted");
  r.order = as_int(field(j, "order", path), path + ".order");
  r.passed = field(j, "passed", path).get<bool>();
  for (const auto& o : as_array(field(j, "rows", path), path + ".rows")) {
    VerificationRow row;
    row.character = character_from_json(field(o, "t", path));
    row.restricted = character_from_json(field(o, "t_deleted", path));
    row.dims_u = dims_from_json(field(o, "dims_u", path));
    for (const auto& q : as_array(field(o, "lambda", path), path + ".lambda")) row.lambdas.push_back(as_exponent(q, path));
    row.predicted = optional_dims_from(field(o, "predicted", path));
    row.predicted_direct = optional_dims_from(field(o, "predicted_direct", path));
    row.computed = optional_dims_from(field(o, "computed", path));
    row.match = field(o, "match", path).get<bool>();
    row.note = field(o, "note", path).get<std::string>();
    r.rows.push_back(std::move(row));
  }
  for (const auto& o : as_array(field(j, "set_checks", path), path + ".set_checks")) {
    SetCheck c;
    c.k = as_size(field(o, "k", path), path + ".k");
    c.predicted = characters_from_json(field(o, "predicted", path), path);
    c.computed = characters_from_json(field(o, "computed", path), path);
    c.match = field(o, "match", path).get<bool>();
    r.set_checks.push_back(std::move(c));
  }
  return r;
}

void write_verification_table(std::ostream& os, const VerificationReport& r) {
  os << "# scenario " << r.scenario << " braid " << r.braid << " order " << r.order << " deleted";
  for (const auto c : r.deleted) os << " " << c + 1;
  os << "\n";
  os << "t\tdims_U\tlambda\tpredicted\tcomputed\tmatch\tnote\n";
  for (const auto& row : r.rows) {
    os << row.character.to_string() << "\t" << row.dims_u.to_string() << "\t";
    for (std::size_t i = 0; i < row.lambdas.size(); ++i) os << (i ? "," : "") << format_exponent(row.lambdas[i]);
    os << "\t" << (row.predicted ? row.predicted->to_string() : "-") << "\t"
       << (row.computed ? row.computed->to_string() : "-") << "\t" << (row.match ? "yes" : "NO") << "\t"
       << row.note << "\n";
  }
  for (const auto& c : r.set_checks) {
    os << "# set check V^1_" << c.k << ": predicted " << c.predicted.size() << " computed " << c.computed.size()
       << " " << (c.match ? "match" : "MISMATCH") << "\n";
  }
  os << (r.passed ? "PASS" : "FAIL") << " (" << r.mismatches() << " mismatches)\n";
}

}  // namespace jumploci
