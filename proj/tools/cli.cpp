#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "knots/lattice.hpp"

namespace knots::cli {

namespace {

using json = nlohmann::ordered_json;

// Known prime knot counts, for the reference column of the summary.
constexpr std::array<long long, 11> kActualKnots{1, 0, 0, 1, 1, 2, 3, 7, 21, 49, 165};

std::string field(const std::string& s) { return s.empty() ? "-" : s; }
std::string unfield(const std::string& s) { return s == "-" ? std::string{} : s; }

std::string header_line(const RunConfig& cfg) {
  std::ostringstream h;
  h << "# knotenum catalog max_crossings=" << cfg.max_crossings << " up_budget=" << cfg.up_budget
    << " orbit_budget=" << cfg.orbit_budget << " m_max=" << cfg.m_max;
  return h.str();
}

bool write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << bytes;
  return static_cast<bool>(f.flush());
}

int to_int(const std::string& s, int line, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw CatalogError(line, std::string("bad ") + what + " '" + s + "'");
}

KnotRecord make_record(int line, int n, const std::string& code, int shadow_id, const std::string& bits,
                       const std::string& invariants, const std::string& status) {
  KnotRecord r;
  r.n = n;
  try {
    r.code = parse_code(code);
  } catch (const std::exception& e) {
    throw CatalogError(line, std::string("bad code: ") + e.what());
  }
  if (r.code.crossings() != n) throw CatalogError(line, "code has " + std::to_string(r.code.crossings()) + " crossings, n says " + std::to_string(n));
  r.shadow_id = shadow_id;
  r.assignment_bits = bits;
  r.invariants = invariants;
  r.status = status;
  return r;
}

Catalog parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
    throw CatalogError(line, "malformed JSON");
  }
  Catalog catalog;
  if (!doc.contains("records") || !doc["records"].is_array()) throw CatalogError(1, "no records array");
  int idx = 0;
  for (const json& r : doc["records"]) {
    ++idx;
    try {
      catalog.records.push_back(make_record(idx, r.at("n").get<int>(), r.at("code").get<std::string>(),
                                            r.at("shadow_id").get<int>(), r.at("assignment_bits").get<std::string>(),
                                            r.at("invariants").get<std::string>(), r.at("status").get<std::string>()));
    } catch (const json::exception& e) {
      throw CatalogError(idx, std::string("record ") + std::to_string(idx) + ": " + e.what());
    }
  }
  return catalog;
}

}  // namespace

std::string check_config(const RunConfig& cfg) {
  if (cfg.max_crossings < 0) return "max-crossings must be non-negative";
  if (cfg.max_crossings > kHardCap && !cfg.allow_large) {
    return "max-crossings above " + std::to_string(kHardCap) + " needs --i-know-this-is-slow";
  }
  if (cfg.max_crossings > kMaxCrossings) return "max-crossings above " + std::to_string(kMaxCrossings) + " is not supported";
  if (cfg.up_budget < 0 || cfg.up_budget > 1) return "up-budget must be 0 or 1";
  if (cfg.m_max < 0 || cfg.m_max > kMaxClassDegree) return "m-max must be in 0.." + std::to_string(kMaxClassDegree);
  if (cfg.orbit_budget == 0) return "orbit-budget must be positive";
  if (cfg.format != "tsv" && cfg.format != "json") return "format must be tsv or json";
  if (cfg.workers < 1) return "workers must be at least 1";
  return {};
}

std::string format_catalog(const Catalog& catalog, const RunConfig& cfg) {
  if (cfg.format == "json") {
    json doc;
    doc["meta"] = {{"max_crossings", cfg.max_crossings},
                   {"up_budget", cfg.up_budget},
                   {"orbit_budget", cfg.orbit_budget},
                   {"m_max", cfg.m_max}};
    doc["summary"] = json::array();
    for (const SummaryRow& row : catalog.summary) {
      doc["summary"].push_back(
          {{"n", row.n}, {"shadows", row.shadows}, {"assignments", row.assignments}, {"survivors", row.survivors}});
    }
    doc["records"] = json::array();
    for (const KnotRecord& r : catalog.records) {
      doc["records"].push_back({{"n", r.n},
                                {"code", to_string(r.code)},
                                {"shadow_id", r.shadow_id},
                                {"assignment_bits", r.assignment_bits},
                                {"invariants", r.invariants},
                                {"status", r.status}});
    }
    return doc.dump(1) + "\n";
  }
  std::ostringstream out;
  out << header_line(cfg) << '\n';
  out << "n\tcode\tshadow_id\tassignment_bits\tinvariants\tstatus\n";
  for (const KnotRecord& r : catalog.records) {
    out << r.n << '\t' << field(to_string(r.code)) << '\t' << r.shadow_id << '\t' << field(r.assignment_bits) << '\t'
        << field(r.invariants) << '\t' << r.status << '\n';
  }
  return out.str();
}

Catalog parse_catalog(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  Catalog catalog;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || line.rfind("n\t", 0) == 0) continue;
    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (true) {
      const auto tab = line.find('\t', pos);
      cols.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (cols.size() != 6) throw CatalogError(lineno, "expected 6 tab-separated fields, got " + std::to_string(cols.size()));
    catalog.records.push_back(make_record(lineno, to_int(cols[0], lineno, "n"), unfield(cols[1]),
                                          to_int(cols[2], lineno, "shadow_id"), unfield(cols[3]), unfield(cols[4]),
                                          cols[5]));
  }
  return catalog;
}

void print_summary(const Catalog& catalog, std::ostream& out) {
  out << std::left << std::setw(4) << "n" << std::right << std::setw(10) << "Shadows" << std::setw(20)
      << "Shadows*2^(n-1)" << std::setw(18) << "Program's Knots" << std::setw(16) << "Actual Knots" << '\n';
  for (const SummaryRow& row : catalog.summary) {
    const auto n = static_cast<std::size_t>(row.n);
    const std::string actual = n < kActualKnots.size() ? std::to_string(kActualKnots[n]) : "-";
    out << std::left << std::setw(4) << row.n << std::right << std::setw(10) << row.shadows << std::setw(20)
        << row.assignments << std::setw(18) << row.survivors << std::setw(16) << actual << '\n';
  }
}

void annotate(Catalog& catalog, int m_max, int workers) {
  const auto count = static_cast<long long>(catalog.records.size());
  std::vector<std::string> certs(catalog.records.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, workers)) if (workers > 1)
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    certs[idx] = certificate(invariant_vector(catalog.records[idx].code, m_max));
  }
  for (std::size_t i = 0; i < certs.size(); ++i) catalog.records[i].invariants = std::move(certs[i]);
}

std::vector<std::vector<std::size_t>> unseparated(const Catalog& catalog) {
  std::map<std::string, std::vector<std::size_t>> by_cert;
  for (std::size_t i = 0; i < catalog.records.size(); ++i) by_cert[catalog.records[i].invariants].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [cert, idx] : by_cert) {
    if (idx.size() > 1) out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (const std::string why = check_config(cfg); !why.empty()) {
    err << "config error: " << why << '\n';
    return kConfig;
  }
  EnumerateOptions options;
  options.reduce.up_budget = cfg.up_budget;
  options.reduce.orbit_budget = cfg.orbit_budget;
  options.workers = cfg.workers;
  Catalog catalog;
  try {
    catalog = enumerate_knots(cfg.max_crossings, options);
  } catch (const EnumerationError& e) {
    err << "enumeration failed at n=" << e.crossings() << " shadow " << e.shadow_id() << ": " << e.what() << '\n';
    return e.budget_exhausted() ? kBudget : kConfig;
  }
  if (cfg.m_max > 0) annotate(catalog, cfg.m_max, cfg.workers);
  const std::string bytes = format_catalog(catalog, cfg);
  if (cfg.out.empty()) {
    out << bytes;
  } else if (!write_file(cfg.out, bytes)) {
    err << "cannot write " << cfg.out << '\n';
    return kIo;
  }
  print_summary(catalog, cfg.out.empty() ? err : out);
  return kOk;
}

int cmd_invariants(const std::string& in_path, const std::string& out_path, int m_max, int workers,
                   std::ostream& out, std::ostream& err) {
  if (m_max < 1 || m_max > kMaxClassDegree) {
    err << "config error: m-max must be in 1.." << kMaxClassDegree << '\n';
    return kConfig;
  }
  std::ifstream f(in_path, std::ios::binary);
  if (!f) {
    err << "cannot read " << in_path << '\n';
    return kIo;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  Catalog catalog;
  try {
    catalog = parse_catalog(text);
  } catch (const CatalogError& e) {
    err << in_path << ": " << e.what() << '\n';
    return kConfig;
  }
  annotate(catalog, m_max, workers);

  RunConfig shape;
  shape.m_max = m_max;
  shape.format = text.find_first_not_of(" \t\r\n") != std::string::npos && text[text.find_first_not_of(" \t\r\n")] == '{'
                     ? "json"
                     : "tsv";
  shape.max_crossings = 0;
  for (const KnotRecord& r : catalog.records) shape.max_crossings = std::max(shape.max_crossings, r.n);
  const std::string target = out_path.empty() ? in_path : out_path;
  if (!write_file(target, format_catalog(catalog, shape))) {
    err << "cannot write " << target << '\n';
    return kIo;
  }
  const auto groups = unseparated(catalog);
  for (const auto& g : groups) {
    out << "unseparated:";
    for (std::size_t i : g) {
      const KnotRecord& r = catalog.records[i];
      out << " [" << r.n << ": " << to_string(r.code) << "]";
    }
    out << '\n';
  }
  out << catalog.records.size() << " records, " << groups.size() << " unseparated groups at m_max=" << m_max << '\n';
  return kOk;
}

int cmd_lattice(const std::string& sub, const std::string& polygon, std::size_t length_budget,
                std::size_t step_budget, char axis, std::ostream& out, std::ostream& err) {
  Word w;
  try {
    w = parse_polygon(polygon);
  } catch (const LatticeError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfig;
  }
  if (const auto v = validate_polygon(w)) {
    if (sub == "validate") {
      out << "violation at letters " << v->first << ".." << v->last << ": " << v->message << '\n';
    } else {
      err << "not a polygon: letters " << v->first << ".." << v->last << ": " << v->message << '\n';
    }
    return kConfig;
  }
  if (sub == "validate") {
    out << "ok " << w.size() << " edges\n";
    return kOk;
  }
  if (sub == "reduce") {
    const std::size_t budget = length_budget == 0 ? w.size() : length_budget;
    const LatticeReduction r = reduce_lattice(w, budget, step_budget);
    out << polygon_to_string(r.best) << '\n';
    if (r.exhausted) {
      err << "step budget exhausted after " << r.steps << " moves\n";
      return kBudget;
    }
    return kOk;
  }
  if (sub == "project") {
    const Axis ax = axis == 'x' ? Axis::X : axis == 'y' ? Axis::Y : Axis::Z;
    try {
      const PairCode code = project_to_code(w, ax);
      out << "code: " << to_string(code) << '\n';
      out << "reduced: " << to_string(canonical_relabel(simplify(code))) << '\n';
    } catch (const LatticeError& e) {
      err << e.what() << '\n';
      return kConfig;
    } catch (const MoveError& e) {
      err << e.what() << '\n';
      return kBudget;
    }
    return kOk;
  }
  err << "config error: unknown lattice command " << sub << '\n';
  return kConfig;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime knot enumeration, knot group invariants and lattice polygons"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate prime knot names up to a crossing number");
  enumerate->add_option("--max-crossings", cfg.max_crossings, "Largest crossing number")->capture_default_str();
  enumerate->add_option("--up-budget", cfg.up_budget, "Upward second moves allowed per excursion (0 or 1)")
      ->capture_default_str();
  enumerate->add_option("--m-max", cfg.m_max, "Annotate invariants up to this degree (0 skips)")->capture_default_str();
  enumerate->add_option("--orbit-budget", cfg.orbit_budget, "Largest third-move orbit explored")->capture_default_str();
  enumerate->add_option("--format", cfg.format, "Catalog format: tsv or json")->capture_default_str();
  enumerate->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  enumerate->add_option("--out", cfg.out, "Catalog path (stdout when absent)");
  enumerate->add_flag("--i-know-this-is-slow", cfg.allow_large, "Lift the crossing-number cap");

  std::string catalog_in;
  std::string catalog_out;
  int inv_m_max = kDefaultMMax;
  int inv_workers = 1;
  auto* invariants = app.add_subcommand("invariants", "Annotate a catalog with class-realizability vectors");
  invariants->add_option("catalog", catalog_in, "Catalog file")->required();
  invariants->add_option("--m-max", inv_m_max, "Largest symmetric group degree")->capture_default_str();
  invariants->add_option("--workers", inv_workers, "Worker threads")->capture_default_str();
  invariants->add_option("--out", catalog_out, "Annotated catalog path (rewrites the input when absent)");

  std::string lattice_cmd;
  std::string polygon;
  std::size_t length_budget = 0;
  std::size_t step_budget = 200000;
  char axis = 'z';
  auto* lattice = app.add_subcommand("lattice", "Lattice polygon tools");
  lattice->add_option("command", lattice_cmd, "validate, reduce or project")
      ->required()
      ->check(CLI::IsMember({"validate", "reduce", "project"}));
  lattice->add_option("polygon", polygon, "Comma-separated letters 1..6")->required();
  lattice->add_option("--length-budget", length_budget, "Longest word explored (default: input length)");
  lattice->add_option("--step-budget", step_budget, "Move applications before giving up")->capture_default_str();
  lattice->add_option("--axis", axis, "Projection axis x, y or z")
      ->check(CLI::IsMember({'x', 'y', 'z'}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfig;
  }

  if (*enumerate) return cmd_enumerate(cfg, out, err);
  if (*invariants) return cmd_invariants(catalog_in, catalog_out, inv_m_max, inv_workers, out, err);
  return cmd_lattice(lattice_cmd, polygon, length_budget, step_budget, axis, out, err);
}

}  // namespace knots::cli
