#include "radio/report.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "radio/cache.hpp"
#include "radio/pattern.hpp"

namespace radio {

namespace {

using nlohmann::json;

std::string lower_token(LowerProvenance p) {
  switch (p) {
    case LowerProvenance::AnalyticProposition: return "analytic";
    case LowerProvenance::PrefixSearchProof: return "search";
    case LowerProvenance::ReferenceTable: return "reference";
  }
  throw std::logic_error("unreachable lower provenance");
}

std::string upper_token(UpperProvenance p) {
  switch (p) {
    case UpperProvenance::AnalyticTheorem: return "analytic";
    case UpperProvenance::VerifiedPattern: return "pattern";
    case UpperProvenance::ReferenceTable: return "reference";
  }
  throw std::logic_error("unreachable upper provenance");
}

LowerProvenance lower_from_token(const std::string& s) {
  if (s == "analytic") return LowerProvenance::AnalyticProposition;
  if (s == "search") return LowerProvenance::PrefixSearchProof;
  if (s == "reference") return LowerProvenance::ReferenceTable;
  throw std::invalid_argument("unknown lower provenance '" + s + "'");
}

UpperProvenance upper_from_token(const std::string& s) {
  if (s == "analytic") return UpperProvenance::AnalyticTheorem;
  if (s == "pattern") return UpperProvenance::VerifiedPattern;
  if (s == "reference") return UpperProvenance::ReferenceTable;
  throw std::invalid_argument("unknown upper provenance '" + s + "'");
}

std::string source_of(const BoundRecord& r) {
  return lower_token(r.lower_provenance) + "+" +
         (r.upper ? upper_token(r.upper_provenance) : "none");
}

int min_t(FamilyKind kind) { return kind == FamilyKind::OneAndT ? 3 : 2; }

DistanceFamily make_family(FamilyKind kind, int t) {
  switch (kind) {
    case FamilyKind::Consecutive: return DistanceFamily::consecutive(t);
    case FamilyKind::OneAndT: return DistanceFamily::one_and_t(t);
    case FamilyKind::TwoConsecutive: return DistanceFamily::two_consecutive(t);
    case FamilyKind::General: break;
  }
  throw std::invalid_argument("grid cells must use a named family");
}

const ReferenceEntry* find_reference(const std::vector<ReferenceEntry>& reference,
                                     FamilyKind kind, int t, int k) {
  for (const auto& e : reference)
    if (e.kind == kind && e.t == t && e.k == k) return &e;
  return nullptr;
}

GridRow make_row(BoundRecord computed, const std::vector<ReferenceEntry>& reference,
                 std::string note) {
  GridRow row{std::move(computed), std::nullopt, std::nullopt, std::move(note)};
  if (const ReferenceEntry* e = find_reference(reference, row.computed.family.kind(),
                                               row.computed.family.t(),
                                               row.computed.k)) {
    row.reference = *e;
    row.status = classify(*e, row.computed);
  }
  return row;
}

GridRow run_cell(FamilyKind kind, int t, int k, const GridRequest& request,
                 const std::vector<ReferenceEntry>& reference, ResultCache* cache) {
  DistanceFamily family = make_family(kind, t);
  try {
    if (request.cell_budget_seconds <= 0) {
      // Analytic formulas plus the machine-verified built-in pattern.
      BoundRecord record = best_bounds(family, k);
      CertifiedUpper cert = certified_upper(family, k);
      if (!record.upper || cert.span <= *record.upper) {
        record.upper = cert.span;
        record.upper_provenance = UpperProvenance::VerifiedPattern;
      }
      return make_row(std::move(record), reference, "");
    }
    SearchConfig config = request.config;
    config.time_budget = std::chrono::milliseconds(
        std::max(1L, std::lround(request.cell_budget_seconds * 1000)));
    ExactValueResult res = exact_value(family, k, config, cache);
    return make_row(std::move(res.record), reference, "");
  } catch (const std::exception& e) {
    BoundRecord record{family, k, 0, std::nullopt,
                       LowerProvenance::AnalyticProposition,
                       UpperProvenance::AnalyticTheorem};
    // plain logic_error marks contradicting certified data, not bad input
    bool conflict = dynamic_cast<const std::logic_error*>(&e) &&
                    !dynamic_cast<const std::invalid_argument*>(&e);
    return make_row(std::move(record), reference,
                    std::string(conflict ? "internal conflict: " : "") + e.what());
  }
}

}  // namespace

RowStatus classify(const ReferenceEntry& reference, const BoundRecord& computed) {
  const long upper = computed.upper.value_or(LONG_MAX);
  if (computed.lower > reference.upper || upper < reference.lower)
    return RowStatus::Conflict;
  if (computed.lower == reference.lower && computed.upper && upper == reference.upper)
    return RowStatus::Match;
  if (computed.lower >= reference.lower && computed.upper && upper <= reference.upper)
    return RowStatus::Tighter;
  return RowStatus::Looser;
}

int GridReport::conflicts() const {
  int n = 0;
  for (const auto& row : rows)
    if (row.status == RowStatus::Conflict) ++n;
  return n;
}

GridReport run_grid(const GridRequest& request,
                    const std::vector<ReferenceEntry>& reference) {
  request.config.validate();

  struct Cell {
    FamilyKind kind;
    int t, k;
  };
  std::vector<Cell> cells;
  for (FamilyKind kind : request.families) {
    if (kind == FamilyKind::General)
      throw std::invalid_argument("grids cover the named families only");
    for (int t = std::max(request.t_from, min_t(kind)); t <= request.t_to; ++t)
      for (int k = std::max(request.k_from, 1); k <= request.k_to; ++k)
        cells.push_back({kind, t, k});
  }

  auto cache = ResultCache::from_environment();
  std::vector<std::optional<GridRow>> rows(cells.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (std::size_t i = 0; i < cells.size(); ++i)
    rows[i] = run_cell(cells[i].kind, cells[i].t, cells[i].k, request, reference,
                       cache.get());

  GridReport report;
  report.rows.reserve(rows.size());
  for (auto& row : rows) report.rows.push_back(std::move(*row));
  std::sort(report.rows.begin(), report.rows.end(),
            [](const GridRow& a, const GridRow& b) {
              return std::tuple(static_cast<int>(a.computed.family.kind()),
                                a.computed.family.t(), a.computed.k) <
                     std::tuple(static_cast<int>(b.computed.family.kind()),
                                b.computed.family.t(), b.computed.k);
            });
  return report;
}

std::string report_to_csv(const GridReport& report) {
  std::ostringstream out;
  out << "family,t,k,lower,upper,exact,source\n";
  for (const GridRow& row : report.rows) {
    const BoundRecord& r = row.computed;
    out << to_token(r.family.kind()) << ',' << r.family.t() << ',' << r.k << ','
        << r.lower << ',';
    if (r.upper) out << *r.upper;
    out << ',' << (r.upper && r.lower == *r.upper ? "true" : "false") << ','
        << source_of(r) << '\n';
  }
  return out.str();
}

std::string report_to_json(const GridReport& report) {
  json rows = json::array();
  for (const GridRow& row : report.rows) {
    const BoundRecord& r = row.computed;
    json doc;
    doc["family"] = to_token(r.family.kind());
    doc["t"] = r.family.t();
    doc["k"] = r.k;
    doc["lower"] = r.lower;
    if (r.upper)
      doc["upper"] = *r.upper;
    else
      doc["upper"] = nullptr;
    doc["exact"] = r.upper && r.lower == *r.upper;
    doc["source"] = source_of(r);
    rows.push_back(std::move(doc));
  }
  return rows.dump(2) + "\n";
}

namespace {

BoundRecord record_from_fields(const std::string& family_token, int t, int k,
                               long lower, std::optional<long> upper,
                               const std::string& source) {
  auto plus = source.find('+');
  if (plus == std::string::npos)
    throw std::invalid_argument("report: bad source '" + source + "'");
  BoundRecord record{make_family(kind_from_token(family_token), t), k, lower, upper,
                     lower_from_token(source.substr(0, plus)),
                     UpperProvenance::AnalyticTheorem};
  std::string up = source.substr(plus + 1);
  if (up != "none") record.upper_provenance = upper_from_token(up);
  return record;
}

}  // namespace

GridReport parse_report_csv(const std::string& text,
                            const std::vector<ReferenceEntry>& reference) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "family,t,k,lower,upper,exact,source")
    throw std::invalid_argument("report csv: bad header");
  GridReport report;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 7)
      throw std::invalid_argument("report csv: bad row '" + line + "'");
    std::optional<long> upper;
    if (!fields[4].empty()) upper = std::stol(fields[4]);
    report.rows.push_back(make_row(
        record_from_fields(fields[0], std::stoi(fields[1]), std::stoi(fields[2]),
                           std::stol(fields[3]), upper, fields[6]),
        reference, ""));
  }
  return report;
}

GridReport parse_report_json(const std::string& text,
                             const std::vector<ReferenceEntry>& reference) {
  json rows = json::parse(text);
  if (!rows.is_array()) throw std::invalid_argument("report json: expected an array");
  GridReport report;
  for (const json& doc : rows) {
    std::optional<long> upper;
    if (!doc.at("upper").is_null()) upper = doc.at("upper").get<long>();
    report.rows.push_back(
        make_row(record_from_fields(doc.at("family").get<std::string>(),
                                    doc.at("t").get<int>(), doc.at("k").get<int>(),
                                    doc.at("lower").get<long>(), upper,
                                    doc.at("source").get<std::string>()),
                 reference, ""));
  }
  return report;
}

}  // namespace radio
