#include "radio/pattern_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace radio {

namespace {

using nlohmann::json;

DistanceFamily family_from_doc(const json& doc) {
  std::string token = doc.at("family").get<std::string>();
  if (kind_from_token(token) == FamilyKind::General)
    return DistanceFamily::general(doc.at("dset").get<std::vector<long>>());
  return family_from_token(token, doc.at("t").get<int>());
}

}  // namespace

std::string pattern_to_json(const PeriodicPattern& pattern) {
  json doc;
  doc["family"] = to_token(pattern.family.kind());
  if (pattern.family.kind() == FamilyKind::General)
    doc["dset"] = pattern.family.dset();
  else
    doc["t"] = pattern.family.t();
  doc["k"] = pattern.k;
  doc["period"] = pattern.period;
  doc["labels"] = pattern.labels;
  if (pattern.step > 0) doc["step"] = pattern.step;
  doc["span"] = pattern.span();
  return doc.dump();
}

PeriodicPattern pattern_from_json(const std::string& text) {
  json doc = json::parse(text);
  PeriodicPattern pattern{family_from_doc(doc), doc.at("k").get<int>(),
                          doc.at("period").get<long>(),
                          doc.at("labels").get<std::vector<long>>(),
                          doc.value("step", 0L)};
  if (pattern.period < 1 ||
      pattern.labels.size() != static_cast<std::size_t>(pattern.period))
    throw std::invalid_argument("pattern document: labels must match the period");
  for (long c : pattern.labels)
    if (c < 0) throw std::invalid_argument("pattern document: negative label");
  return pattern;
}

void write_pattern_file(const PeriodicPattern& pattern, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << pattern_to_json(pattern) << '\n';
}

PeriodicPattern read_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return pattern_from_json(text);
}

}  // namespace radio
