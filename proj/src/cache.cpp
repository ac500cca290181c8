#include "radio/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "radio/version.hpp"

namespace radio {

namespace {

using nlohmann::json;

std::string verdict_token(const ProofOutcome& o) {
  return o.proven() ? "proven-greater" : "inconclusive";
}

std::string reason_token(ProofOutcome::Reason reason) {
  switch (reason) {
    case ProofOutcome::Reason::Exhausted: return "exhausted";
    case ProofOutcome::Reason::WitnessFound: return "witness-found";
    case ProofOutcome::Reason::BudgetExhausted: return "budget-exhausted";
  }
  throw std::logic_error("unreachable proof reason");
}

ProofOutcome::Reason reason_from_token(const std::string& token) {
  if (token == "exhausted") return ProofOutcome::Reason::Exhausted;
  if (token == "witness-found") return ProofOutcome::Reason::WitnessFound;
  if (token == "budget-exhausted") return ProofOutcome::Reason::BudgetExhausted;
  throw std::invalid_argument("unknown proof reason '" + token + "'");
}

json outcome_to_doc(const ProofOutcome& o) {
  json doc;
  doc["verdict"] = verdict_token(o);
  doc["reason"] = reason_token(o.reason);
  doc["l"] = o.l;
  doc["prefix"] = o.prefix_used;
  doc["nodes"] = o.nodes;
  doc["elapsed_seconds"] = o.elapsed_seconds;
  if (o.witness) doc["witness"] = *o.witness;
  return doc;
}

ProofOutcome outcome_from_doc(const json& doc) {
  ProofOutcome o;
  o.verdict = doc.at("verdict").get<std::string>() == "proven-greater"
                  ? ProofOutcome::Verdict::ProvenGreaterThan
                  : ProofOutcome::Verdict::Inconclusive;
  o.reason = reason_from_token(doc.at("reason").get<std::string>());
  o.l = doc.at("l").get<long>();
  o.prefix_used = doc.at("prefix").get<int>();
  o.nodes = doc.at("nodes").get<std::uint64_t>();
  o.elapsed_seconds = doc.at("elapsed_seconds").get<double>();
  if (doc.contains("witness"))
    o.witness = doc.at("witness").get<std::vector<long>>();
  return o;
}

std::string make_key(const DistanceFamily& family, int k, long l,
                     const SearchConfig& config) {
  std::ostringstream key;
  key << kVersion << "|prefix-proof|" << family.name() << "|k=" << k << "|l=" << l
      << "|n=" << config.max_prefix << "|nodes=" << config.node_budget
      << "|time_ms=" << config.time_budget.count();
  return key.str();
}

}  // namespace

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // nothing cached yet
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      json doc = json::parse(line);
      std::string key = doc.at("key").get<std::string>();
      if (key.rfind(kVersion, 0) != 0) continue;  // other artifact version
      entries_[key] = outcome_from_doc(doc.at("outcome"));
    } catch (const std::exception&) {
      // Malformed or foreign lines are skipped; the cache is best effort.
    }
  }
}

std::unique_ptr<ResultCache> ResultCache::from_environment() {
  const char* dir = std::getenv("RADIO_CACHE_DIR");
  if (!dir || !*dir) return nullptr;
  std::filesystem::path path = std::filesystem::path(dir) / "radio_cache.jsonl";
  return std::make_unique<ResultCache>(path.string());
}

std::optional<ProofOutcome> ResultCache::lookup(const DistanceFamily& family, int k,
                                                long l,
                                                const SearchConfig& config) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(make_key(family, k, l, config));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const DistanceFamily& family, int k, long l,
                        const SearchConfig& config, const ProofOutcome& outcome) {
  std::string key = make_key(family, k, l, config);
  std::lock_guard<std::mutex> lock(mutex_);
  if (entries_.count(key)) return;
  entries_[key] = outcome;
  json doc;
  doc["key"] = key;
  doc["outcome"] = outcome_to_doc(outcome);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to cache file " + path_);
  out << doc.dump() << '\n';
}

std::size_t ResultCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

std::string proof_to_json(const DistanceFamily& family, int k,
                          const ProofOutcome& outcome) {
  json doc;
  doc["type"] = "prefix-proof";
  doc["version"] = std::string(kVersion);
  doc["family"] = to_token(family.kind());
  if (family.kind() == FamilyKind::General)
    doc["dset"] = family.dset();
  else
    doc["t"] = family.t();
  doc["k"] = k;
  doc.update(outcome_to_doc(outcome));
  return doc.dump();
}

ProofOutcome proof_outcome_from_json(const std::string& text) {
  return outcome_from_doc(json::parse(text));
}

}  // namespace radio
