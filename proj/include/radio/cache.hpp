#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "radio/search.hpp"

namespace radio {

/// Append-only JSONL store for prefix-search outcomes so grid runs resume.
/// Entries are keyed by the artifact version and the exact search parameters
/// (family, t, k, l, prefix, node and time budgets); lines from other
/// versions are ignored. Enabled by the RADIO_CACHE_DIR environment
/// variable, which names the directory holding radio_cache.jsonl.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  // Empty when RADIO_CACHE_DIR is unset.
  static std::unique_ptr<ResultCache> from_environment();

  std::optional<ProofOutcome> lookup(const DistanceFamily& family, int k, long l,
                                     const SearchConfig& config) const;
  void store(const DistanceFamily& family, int k, long l,
             const SearchConfig& config, const ProofOutcome& outcome);

  std::size_t size() const;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::map<std::string, ProofOutcome> entries_;
  mutable std::mutex mutex_;
};

// Proof certificate document shared by the cache and the CLI.
std::string proof_to_json(const DistanceFamily& family, int k,
                          const ProofOutcome& outcome);
ProofOutcome proof_outcome_from_json(const std::string& text);

}  // namespace radio
