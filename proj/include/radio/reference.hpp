#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "radio/family.hpp"

namespace radio {

/// One cell of the published bounds grid (three families, t and k in [2,9]).
/// exact marks entries known to be the precise value of rl_k.
struct ReferenceEntry {
  FamilyKind kind = FamilyKind::Consecutive;
  int t = 0;
  int k = 0;
  long lower = 0;
  long upper = 0;
  bool exact = false;

  bool operator==(const ReferenceEntry&) const = default;
};

const std::vector<ReferenceEntry>& embedded_reference();

// Canonical CSV serialization of the embedded grid; identical to the
// checked-in data/reference_bounds.csv resource.
std::string reference_csv();
std::vector<ReferenceEntry> parse_reference_csv(const std::string& text);

std::uint64_t fnv1a64(std::string_view bytes);

// Pinned checksum of reference_csv(); guards the transcription.
inline constexpr std::uint64_t kReferenceCsvChecksum = 0x3045c1454af2c74aULL;

}  // namespace radio
