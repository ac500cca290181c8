#pragma once

#include <string>

#include "radio/pattern.hpp"

namespace radio {

// Pattern document: {"family": <token>, "t": int, "k": int, "period": int,
// "labels": [int...]} with optional "dset" (general families), "step" and
// "span". Unknown keys are ignored on input.
std::string pattern_to_json(const PeriodicPattern& pattern);
PeriodicPattern pattern_from_json(const std::string& text);

void write_pattern_file(const PeriodicPattern& pattern, const std::string& path);
PeriodicPattern read_pattern_file(const std::string& path);

}  // namespace radio
