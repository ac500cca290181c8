#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radio/bounds.hpp"
#include "radio/reference.hpp"
#include "radio/search.hpp"

namespace radio {

enum class RowStatus { Match, Tighter, Looser, Conflict };

/// Conflict iff computed.lower > reference.upper or computed.upper <
/// reference.lower (either would mean a bug somewhere). Match on interval
/// equality, Tighter when the computed interval sits inside the reference
/// one, Looser otherwise.
RowStatus classify(const ReferenceEntry& reference, const BoundRecord& computed);

struct GridRow {
  BoundRecord computed;
  std::optional<ReferenceEntry> reference;
  std::optional<RowStatus> status;  // present iff reference is
  std::string note;                 // per-cell diagnostics; not serialized
};

struct GridReport {
  std::vector<GridRow> rows;

  int conflicts() const;
};

struct GridRequest {
  std::vector<FamilyKind> families{FamilyKind::Consecutive, FamilyKind::OneAndT,
                                   FamilyKind::TwoConsecutive};
  int t_from = 2, t_to = 9;
  int k_from = 2, k_to = 9;
  SearchConfig config;
  double cell_budget_seconds = 30.0;  // wall clock per cell; 0 disables search
};

/// Evaluate every requested cell (analytic bounds, certified pattern upper,
/// prefix-search lower within the cell budget) and join the result against
/// the reference grid. Cells run concurrently; rows come back ordered by
/// (family, t, k). Per-cell failures land in the row note, never abort.
GridReport run_grid(const GridRequest& request,
                    const std::vector<ReferenceEntry>& reference);

// Report serialization: header "family,t,k,lower,upper,exact,source", one
// row per cell; source is "<lower origin>+<upper origin>". JSON mirrors the
// CSV as an array of objects. Parsing rejoins against the given reference.
std::string report_to_csv(const GridReport& report);
std::string report_to_json(const GridReport& report);
GridReport parse_report_csv(const std::string& text,
                            const std::vector<ReferenceEntry>& reference);
GridReport parse_report_json(const std::string& text,
                             const std::vector<ReferenceEntry>& reference);

}  // namespace radio
