#include "radio/reference.hpp"

#include <sstream>
#include <stdexcept>

namespace radio {

namespace {

// Published lower/upper grid for the three families, t and k in [2,9];
// exact cells are flagged. Canonical CSV, also shipped as
// data/reference_bounds.csv; guarded by kReferenceCsvChecksum.
constexpr const char* kReferenceCsv = R"csv(family,t,k,lower,upper,exact,source
consecutive,2,2,6,6,true,reference
consecutive,2,3,12,12,true,reference
consecutive,2,4,20,20,true,reference
consecutive,2,5,30,30,true,reference
consecutive,2,6,42,42,true,reference
consecutive,2,7,56,56,true,reference
consecutive,2,8,65,72,false,reference
consecutive,2,9,82,90,false,reference
consecutive,3,2,8,8,true,reference
consecutive,3,3,17,17,true,reference
consecutive,3,4,28,28,true,reference
consecutive,3,5,43,43,true,reference
consecutive,3,6,55,60,false,reference
consecutive,3,7,74,81,false,reference
consecutive,3,8,97,104,false,reference
consecutive,3,9,122,135,false,reference
consecutive,4,2,10,10,true,reference
consecutive,4,3,22,22,true,reference
consecutive,4,4,36,36,true,reference
consecutive,4,5,51,56,false,reference
consecutive,4,6,73,78,false,reference
consecutive,4,7,99,112,false,reference
consecutive,4,8,129,136,false,reference
consecutive,4,9,163,180,false,reference
consecutive,5,2,12,12,true,reference
consecutive,5,3,27,27,true,reference
consecutive,5,4,43,43,true,reference
consecutive,5,5,63,69,false,reference
consecutive,5,6,91,96,false,reference
consecutive,5,7,123,131,false,reference
consecutive,5,8,161,168,false,reference
consecutive,5,9,203,217,false,reference
consecutive,6,2,14,14,true,reference
consecutive,6,3,32,32,true,reference
consecutive,6,4,49,52,false,reference
consecutive,6,5,76,82,false,reference
consecutive,6,6,109,114,false,reference
consecutive,6,7,148,163,false,reference
consecutive,6,8,193,200,false,reference
consecutive,6,9,244,259,false,reference
consecutive,7,2,16,16,true,reference
consecutive,7,3,32,37,false,reference
consecutive,7,4,57,60,false,reference
consecutive,7,5,88,95,false,reference
consecutive,7,6,127,132,false,reference
consecutive,7,7,172,189,false,reference
consecutive,7,8,225,232,false,reference
consecutive,7,9,284,301,false,reference
consecutive,8,2,18,18,true,reference
consecutive,8,3,37,42,false,reference
consecutive,8,4,65,68,false,reference
consecutive,8,5,101,108,false,reference
consecutive,8,6,145,150,false,reference
consecutive,8,7,197,215,false,reference
consecutive,8,8,257,264,false,reference
consecutive,8,9,325,343,false,reference
consecutive,9,2,20,20,true,reference
consecutive,9,3,41,47,false,reference
consecutive,9,4,73,76,false,reference
consecutive,9,5,113,121,false,reference
consecutive,9,6,163,168,false,reference
consecutive,9,7,221,241,false,reference
consecutive,9,8,289,296,false,reference
consecutive,9,9,365,385,false,reference
one-and-t,2,2,6,6,true,reference
one-and-t,2,3,12,12,true,reference
one-and-t,2,4,20,20,true,reference
one-and-t,2,5,30,30,true,reference
one-and-t,2,6,42,42,true,reference
one-and-t,2,7,56,56,true,reference
one-and-t,2,8,65,72,false,reference
one-and-t,2,9,82,90,false,reference
one-and-t,3,2,6,6,true,reference
one-and-t,3,3,11,11,true,reference
one-and-t,3,4,24,24,true,reference
one-and-t,3,5,33,33,true,reference
one-and-t,3,6,51,52,false,reference
one-and-t,3,7,61,73,false,reference
one-and-t,3,8,81,100,false,reference
one-and-t,3,9,105,121,false,reference
one-and-t,4,2,6,6,true,reference
one-and-t,4,3,15,15,true,reference
one-and-t,4,4,26,26,true,reference
one-and-t,4,5,43,43,true,reference
one-and-t,4,6,54,64,false,reference
one-and-t,4,7,69,94,false,reference
one-and-t,4,8,95,116,false,reference
one-and-t,4,9,124,152,false,reference
one-and-t,5,2,6,6,true,reference
one-and-t,5,3,13,13,true,reference
one-and-t,5,4,26,26,true,reference
one-and-t,5,5,41,41,true,reference
one-and-t,5,6,49,66,false,reference
one-and-t,5,7,73,91,false,reference
one-and-t,5,8,103,140,false,reference
one-and-t,5,9,137,165,false,reference
one-and-t,6,2,7,7,true,reference
one-and-t,6,3,14,14,true,reference
one-and-t,6,4,28,28,true,reference
one-and-t,6,5,41,48,false,reference
one-and-t,6,6,46,72,false,reference
one-and-t,6,7,73,102,false,reference
one-and-t,6,8,105,147,false,reference
one-and-t,6,9,144,196,false,reference
one-and-t,7,2,7,7,true,reference
one-and-t,7,3,12,12,true,reference
one-and-t,7,4,26,26,true,reference
one-and-t,7,5,37,37,true,reference
one-and-t,7,6,42,78,false,reference
one-and-t,7,7,69,111,false,reference
one-and-t,7,8,104,146,false,reference
one-and-t,7,9,145,201,false,reference
one-and-t,8,2,7,7,true,reference
one-and-t,8,3,13,13,true,reference
one-and-t,8,4,26,26,true,reference
one-and-t,8,5,36,48,false,reference
one-and-t,8,6,46,75,false,reference
one-and-t,8,7,62,116,false,reference
one-and-t,8,8,98,159,false,reference
one-and-t,8,9,141,212,false,reference
one-and-t,9,2,6,6,true,reference
one-and-t,9,3,11,11,true,reference
one-and-t,9,4,25,28,false,reference
one-and-t,9,5,32,41,false,reference
one-and-t,9,6,40,74,false,reference
one-and-t,9,7,54,99,false,reference
one-and-t,9,8,89,156,false,reference
one-and-t,9,9,134,207,false,reference
two-consecutive,2,2,6,6,true,reference
two-consecutive,2,3,12,12,true,reference
two-consecutive,2,4,20,20,true,reference
two-consecutive,2,5,30,30,true,reference
two-consecutive,2,6,42,42,true,reference
two-consecutive,2,7,56,56,true,reference
two-consecutive,2,8,65,72,false,reference
two-consecutive,2,9,82,90,false,reference
two-consecutive,3,2,6,6,true,reference
two-consecutive,3,3,14,14,true,reference
two-consecutive,3,4,28,28,true,reference
two-consecutive,3,5,40,40,true,reference
two-consecutive,3,6,51,60,false,reference
two-consecutive,3,7,60,78,false,reference
two-consecutive,3,8,66,104,false,reference
two-consecutive,3,9,71,128,false,reference
two-consecutive,4,2,7,7,true,reference
two-consecutive,4,3,14,14,true,reference
two-consecutive,4,4,27,27,true,reference
two-consecutive,4,5,40,48,false,reference
two-consecutive,4,6,50,70,false,reference
two-consecutive,4,7,57,99,false,reference
two-consecutive,4,8,65,131,false,reference
two-consecutive,4,9,71,166,false,reference
two-consecutive,5,2,6,6,true,reference
two-consecutive,5,3,13,13,true,reference
two-consecutive,5,4,26,26,true,reference
two-consecutive,5,5,37,50,false,reference
two-consecutive,5,6,47,78,false,reference
two-consecutive,5,7,55,116,false,reference
two-consecutive,5,8,61,150,false,reference
two-consecutive,5,9,70,191,false,reference
two-consecutive,6,2,6,6,true,reference
two-consecutive,6,3,14,14,true,reference
two-consecutive,6,4,24,30,false,reference
two-consecutive,6,5,32,54,false,reference
two-consecutive,6,6,40,69,false,reference
two-consecutive,6,7,50,108,false,reference
two-consecutive,6,8,60,153,false,reference
two-consecutive,6,9,65,208,false,reference
two-consecutive,7,2,7,7,true,reference
two-consecutive,7,3,13,13,true,reference
two-consecutive,7,4,21,28,false,reference
two-consecutive,7,5,28,48,false,reference
two-consecutive,7,6,36,74,false,reference
two-consecutive,7,7,45,109,false,reference
two-consecutive,7,8,55,148,false,reference
two-consecutive,7,9,60,223,false,reference
two-consecutive,8,2,7,7,true,reference
two-consecutive,8,3,13,13,true,reference
two-consecutive,8,4,19,26,false,reference
two-consecutive,8,5,24,48,false,reference
two-consecutive,8,6,32,73,false,reference
two-consecutive,8,7,40,120,false,reference
two-consecutive,8,8,49,148,false,reference
two-consecutive,8,9,56,211,false,reference
two-consecutive,9,2,6,6,true,reference
two-consecutive,9,3,12,12,true,reference
two-consecutive,9,4,17,27,false,reference
two-consecutive,9,5,23,53,false,reference
two-consecutive,9,6,30,70,false,reference
two-consecutive,9,7,36,109,false,reference
two-consecutive,9,8,44,164,false,reference
two-consecutive,9,9,51,233,false,reference
)csv";

}  // namespace

std::string reference_csv() { return kReferenceCsv; }

const std::vector<ReferenceEntry>& embedded_reference() {
  static const std::vector<ReferenceEntry> entries = parse_reference_csv(kReferenceCsv);
  return entries;
}

std::vector<ReferenceEntry> parse_reference_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "family,t,k,lower,upper,exact,source")
    throw std::invalid_argument("reference csv: bad header");
  std::vector<ReferenceEntry> entries;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 7)
      throw std::invalid_argument("reference csv: bad row '" + line + "'");
    ReferenceEntry e;
    e.kind = kind_from_token(fields[0]);
    e.t = std::stoi(fields[1]);
    e.k = std::stoi(fields[2]);
    e.lower = std::stol(fields[3]);
    e.upper = std::stol(fields[4]);
    if (fields[5] != "true" && fields[5] != "false")
      throw std::invalid_argument("reference csv: bad exact flag '" + fields[5] + "'");
    e.exact = fields[5] == "true";
    if (e.lower > e.upper || (e.exact && e.lower != e.upper))
      throw std::invalid_argument("reference csv: inconsistent bounds in '" + line + "'");
    entries.push_back(e);
  }
  return entries;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace radio
