#pragma once

#include <string>
#include <vector>

namespace radio {

enum class FamilyKind { Consecutive, OneAndT, TwoConsecutive, General };

/// Distance set D of an infinite distance graph on the integers: i ~ j iff
/// |i - j| is in D. The three named kinds are Consecutive(t) = {1,...,t}
/// with t >= 2, OneAndT(t) = {1,t} with t >= 3 and TwoConsecutive(t) =
/// {t-1,t} with t >= 2. General carries an explicit set. Construction
/// rejects sets whose gcd exceeds 1 (the graph would be disconnected).
class DistanceFamily {
 public:
  static DistanceFamily consecutive(int t);
  static DistanceFamily one_and_t(int t);
  static DistanceFamily two_consecutive(int t);
  static DistanceFamily general(std::vector<long> dset);

  FamilyKind kind() const { return kind_; }
  int t() const { return t_; }  // 0 for General
  const std::vector<long>& dset() const { return dset_; }
  long maxstep() const { return dset_.back(); }
  std::string name() const;

  bool operator==(const DistanceFamily&) const = default;

 private:
  DistanceFamily(FamilyKind kind, int t, std::vector<long> dset);

  FamilyKind kind_;
  int t_;
  std::vector<long> dset_;
};

std::string to_token(FamilyKind kind);
FamilyKind kind_from_token(const std::string& token);
DistanceFamily family_from_token(const std::string& token, int t);

// delta = q*t + r with 0 <= r < t.
struct Separation {
  long delta = 0;
  long q = 0;
  long r = 0;
};

Separation split_by(long delta, int t);

}  // namespace radio
