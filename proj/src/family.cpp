#include "radio/family.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace radio {

DistanceFamily::DistanceFamily(FamilyKind kind, int t, std::vector<long> dset)
    : kind_(kind), t_(t), dset_(std::move(dset)) {}

DistanceFamily DistanceFamily::consecutive(int t) {
  if (t < 2) throw std::invalid_argument("consecutive family requires t >= 2");
  std::vector<long> d(t);
  std::iota(d.begin(), d.end(), 1L);
  return DistanceFamily(FamilyKind::Consecutive, t, std::move(d));
}

DistanceFamily DistanceFamily::one_and_t(int t) {
  if (t < 3) throw std::invalid_argument("one-and-t family requires t >= 3");
  return DistanceFamily(FamilyKind::OneAndT, t, {1L, static_cast<long>(t)});
}

DistanceFamily DistanceFamily::two_consecutive(int t) {
  if (t < 2) throw std::invalid_argument("two-consecutive family requires t >= 2");
  return DistanceFamily(FamilyKind::TwoConsecutive, t,
                        {static_cast<long>(t - 1), static_cast<long>(t)});
}

DistanceFamily DistanceFamily::general(std::vector<long> dset) {
  std::sort(dset.begin(), dset.end());
  dset.erase(std::unique(dset.begin(), dset.end()), dset.end());
  if (dset.empty()) throw std::invalid_argument("distance set must be nonempty");
  if (dset.front() < 1)
    throw std::invalid_argument("distance set entries must be positive");
  long g = 0;
  for (long d : dset) g = std::gcd(g, d);
  if (g != 1)
    throw std::invalid_argument("distance set has gcd > 1: graph is disconnected");
  return DistanceFamily(FamilyKind::General, 0, std::move(dset));
}

std::string DistanceFamily::name() const {
  if (kind_ == FamilyKind::General) {
    std::string s = "general{";
    for (std::size_t i = 0; i < dset_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(dset_[i]);
    }
    return s + '}';
  }
  return to_token(kind_) + '(' + std::to_string(t_) + ')';
}

std::string to_token(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Consecutive: return "consecutive";
    case FamilyKind::OneAndT: return "one-and-t";
    case FamilyKind::TwoConsecutive: return "two-consecutive";
    case FamilyKind::General: return "general";
  }
  throw std::logic_error("unreachable family kind");
}

FamilyKind kind_from_token(const std::string& token) {
  if (token == "consecutive") return FamilyKind::Consecutive;
  if (token == "one-and-t") return FamilyKind::OneAndT;
  if (token == "two-consecutive") return FamilyKind::TwoConsecutive;
  if (token == "general") return FamilyKind::General;
  throw std::invalid_argument("unknown family '" + token +
                              "' (expected consecutive, one-and-t or two-consecutive)");
}

DistanceFamily family_from_token(const std::string& token, int t) {
  switch (kind_from_token(token)) {
    case FamilyKind::Consecutive: return DistanceFamily::consecutive(t);
    case FamilyKind::OneAndT: return DistanceFamily::one_and_t(t);
    case FamilyKind::TwoConsecutive: return DistanceFamily::two_consecutive(t);
    case FamilyKind::General:
      throw std::invalid_argument("general families take an explicit distance set");
  }
  throw std::logic_error("unreachable family kind");
}

Separation split_by(long delta, int t) {
  if (t < 1) throw std::invalid_argument("split_by requires t >= 1");
  if (delta < 0) throw std::invalid_argument("split_by requires delta >= 0");
  return Separation{delta, delta / t, delta % t};
}

}  // namespace radio
