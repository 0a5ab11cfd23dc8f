#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace argex {

// Position of an argument inside its Framework. Frameworks keep arguments
// sorted by name, so index order coincides with name order.
using ArgIndex = std::uint32_t;

// A finite set of arguments, stored as a sorted vector of indices.
class ArgSet {
 public:
  ArgSet() = default;
  ArgSet(std::initializer_list<ArgIndex> init) : members_(init) { normalize(); }
  explicit ArgSet(std::vector<ArgIndex> members) : members_(std::move(members)) { normalize(); }

  // Builds the set whose bit i is set in mask, mapping bit i to universe[i].
  static ArgSet from_mask(std::uint64_t mask, std::span<const ArgIndex> universe) {
    ArgSet s;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask >> i & 1U) s.members_.push_back(universe[i]);
    s.normalize();
    return s;
  }

  bool contains(ArgIndex a) const {
    return std::binary_search(members_.begin(), members_.end(), a);
  }

  void insert(ArgIndex a) {
    auto it = std::lower_bound(members_.begin(), members_.end(), a);
    if (it == members_.end() || *it != a) members_.insert(it, a);
  }

  void erase(ArgIndex a) {
    auto it = std::lower_bound(members_.begin(), members_.end(), a);
    if (it != members_.end() && *it == a) members_.erase(it);
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<ArgIndex>& members() const noexcept { return members_; }

  bool operator==(const ArgSet&) const = default;

  // Canonical order: cardinality first, then lexicographic on members.
  std::strong_ordering operator<=>(const ArgSet& other) const {
    if (auto c = members_.size() <=> other.members_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(members_.begin(), members_.end(),
                                                  other.members_.begin(), other.members_.end());
  }

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<ArgIndex> members_;
};

using SetFamily = std::vector<ArgSet>;

inline bool is_subset(const ArgSet& a, const ArgSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline ArgSet set_union(const ArgSet& a, const ArgSet& b) {
  std::vector<ArgIndex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ArgSet(std::move(out));
}

inline ArgSet set_intersection(const ArgSet& a, const ArgSet& b) {
  std::vector<ArgIndex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ArgSet(std::move(out));
}

inline ArgSet set_difference(const ArgSet& a, const ArgSet& b) {
  std::vector<ArgIndex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ArgSet(std::move(out));
}

// Sorts a family into canonical order and drops duplicates.
inline void canonicalize(SetFamily& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

inline bool family_contains(const SetFamily& family, const ArgSet& s) {
  return std::find(family.begin(), family.end(), s) != family.end();
}

// Family inclusion: every member of a is a member of b.
inline bool family_subset(const SetFamily& a, const SetFamily& b) {
  return std::all_of(a.begin(), a.end(), [&](const ArgSet& s) { return family_contains(b, s); });
}

// Intersection of all members; the empty family yields the empty set.
inline ArgSet intersect_all(const SetFamily& family) {
  if (family.empty()) return {};
  ArgSet acc = family.front();
  for (const auto& s : family) acc = set_intersection(acc, s);
  return acc;
}

inline ArgSet unite_all(const SetFamily& family) {
  ArgSet acc;
  for (const auto& s : family) acc = set_union(acc, s);
  return acc;
}

}  // namespace argex
