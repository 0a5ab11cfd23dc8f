#include "argex/framework.hpp"

#include <algorithm>

#include "argex/errors.hpp"

namespace argex {

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Framework::Framework(std::vector<std::string> args, const std::vector<Attack>& attacks) {
  for (const auto& n : args)
    if (!is_valid_name(n)) throw InvalidConfig("invalid argument name '" + n + "'");
  std::sort(args.begin(), args.end());
  args.erase(std::unique(args.begin(), args.end()), args.end());
  names_ = std::move(args);

  const std::size_t n = names_.size();
  for (const auto& [from, to] : attacks) edges_.emplace_back(index_of(from), index_of(to));
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  attackers_.assign(n, {});
  targets_.assign(n, {});
  matrix_.assign(n * n, 0);
  for (const auto& [from, to] : edges_) {
    targets_[from].push_back(to);
    attackers_[to].push_back(from);
    matrix_[from * n + to] = 1;
  }
  for (auto& v : attackers_) std::sort(v.begin(), v.end());
}

std::optional<ArgIndex> Framework::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<ArgIndex>(it - names_.begin());
}

ArgIndex Framework::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownArgument(std::string(name));
}

void Framework::require(ArgIndex a) const {
  if (a >= size()) throw UnknownArgument("#" + std::to_string(a));
}

void Framework::require(const ArgSet& s) const {
  for (ArgIndex a : s) require(a);
}

ArgSet Framework::all() const {
  std::vector<ArgIndex> v(size());
  for (ArgIndex i = 0; i < size(); ++i) v[i] = i;
  return ArgSet(std::move(v));
}

std::string Framework::format(const ArgSet& s) const {
  std::string out = "{";
  bool first = true;
  for (ArgIndex a : s) {
    if (!first) out += ",";
    out += names_.at(a);
    first = false;
  }
  return out + "}";
}

std::vector<std::string> Framework::names_of(const ArgSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (ArgIndex a : s) out.push_back(names_.at(a));
  return out;
}

ArgSet Framework::set_of(const std::vector<std::string>& names) const {
  std::vector<ArgIndex> v;
  v.reserve(names.size());
  for (const auto& n : names) v.push_back(index_of(n));
  return ArgSet(std::move(v));
}

ArgSet translate(const ArgSet& s, const Framework& from, const Framework& to) {
  std::vector<ArgIndex> v;
  for (ArgIndex a : s)
    if (auto i = to.find(from.name(a))) v.push_back(*i);
  return ArgSet(std::move(v));
}

}  // namespace argex
