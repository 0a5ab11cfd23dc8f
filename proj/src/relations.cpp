#include "argex/relations.hpp"

#include <algorithm>
#include <deque>

#include "argex/errors.hpp"

namespace argex {
namespace {

// BFS over (node, parity). `forward` follows attack edges from the source;
// otherwise edges are reversed and the result is read as "node relates to
// source". seen[2*v + p] marks a walk of parity p (0 even, 1 odd) with length >= 1.
std::vector<RelationSummary> parity_reach(const Framework& fw, ArgIndex source, bool forward) {
  const std::size_t n = fw.size();
  std::vector<char> seen(2 * n, 0);
  std::deque<std::pair<ArgIndex, int>> queue;
  auto step = [&](ArgIndex v) { return forward ? fw.targets_of(v) : fw.attackers_of(v); };
  for (ArgIndex w : step(source)) {
    if (!seen[2 * w + 1]) {
      seen[2 * w + 1] = 1;
      queue.emplace_back(w, 1);
    }
  }
  while (!queue.empty()) {
    auto [v, parity] = queue.front();
    queue.pop_front();
    const int next = parity ^ 1;
    for (ArgIndex w : step(v)) {
      if (!seen[2 * w + next]) {
        seen[2 * w + next] = 1;
        queue.emplace_back(w, next);
      }
    }
  }
  std::vector<RelationSummary> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    out[v].attacks = seen[2 * v + 1] != 0;
    // Any even walk found here has length >= 2.
    out[v].defends = seen[2 * v] != 0;
  }
  return out;
}

}  // namespace

bool set_attacks(const Framework& fw, const ArgSet& s, ArgIndex a) {
  fw.require(a);
  fw.require(s);
  return std::any_of(s.begin(), s.end(), [&](ArgIndex x) { return fw.attacks(x, a); });
}

bool set_defends(const Framework& fw, const ArgSet& s, ArgIndex a) {
  fw.require(a);
  fw.require(s);
  const auto attackers = fw.attackers_of(a);
  return std::all_of(attackers.begin(), attackers.end(),
                     [&](ArgIndex x) { return set_attacks(fw, s, x); });
}

RelationSummary indirect_relation(const Framework& fw, ArgIndex from, ArgIndex to) {
  fw.require(from);
  fw.require(to);
  return parity_reach(fw, from, true)[to];
}

std::vector<RelationSummary> relations_from(const Framework& fw, ArgIndex from) {
  fw.require(from);
  return parity_reach(fw, from, true);
}

std::vector<RelationSummary> relations_to(const Framework& fw, ArgIndex to) {
  fw.require(to);
  return parity_reach(fw, to, false);
}

bool is_relevant(const Framework& fw, ArgIndex from, ArgIndex to) {
  const auto r = indirect_relation(fw, from, to);
  return (r.attacks || r.defends) && !fw.self_attacking(from);
}

ArgSet relevant_args(const Framework& fw, ArgIndex to) {
  const auto rel = relations_to(fw, to);
  std::vector<ArgIndex> out;
  for (ArgIndex b = 0; b < fw.size(); ++b)
    if ((rel[b].attacks || rel[b].defends) && !fw.self_attacking(b)) out.push_back(b);
  return ArgSet(std::move(out));
}

bool is_relevant_set(const Framework& fw, const ArgSet& s, ArgIndex to) {
  return is_subset(s, relevant_args(fw, to));
}

Framework subframework_without(const Framework& fw, ArgIndex x) {
  fw.require(x);
  std::vector<std::string> args;
  for (ArgIndex a = 0; a < fw.size(); ++a)
    if (a != x) args.push_back(fw.name(a));
  std::vector<Attack> attacks;
  for (const auto& [from, to] : fw.edges())
    if (from != x && to != x) attacks.emplace_back(fw.name(from), fw.name(to));
  return Framework(std::move(args), attacks);
}

std::vector<AttackPath> attack_paths(const Framework& fw, ArgIndex from, ArgIndex to) {
  fw.require(from);
  fw.require(to);
  std::vector<AttackPath> out;
  std::vector<ArgIndex> stack{from};
  std::vector<char> on_path(fw.size(), 0);
  on_path[from] = 1;

  auto dfs = [&](auto&& self, ArgIndex v) -> void {
    for (ArgIndex w : fw.targets_of(v)) {
      if (w == to) {
        auto nodes = stack;
        nodes.push_back(w);
        out.push_back({std::move(nodes)});
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = 1;
      stack.push_back(w);
      self(self, w);
      stack.pop_back();
      on_path[w] = 0;
    }
  };
  // A path from an argument to itself would revisit its start.
  if (from != to) dfs(dfs, from);

  std::sort(out.begin(), out.end(), [](const AttackPath& a, const AttackPath& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
    return a.nodes < b.nodes;
  });
  return out;
}

}  // namespace argex
