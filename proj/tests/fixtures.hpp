#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "argex/framework.hpp"

namespace fixtures {

//   B -> A, C -> B, C <-> D, E -> B, F -> E, F <-> G
inline argex::Framework af1() {
  return argex::Framework({"A", "B", "C", "D", "E", "F", "G"},
                          {{"B", "A"},
                           {"C", "B"},
                           {"C", "D"},
                           {"D", "C"},
                           {"E", "B"},
                           {"F", "E"},
                           {"F", "G"},
                           {"G", "F"}});
}

//   A <-> C, A -> D, C -> B, B <-> D
inline argex::Framework af2() {
  return argex::Framework({"A", "B", "C", "D"}, {{"A", "C"},
                                                 {"C", "A"},
                                                 {"A", "D"},
                                                 {"C", "B"},
                                                 {"D", "B"},
                                                 {"B", "D"}});
}

inline argex::Framework cycle3() {
  return argex::Framework({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"C", "A"}});
}

inline const char* const kAf1Apx =
    "arg(A).\narg(B).\narg(C).\narg(D).\narg(E).\narg(F).\narg(G).\n"
    "att(B,A).\natt(C,B).\natt(C,D).\natt(D,C).\natt(E,B).\natt(F,E).\natt(F,G).\natt(G,F).\n";

inline argex::ArgSet set(const argex::Framework& fw, std::vector<std::string> names) {
  return fw.set_of(names);
}

inline argex::SetFamily family(const argex::Framework& fw,
                               std::initializer_list<std::vector<std::string>> sets) {
  argex::SetFamily out;
  for (const auto& s : sets) out.push_back(fw.set_of(s));
  argex::canonicalize(out);
  return out;
}

}  // namespace fixtures

namespace argex {
// Readable doctest failure output.
inline std::ostream& operator<<(std::ostream& os, const ArgSet& s) {
  os << "{";
  for (auto it = s.begin(); it != s.end(); ++it) os << (it == s.begin() ? "" : ",") << *it;
  return os << "}";
}
}  // namespace argex
