#pragma once

#include <string>
#include <vector>

#include "grpforge/group.hpp"

namespace grpforge {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                           ": " + msg),
        line(line),
        col(col) {}
  std::size_t line, col;
};

/// AST of the group-spec grammar:
///   spec    := term (("x"|"⋊") term)* ;
///   term    := "C" int | "S" int | "D" int | "Q8" | "perm[" cycles ("," cycles)* "]"
///            | "(" spec ")" ;
///   cycles  := ("(" int+ ")")+ ;
/// ":" is accepted as an ASCII alias for "⋊". A semidirect operator may be
/// followed by an action name in square brackets ("⋊[hol]"); without one the
/// default faithful cyclic power action is used.
struct GroupSpec {
  enum class Kind { Cyclic, Symmetric, Dihedral, Q8, Perm, Direct, Semidirect };
  Kind kind;
  u32 param = 0;                                   // atom parameter
  std::vector<std::vector<std::vector<u32>>> perm_gens;  // per generator: cycle list, 1-based points
  std::vector<GroupSpec> children;                 // combinators (exactly 2)
  std::string action_name;                         // semidirect only, may be empty

  std::string to_string() const;
};

GroupSpec parse_group_spec(const std::string& text);

GroupPtr realize_spec(const GroupSpec& spec, std::size_t bound = ConcreteGroup::kDefaultBound);
GroupPtr realize_spec_text(const std::string& text, std::size_t bound = ConcreteGroup::kDefaultBound);

}  // namespace grpforge
