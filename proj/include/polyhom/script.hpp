#pragma once

#include <map>
#include <string>

#include "polyhom/fp_relation.hpp"
#include "polyhom/polyhom.hpp"

namespace polyhom {

struct ParseError : Error {
  int line, column;
  ParseError(int line_, int column_, const std::string& what)
      : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) +
              ": " + what),
        line(line_), column(column_) {}
};
struct NameError : Error {
  explicit NameError(const std::string& name) : Error("unknown or duplicate name '" + name + "'") {}
};

// Named bindings produced by a definition script.  Names are unique per kind
// and every binding is validated when it is defined.
struct Session {
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, Subgroup> subgroups;
  std::map<std::string, MultRelation> relations;
  std::map<std::string, MeasuredGroup> measured_groups;
  std::map<std::string, Polyhom> polyhoms;
  std::map<std::string, FpWindow> windows;
  std::map<std::string, FpPolyhom> fp_polyhoms;

  const GroupPtr& group(const std::string& name) const;
  const Subgroup& subgroup(const std::string& name) const;
  const MultRelation& relation(const std::string& name) const;
  const MeasuredGroup& measured_group(const std::string& name) const;
  const Polyhom& polyhom(const std::string& name) const;
  const FpWindow& window(const std::string& name) const;
  const FpPolyhom& fp_polyhom(const std::string& name) const;
};

// Parses a definition script.  Statements, one per logical line:
//   group G = cyclic 4 | product A B | table [[...],...]
//   subgroup S in G = { 0, 2 } | generated { 2 }
//   relation R : G -> H = generated { (0,1), ... } | graph [f0, f1, ...]
//   measured M = G pointmass 1/1
//   polyhom P : M -> N { relation = R; weight = 1/2 } | polyhom P = zero M N
//   fpwindow W = p 2 radius 3
//   fppolyhom Q in W { basis = [[...],...]; weight = 1/8 }
// '#' starts a comment.
Session parse_script(const std::string& text);

// A re-parseable definition of a bound or computed polyhomomorphism, suffixed
// "__def"; the measured groups must be bound in the session.
std::string polyhom_definition_text(const Session& s, const std::string& name,
                                    const Polyhom& p);

}  // namespace polyhom
