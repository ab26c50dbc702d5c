#pragma once

#include <string>
#include <vector>

#include "sumset/group.hpp"

namespace sumset {

// Builds a group from its textual spec:
//   cyclic:n      dihedral:n     dstar:n       dihof:<spec>
//   ea:q          aff:q          frob:q:d      prod:<spec>,<spec>
// prod parses its two operands by recursive descent, so nested products are
// unambiguous: prod:prod:cyclic:2,cyclic:2,cyclic:2 is (C2 x C2) x C2.
GroupPtr parse_group(const std::string& spec);

// Parses a comma-separated element list for a group.  Entries are either all
// labels ("x,xt,t") or all "#"-prefixed indices ("#1,#5,#4"); mixing the two
// forms is rejected.
Subset parse_subset(const GroupPtr& group, const std::string& csv);

// Expands scope sugar "cyclic:3..16" into cyclic:3, cyclic:4, ..., cyclic:16.
// Specs without a trailing range expand to themselves.
std::vector<std::string> expand_scope(const std::string& entry);

}  // namespace sumset
