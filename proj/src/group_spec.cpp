#include "sumset/group_spec.hpp"

#include <cctype>
#include <cstdlib>

namespace sumset {
namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  std::string word() {
    std::size_t start = pos;
    while (!done() && (std::isalnum(unsigned(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  void expect(char c) {
    if (done() || text[pos] != c)
      throw InvalidArgument("bad group spec '" + text + "': expected '" +
                            std::string(1, c) + "' at position " +
                            std::to_string(pos));
    ++pos;
  }

  int integer() {
    std::size_t start = pos;
    while (!done() && std::isdigit(unsigned(text[pos]))) ++pos;
    if (start == pos)
      throw InvalidArgument("bad group spec '" + text +
                            "': expected a number at position " +
                            std::to_string(start));
    return std::atoi(text.substr(start, pos - start).c_str());
  }
};

GroupPtr parse_at(Cursor& c) {
  std::string head = c.word();
  if (head == "cyclic") {
    c.expect(':');
    return make_cyclic(c.integer());
  }
  if (head == "dihedral") {
    c.expect(':');
    return make_dihedral(c.integer());
  }
  if (head == "dstar") {
    c.expect(':');
    return make_dstar(c.integer());
  }
  if (head == "dihof") {
    c.expect(':');
    return make_generalized_dihedral(parse_at(c));
  }
  if (head == "ea") {
    c.expect(':');
    return make_elementary_abelian(c.integer());
  }
  if (head == "aff") {
    c.expect(':');
    return make_affine(c.integer());
  }
  if (head == "frob") {
    c.expect(':');
    int q = c.integer();
    c.expect(':');
    return make_frobenius_subgroup(q, c.integer());
  }
  if (head == "prod") {
    c.expect(':');
    GroupPtr left = parse_at(c);
    c.expect(',');
    GroupPtr right = parse_at(c);
    return direct_product(left, right);
  }
  throw InvalidArgument("unknown group family '" + head + "' in spec '" +
                        c.text + "'");
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(unsigned(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

GroupPtr parse_group(const std::string& spec) {
  Cursor c{spec};
  GroupPtr g = parse_at(c);
  if (!c.done())
    throw InvalidArgument("trailing characters in group spec '" + spec + "'");
  return g;
}

Subset parse_subset(const GroupPtr& group, const std::string& csv) {
  if (!group) throw InvalidArgument("subset needs a group");
  std::vector<std::string> tokens = split_csv(csv);
  while (!tokens.empty() && tokens.back().empty()) tokens.pop_back();
  for (const auto& t : tokens)
    if (t.empty()) throw InvalidArgument("empty entry in element list");
  bool any_index = false, any_label = false;
  for (const auto& t : tokens) (t[0] == '#' ? any_index : any_label) = true;
  if (any_index && any_label)
    throw InvalidArgument(
        "element list mixes #index entries with label entries");
  if (any_index) {
    std::vector<int> idx;
    for (const auto& t : tokens) {
      for (std::size_t i = 1; i < t.size(); ++i)
        if (!std::isdigit(unsigned(t[i])))
          throw InvalidArgument("bad element index '" + t + "'");
      if (t.size() == 1) throw InvalidArgument("bad element index '#'");
      idx.push_back(std::atoi(t.c_str() + 1));
    }
    return Subset::of_indices(group, idx);
  }
  return Subset::of_labels(group, tokens);
}

std::vector<std::string> expand_scope(const std::string& entry) {
  auto dots = entry.find("..");
  if (dots == std::string::npos) return {entry};
  std::size_t num_start = dots;
  while (num_start > 0 && std::isdigit(unsigned(entry[num_start - 1])))
    --num_start;
  if (num_start == dots)
    throw InvalidArgument("bad scope range '" + entry + "'");
  std::string prefix = entry.substr(0, num_start);
  int lo = std::atoi(entry.substr(num_start, dots - num_start).c_str());
  std::string tail = entry.substr(dots + 2);
  for (char ch : tail)
    if (!std::isdigit(unsigned(ch)))
      throw InvalidArgument("bad scope range '" + entry + "'");
  if (tail.empty()) throw InvalidArgument("bad scope range '" + entry + "'");
  int hi = std::atoi(tail.c_str());
  if (hi < lo) throw InvalidArgument("empty scope range '" + entry + "'");
  std::vector<std::string> out;
  for (int n = lo; n <= hi; ++n) out.push_back(prefix + std::to_string(n));
  return out;
}

}  // namespace sumset
