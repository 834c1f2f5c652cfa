#include "parsim/setred/set_system.hpp"

#include <algorithm>
#include <sstream>

#include "parsim/core/errors.hpp"

namespace parsim {

namespace {

// Line-oriented reader for the tiny "header + one set per line" formats.
struct LineReader {
  std::istringstream in;
  int line_no = 0;
  explicit LineReader(const std::string& text) : in(text) {}

  bool next_content_line(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }
};

std::vector<long> parse_numbers(const std::string& line, int line_no) {
  std::istringstream ls(line);
  std::vector<long> out;
  long v;
  while (ls >> v) out.push_back(v);
  std::string rest;
  if (ls.clear(), ls >> rest)
    throw ParseError("unexpected token '" + rest + "'", line_no, 1);
  return out;
}

SetSystem parse_sets(LineReader& reader, long ground, long num_sets,
                     bool triples_only) {
  if (ground < 0 || num_sets < 0)
    throw ParseError("negative header counts", reader.line_no, 1);
  SetSystem s;
  s.ground_size = static_cast<int>(ground);
  std::string line;
  for (long i = 0; i < num_sets; ++i) {
    if (!reader.next_content_line(line))
      throw ParseError("expected " + std::to_string(num_sets) + " set lines",
                       reader.line_no, 1);
    auto nums = parse_numbers(line, reader.line_no);
    if (triples_only && nums.size() != 3)
      throw ParseError("set must have exactly 3 members", reader.line_no, 1);
    if (nums.empty())
      throw ParseError("empty set line", reader.line_no, 1);
    std::vector<int> members;
    for (long e : nums) {
      if (e < 1 || e > ground)
        throw ParseError("element out of range", reader.line_no, 1);
      members.push_back(static_cast<int>(e - 1));
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      throw ParseError("repeated element in set", reader.line_no, 1);
    s.sets.push_back(std::move(members));
  }
  if (reader.next_content_line(line))
    throw ParseError("trailing content after last set", reader.line_no, 1);
  return s;
}

} // namespace

int SetSystem::add_element(std::string tag) {
  element_tags.resize(ground_size + 1);
  element_tags[ground_size] = std::move(tag);
  return ground_size++;
}

int SetSystem::add_set(std::vector<int> members, std::string tag) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw PreconditionError("repeated element in set");
  for (int e : members)
    if (e < 0 || e >= ground_size)
      throw PreconditionError("set member out of range");
  sets.push_back(std::move(members));
  set_tags.resize(sets.size());
  set_tags[sets.size() - 1] = std::move(tag);
  return static_cast<int>(sets.size()) - 1;
}

std::string SetSystem::element_tag(int e) const {
  if (e >= 0 && e < static_cast<int>(element_tags.size()) &&
      !element_tags[e].empty())
    return element_tags[e];
  return "e" + std::to_string(e + 1);
}

std::string SetSystem::set_tag(int s) const {
  if (s >= 0 && s < static_cast<int>(set_tags.size()) && !set_tags[s].empty())
    return set_tags[s];
  return "S" + std::to_string(s + 1);
}

SetSystem parse_x3c_text(const std::string& text) {
  LineReader reader(text);
  std::string line;
  if (!reader.next_content_line(line))
    throw ParseError("empty input", 1, 1);
  std::istringstream hs(line);
  std::string kind;
  long ground = -1, num_sets = -1;
  hs >> kind >> ground >> num_sets;
  if (kind != "x3c" || hs.fail())
    throw ParseError("expected header 'x3c <ground> <sets>'", reader.line_no, 1);
  return parse_sets(reader, ground, num_sets, /*triples_only=*/true);
}

std::string emit_x3c_text(const SetSystem& s) {
  std::ostringstream out;
  out << "x3c " << s.ground_size << ' ' << s.num_sets() << '\n';
  for (const auto& members : s.sets) {
    if (members.size() != 3)
      throw PreconditionError("x3c emission requires 3-element sets");
    out << members[0] + 1 << ' ' << members[1] + 1 << ' ' << members[2] + 1
        << '\n';
  }
  return out.str();
}

HittingSetInstance parse_hs_text(const std::string& text) {
  LineReader reader(text);
  std::string line;
  if (!reader.next_content_line(line))
    throw ParseError("empty input", 1, 1);
  std::istringstream hs(line);
  std::string kind;
  long ground = -1, num_sets = -1, k = -1;
  hs >> kind >> ground >> num_sets >> k;
  if (kind != "hs" || hs.fail() || k < 0)
    throw ParseError("expected header 'hs <ground> <sets> <K>'",
                     reader.line_no, 1);
  HittingSetInstance inst;
  inst.system = parse_sets(reader, ground, num_sets, /*triples_only=*/false);
  inst.k = static_cast<int>(k);
  return inst;
}

std::string emit_hs_text(const HittingSetInstance& inst) {
  std::ostringstream out;
  out << "hs " << inst.system.ground_size << ' ' << inst.system.num_sets()
      << ' ' << inst.k << '\n';
  for (const auto& members : inst.system.sets) {
    for (std::size_t i = 0; i < members.size(); ++i)
      out << (i ? " " : "") << members[i] + 1;
    out << '\n';
  }
  return out.str();
}

} // namespace parsim
