#include "ucfam/family_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ucfam {

namespace {

[[noreturn]] void parse_fail(int line_number, const std::string& message) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line_number) + ": " + message);
}

// Whole-token positive integer; anything else is a parse failure.
int parse_element(const std::string& token, int line_number) {
  if (token.empty() || !std::all_of(token.begin(), token.end(),
                                    [](unsigned char c) { return c >= '0' && c <= '9'; }))
    parse_fail(line_number, "expected a positive integer, got '" + token + "'");
  try {
    int value = std::stoi(token);
    if (value < 1) parse_fail(line_number, "elements start at 1, got '" + token + "'");
    return value;
  } catch (const std::out_of_range&) {
    parse_fail(line_number, "element '" + token + "' is out of range");
  }
}

}  // namespace

SetFamily parse_family(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  bool header_allowed = true;
  bool have_ground = false;
  int ground_size = 0;
  int max_element = 0;
  std::vector<MemberSet> members;
  std::vector<int> member_lines;  // for range errors after the ground is known

  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string token;
    std::vector<std::string> parts;
    while (tokens >> token) parts.push_back(token);
    if (parts.empty()) continue;

    if (header_allowed && parts.front() == "ground:") {
      if (parts.size() != 2) parse_fail(line_number, "header must be 'ground: <n>'");
      const std::string& value = parts[1];
      if (value.empty() || !std::all_of(value.begin(), value.end(), [](unsigned char c) {
            return c >= '0' && c <= '9';
          }))
        parse_fail(line_number, "expected a ground size, got '" + value + "'");
      try {
        ground_size = std::stoi(value);
      } catch (const std::out_of_range&) {
        parse_fail(line_number, "ground size '" + value + "' is out of range");
      }
      if (ground_size > SetFamily::kMaxGroundSize)
        parse_fail(line_number, "ground size " + value + " exceeds the representable maximum " +
                                    std::to_string(SetFamily::kMaxGroundSize));
      have_ground = true;
      header_allowed = false;
      continue;
    }
    header_allowed = false;

    MemberSet member;
    if (parts.size() == 1 && parts.front() == "{}") {
      // ∅ stays the default
    } else {
      int previous = 0;
      for (const std::string& part : parts) {
        int element = parse_element(part, line_number);
        if (element <= previous)
          parse_fail(line_number, "elements must be strictly ascending at '" + part + "'");
        if (element > SetFamily::kMaxGroundSize)
          parse_fail(line_number, "element " + part + " exceeds the representable maximum " +
                                      std::to_string(SetFamily::kMaxGroundSize));
        member = member.with(element);
        previous = element;
      }
    }
    max_element = std::max(max_element, member.empty() ? 0 : member.elements().back());
    if (std::find(members.begin(), members.end(), member) != members.end())
      parse_fail(line_number, "duplicate member " + member.to_string());
    members.push_back(member);
    member_lines.push_back(line_number);
  }

  if (!have_ground) ground_size = max_element;
  if (have_ground && max_element > ground_size) {
    for (std::size_t i = 0; i < members.size(); ++i)
      if (!members[i].empty() && members[i].elements().back() > ground_size)
        parse_fail(member_lines[i], "element " + std::to_string(members[i].elements().back()) +
                                        " exceeds the declared ground " +
                                        std::to_string(ground_size));
  }
  return SetFamily(ground_size, std::move(members));
}

SetFamily read_family_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str());
}

std::string write_family(const SetFamily& family) {
  std::string out = "ground: " + std::to_string(family.ground_size()) + "\n";
  for (MemberSet m : family.members()) {
    if (m.empty()) {
      out += "{}\n";
      continue;
    }
    bool first = true;
    for (int e : m.elements()) {
      if (!first) out += ' ';
      out += std::to_string(e);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace ucfam
