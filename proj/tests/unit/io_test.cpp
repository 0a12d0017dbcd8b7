#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "../support/instances.hpp"
#include "ucfam/family_io.hpp"

using namespace ucfam;
using instances::fam;

namespace {

std::string message_of(const std::string& text) {
  try {
    parse_family(text);
  } catch (const Error& error) {
    return error.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("writing and reparsing reproduces the family") {
    CHECK(write_family(instances::kF1) == "ground: 2\n{}\n1\n1 2\n");
    CHECK(write_family(fam(3, {})) == "ground: 3\n");
    CHECK(write_family(fam(0, {{}})) == "ground: 0\n{}\n");
    CHECK(parse_family(write_family(instances::kSeven)) == instances::kSeven);

    for (int n = 0; n <= 3; ++n)
      for (const SetFamily& f : instances::union_closed(n)) {
        std::string text = write_family(f);
        CHECK(parse_family(text) == f);
        CHECK(write_family(parse_family(text)) == text);
      }
  }

  TEST_CASE("layout noise does not change the parse") {
    SetFamily parsed = parse_family(
        "# a comment\n"
        "\n"
        "ground: 3   # trailing comment\n"
        "  1 3\n"
        "{}\n"
        "\t1\n"
        "\n");
    CHECK(parsed == fam(3, {{1, 3}, {}, {1}}));
    // members may arrive in any order; the family canonicalizes
    CHECK(parse_family("2\n1\n1 2\n{}\n") == fam(2, {{}, {1}, {2}, {1, 2}}));
  }

  TEST_CASE("a missing header infers the ground from the largest element") {
    CHECK(parse_family("1 4\n2\n") == fam(4, {{1, 4}, {2}}));
    CHECK(parse_family("{}\n") == fam(0, {{}}));
    CHECK(parse_family("") == fam(0, {}));
    CHECK(parse_family("# nothing but comments\n") == fam(0, {}));
    // the header is only recognized on the first content line
    CHECK_THROWS_AS(parse_family("1\nground: 3\n"), Error);
  }

  TEST_CASE("parse errors carry the offending line number") {
    CHECK(message_of("ground: x\n").find("line 1") != std::string::npos);
    CHECK(message_of("ground: -1\n").find("line 1") != std::string::npos);
    CHECK(message_of("ground: 65\n").find("line 1") != std::string::npos);
    CHECK(message_of("1\n2 two\n").find("line 2") != std::string::npos);
    CHECK(message_of("1\n\n2 2\n").find("line 3") != std::string::npos);   // repeated element
    CHECK(message_of("1\n3 2\n").find("line 2") != std::string::npos);     // not ascending
    CHECK(message_of("1\n0 2\n").find("line 2") != std::string::npos);     // elements start at 1
    CHECK(message_of("ground: 2\n1 3\n").find("line 2") != std::string::npos);  // beyond ground
    CHECK(message_of("1 2\n{}\n1 2\n").find("line 3") != std::string::npos);    // duplicate member
    CHECK(message_of("{} 1\n").find("line 1") != std::string::npos);
    CHECK(message_of("ground: 2\nground: 2\n").find("line 2") != std::string::npos);
  }

  TEST_CASE("unreadable files raise a parse error naming the path") {
    CHECK_THROWS_AS(read_family_file("/nonexistent/family.fam"), Error);
    try {
      read_family_file("/nonexistent/family.fam");
    } catch (const Error& error) {
      CHECK(std::string(error.what()).find("/nonexistent/family.fam") != std::string::npos);
    }
  }

  TEST_CASE("randomized families survive the round trip") {
    std::mt19937 rng(20240817);
    for (int round = 0; round < 200; ++round) {
      int ground = static_cast<int>(rng() % 7);  // up to 6
      std::uint64_t limit = 1ull << ground;
      std::vector<MemberSet> members;
      std::uint64_t seen = 0;
      int count = static_cast<int>(rng() % (limit + 1));
      for (int k = 0; k < count; ++k) {
        std::uint64_t bits = rng() & (limit - 1);
        if (seen >> bits & 1) continue;
        seen |= 1ull << bits;
        members.push_back(MemberSet::from_bits(bits));
      }
      SetFamily family(ground, members);
      CHECK(parse_family(write_family(family)) == family);
    }
  }
}
