#include "support.hpp"

#include "mcgcoh/errors.hpp"
#include "mcgcoh/presentation.hpp"

#include <doctest.h>

using namespace mcgcoh;
using namespace testing;

namespace {
const std::vector<std::string> xy = {"x", "y"};
}

TEST_CASE("parse_word") {
  const Word w = parse_word("x y^-1 x", xy);
  REQUIRE(w.size() == 3);
  CHECK(w.letters()[1] == Letter{1, true});
  CHECK(parse_word("   ", xy).is_identity());
  CHECK(to_string(w, xy) == "x y^-1 x");
  CHECK_THROWS_WITH_AS(parse_word("x^2", xy), doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_WITH_AS(parse_word("x^-1^-1", xy), doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_WITH_AS(parse_word("z", xy), doctest::Contains("UnknownGenerator"), Error);
}

TEST_CASE("invert and concat") {
  const Word a = parse_word("x y", xy);
  CHECK(invert(a) == parse_word("y^-1 x^-1", xy));
  CHECK(concat(a, invert(a)).size() == 4);
  CHECK(power(a, 3) == parse_word("x y x y x y", xy));
  CHECK(power(a, 0).is_identity());
}

TEST_CASE("word laws on random words") {
  for (int iter = 0; iter < 200; ++iter) {
    const Word a = random_word(3, 8);
    const Word b = random_word(3, 8);
    CHECK(invert(invert(a)) == a);
    CHECK(invert(a * b) == invert(b) * invert(a));
    CHECK((a * b).size() == a.size() + b.size());
    const std::vector<std::string> names = {"p", "q", "r"};
    CHECK(parse_word(to_string(a, names), names) == a);
  }
}

TEST_CASE("parse_presentation") {
  const Presentation p = parse_presentation("# free group\n x y  # gens\n\nx y x^-1 y^-1  # commutator\n");
  CHECK(p.generators() == xy);
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == parse_word("x y x^-1 y^-1", xy));
  CHECK(*p.index_of("y") == 1);
  CHECK_FALSE(p.index_of("z"));

  SUBCASE("round trip through format") {
    const std::vector<std::string> tags = {"commutator"};
    const std::string text = format_presentation(p, tags);
    CHECK(text.find("# commutator") != std::string::npos);
    const Presentation q = parse_presentation(text);
    CHECK(q.generators() == p.generators());
    CHECK(q.relators() == p.relators());
  }
  SUBCASE("errors") {
    CHECK_THROWS_WITH_AS(parse_presentation("# nothing\n\n"), doctest::Contains("EmptyGeneratorList"), Error);
    CHECK_THROWS_WITH_AS(parse_presentation("x x\n"), doctest::Contains("DuplicateGenerator"), Error);
    CHECK_THROWS_WITH_AS(parse_presentation("x y\nx z\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_presentation("x y\nx^3\n"), doctest::Contains("SyntaxError"), Error);
    CHECK_THROWS_WITH_AS(Presentation({"a^b"}, {}), doctest::Contains("InvalidGeneratorName"), Error);
    CHECK_THROWS_AS(Presentation({}, {}), Error);
  }
}
