#include <random>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "posetrep/errors.hpp"
#include "posetrep/poset_file.hpp"
#include "support.hpp"

using namespace posetrep;
using namespace testsupport;

namespace {

std::string fx(const std::string& name) {
  return std::string(POSETREP_FIXTURES_DIR) + "/" + name;
}

// Equality of posets as labeled orders: same label list, same relation.
bool same_order(const Poset& a, const Poset& b) {
  if (a.labels() != b.labels()) return false;
  for (const auto& r : a.labels()) {
    for (const auto& s : a.labels()) {
      if (a.less(r, s) != b.less(r, s)) return false;
    }
  }
  return true;
}

bool same_dims(const PosetFile& a, const PosetFile& b) {
  if (a.dims.size() != b.dims.size()) return false;
  for (std::size_t i = 0; i < a.dims.size(); ++i) {
    if (a.dims[i].first != b.dims[i].first) return false;
    if (a.dims[i].second.alpha0 != b.dims[i].second.alpha0) return false;
    if (a.dims[i].second.alpha != b.dims[i].second.alpha) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("the seven element fixture file parses to the known poset") {
  const PosetFile file = load_poset_file(fx("example1.poset"));
  CHECK(file.path == fx("example1.poset"));
  CHECK(same_order(file.poset, example1()));
  CHECK(file.poset.height() == 3);
  REQUIRE(file.dims.size() == 1);
  CHECK(file.dims[0].first == "main");
  const DimVector want = example1_alpha();
  CHECK(file.dims[0].second.alpha0 == want.alpha0);
  CHECK(file.dims[0].second.alpha == want.alpha);
  CHECK(file.find_dims("main") == &file.dims[0].second);
  CHECK(file.find_dims("other") == nullptr);
}

TEST_CASE("surface flexibility: names, comments, line endings, spacing") {
  SUBCASE("a dim line without a name is called main") {
    const PosetFile file = parse_poset_file("elements = a b\ndim = 3 ; a:1 b:2\n");
    REQUIRE(file.dims.size() == 1);
    CHECK(file.dims[0].first == "main");
  }
  SUBCASE("comments and blank lines are skipped, CR is stripped") {
    const std::string text =
        "# heading comment\r\n"
        "elements = a b # trailing comment\r\n"
        "\r\n"
        "order = a<b\r\n"
        "dim main = 2 ; a:1 b:1 # alpha\r\n";
    const PosetFile file = parse_poset_file(text);
    CHECK(file.poset.size() == 2);
    CHECK(file.poset.less("a", "b"));
    REQUIRE(file.dims.size() == 1);
    CHECK(file.dims[0].second.alpha0 == 2);
  }
  SUBCASE("punctuation may touch its neighbors") {
    const PosetFile file = parse_poset_file("elements=a b\norder=a<b\ndim=4; a:2 b:2\n");
    CHECK(file.poset.less("a", "b"));
    CHECK(file.dims[0].second.alpha.at("a") == 2);
  }
  SUBCASE("several named vectors keep declaration order") {
    const PosetFile file =
        parse_poset_file("elements = a\ndim small = 1 ; a:0\ndim big = 9 ; a:4\n");
    REQUIRE(file.dims.size() == 2);
    CHECK(file.dims[0].first == "small");
    CHECK(file.dims[1].first == "big");
    CHECK(file.find_dims("big")->alpha0 == 9);
  }
  SUBCASE("an elements line alone is a file") {
    const PosetFile file = parse_poset_file("elements = a b c");
    CHECK(file.poset.size() == 3);
    CHECK(file.poset.height() == 1);
    CHECK(file.dims.empty());
  }
  SUBCASE("an empty element list is the empty poset") {
    const PosetFile file = parse_poset_file("elements =\n");
    CHECK(file.poset.size() == 0);
    CHECK(file.poset.height() == 0);
  }
}

TEST_CASE("syntax errors carry one-based line and column positions") {
  // Each position points at the offending token, verified by hand against
  // the input strings.
  SUBCASE("missing elements line") {
    try {
      parse_poset_file("order = a<b\n");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 1);
      CHECK(e.column == 1);
      CHECK(std::string(e.what()) == "syntax error at 1:1: missing 'elements' line");
    }
  }
  SUBCASE("empty file") {
    CHECK_THROWS_AS(parse_poset_file(""), SyntaxError);
  }
  SUBCASE("duplicate elements line") {
    try {
      parse_poset_file("elements = a\nelements = b\n");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 2);
      CHECK(e.column == 1);
    }
  }
  SUBCASE("unknown directive") {
    try {
      parse_poset_file("elements = a\nwibble = 1\n");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 2);
      CHECK(std::string(e.what()).find("expected 'elements', 'order', or 'dim'") !=
            std::string::npos);
    }
  }
  SUBCASE("order tokens must be lower<upper") {
    for (const std::string bad : {"a<b<c", "a<", "<b", "ab"}) {
      try {
        parse_poset_file("elements = a b\norder = " + bad + "\n");
        FAIL("expected SyntaxError for " << bad);
      } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 9);
      }
    }
  }
  SUBCASE("colon instead of semicolon after the ambient dimension") {
    try {
      parse_poset_file("elements = a b\ndim main = 2 : a:1 b:2\n");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 2);
      CHECK(e.column == 14);
      CHECK(std::string(e.what()) ==
            "syntax error at 2:14: expected ';' after the ambient dimension");
    }
  }
  SUBCASE("semicolon missing entirely") {
    try {
      parse_poset_file("elements = a\ndim = 2\n");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 2);
      CHECK(e.column == 8);  // one past the '2'
    }
  }
  SUBCASE("dim line with no payload") {
    CHECK_THROWS_WITH_AS(parse_poset_file("elements = a\ndim =\n"),
                         "syntax error at 2:1: dimension vector 'main' has no ambient dimension",
                         SyntaxError);
  }
  SUBCASE("non-integer ambient dimension") {
    CHECK_THROWS_WITH_AS(parse_poset_file("elements = a\ndim = x ; a:1\n"),
                         "syntax error at 2:7: expected an integer, got 'x'", SyntaxError);
  }
  SUBCASE("non-integer entry value") {
    CHECK_THROWS_WITH_AS(parse_poset_file("elements = a\ndim = 2 ; a:b\n"),
                         "syntax error at 2:13: expected an integer, got 'b'", SyntaxError);
  }
  SUBCASE("entry without a colon") {
    CHECK_THROWS_WITH_AS(parse_poset_file("elements = a\ndim = 2 ; a\n"),
                         "syntax error at 2:11: expected 'label:value', got 'a'", SyntaxError);
  }
  SUBCASE("missing coverage names the element") {
    try {
      parse_poset_file("elements = a b\ndim = 2 ; a:1\n");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 2);
      CHECK(std::string(e.what()).find("missing a value for element 'b'") != std::string::npos);
    }
  }
  SUBCASE("dim head without an equals sign") {
    CHECK_THROWS_AS(parse_poset_file("elements = a\ndim 2 ; a:1\n"), SyntaxError);
  }
  SUBCASE("the checked-in bad syntax fixture") {
    try {
      load_poset_file(fx("bad_syntax.poset"));
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 3);
      CHECK(e.column == 14);
    }
  }
}

TEST_CASE("semantic errors surface as their own types") {
  CHECK_THROWS_AS(parse_poset_file("elements = a a\n"), DuplicateLabelError);
  CHECK_THROWS_AS(parse_poset_file("elements = a\norder = a<b\n"), UnknownLabelError);
  CHECK_THROWS_AS(parse_poset_file("elements = a b\norder = a<b b<a\n"), CycleError);
  CHECK_THROWS_AS(load_poset_file(fx("bad_cycle.poset")), CycleError);
  CHECK_THROWS_AS(parse_poset_file("elements = a\ndim = 2 ; a:1 a:2\n"), DuplicateLabelError);
  CHECK_THROWS_AS(parse_poset_file("elements = a\ndim = 2 ; a:1 z:1\n"), UnknownLabelError);
  CHECK_THROWS_AS(parse_poset_file("elements = a\ndim = 2 ; a:-1\n"), NegativeDimensionError);
  CHECK_THROWS_AS(parse_poset_file("elements = a\ndim = -2 ; a:1\n"), NegativeDimensionError);
  CHECK_THROWS_AS(parse_poset_file("elements = a\ndim v = 1 ; a:1\ndim v = 2 ; a:2\n"),
                  DuplicateLabelError);
  CHECK_THROWS_AS(load_poset_file(fx("no_such_file.poset")), InputError);
}

TEST_CASE("inline payload parsing allows negatives but checks coverage") {
  const Poset p = build_poset({"a", "b"}, {{"a", "b"}});
  const DimVector dims = parse_dim_payload("4 ; a:-2 b:1", p);
  CHECK(dims.alpha0 == 4);
  CHECK(dims.alpha.at("a") == -2);
  CHECK(dims.alpha.at("b") == 1);
  CHECK(parse_dim_payload("-1 ; a:0 b:0", p).alpha0 == -1);
  CHECK_THROWS_AS(parse_dim_payload("4 ; a:1", p), SyntaxError);
  CHECK_THROWS_AS(parse_dim_payload("4 ; a:1 b:1 z:1", p), UnknownLabelError);
  CHECK_THROWS_AS(parse_dim_payload("4 : a:1 b:1", p), SyntaxError);
  CHECK_THROWS_AS(parse_dim_payload("", p), SyntaxError);
}

TEST_CASE("render then parse reproduces the file") {
  SUBCASE("the seven element fixture") {
    const PosetFile file = load_poset_file(fx("example1.poset"));
    const PosetFile again = parse_poset_file(render_poset_file(file));
    CHECK(same_order(file.poset, again.poset));
    CHECK(same_dims(file, again));
  }
  SUBCASE("random posets with two vectors") {
    std::mt19937 g(20260819);
    for (int trial = 0; trial < 60; ++trial) {
      PosetFile file;
      file.poset = random_poset(g, 7);
      file.dims.emplace_back("main", random_integer_vector(g, file.poset, 0, 9));
      file.dims.emplace_back("alt", random_integer_vector(g, file.poset, 0, 9));
      const std::string text = render_poset_file(file);
      const PosetFile again = parse_poset_file(text);
      CHECK(same_order(file.poset, again.poset));
      CHECK(same_dims(file, again));
      // Rendering is a fixpoint: the second render equals the first.
      CHECK(render_poset_file(again) == text);
    }
  }
}

TEST_CASE("dot export") {
  SUBCASE("two-source fixture with dimensions, exact text") {
    const PosetFile file = load_poset_file(fx("example3.poset"));
    const std::string want =
        "digraph poset {\n"
        "  rankdir=BT;\n"
        "  \"1\" [label=\"1:2\"];\n"
        "  \"2\" [label=\"2:2\"];\n"
        "  \"3\" [label=\"3:3\"];\n"
        "  \"1\" -> \"3\";\n"
        "  \"2\" -> \"3\";\n"
        "}\n";
    CHECK(dot_export(file.poset, file.find_dims("main")) == want);
  }
  SUBCASE("without dimensions the label is just the element") {
    const Poset chain = build_poset({"a", "b"}, {{"a", "b"}});
    CHECK(dot_export(chain) ==
          "digraph poset {\n  rankdir=BT;\n  \"a\" [label=\"a\"];\n  \"b\" [label=\"b\"];\n"
          "  \"a\" -> \"b\";\n}\n");
  }
  SUBCASE("an antichain has no edges") {
    const Poset anti = build_poset({"x", "y"}, {});
    CHECK(dot_export(anti).find("->") == std::string::npos);
  }
  SUBCASE("quotes and backslashes in labels are escaped") {
    const Poset odd = build_poset({"a\"b", "c\\d"}, {});
    const std::string text = dot_export(odd);
    CHECK(text.find("\"a\\\"b\"") != std::string::npos);
    CHECK(text.find("\"c\\\\d\"") != std::string::npos);
  }
  SUBCASE("only transitive reduction edges appear") {
    // Chain a<b<c declared with the redundant a<c: the closure keeps it,
    // the drawing must not.
    const Poset p = build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    const std::string text = dot_export(p);
    CHECK(text.find("\"a\" -> \"b\";") != std::string::npos);
    CHECK(text.find("\"b\" -> \"c\";") != std::string::npos);
    CHECK(text.find("\"a\" -> \"c\";") == std::string::npos);
  }
  SUBCASE("dimension vectors must cover every element") {
    const Poset p = build_poset({"a", "b"}, {});
    DimVector partial;
    partial.alpha0 = 1;
    partial.alpha["a"] = 1;
    CHECK_THROWS_AS(dot_export(p, &partial), InvalidDimensionsError);
  }
}
