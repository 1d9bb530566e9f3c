#include "doctest.h"
#include "algebra_fixture.hpp"
#include "qtilt/qspec.hpp"

using namespace qtilt;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_algebra_spec(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("shipped presentation") {
  const Presentation& p = fixture::presentation();
  CHECK(p.field.characteristic() == 2);
  CHECK(p.quiver.vertices == 3);
  CHECK(p.quiver.arrows.size() == 4);
  CHECK(p.relations.size() == 6);
  REQUIRE(p.modules.size() == 4);
  CHECK(p.modules[0].name == "M1");
  CHECK(p.modules[3].vertex == 1);
}

TEST_CASE("canonical printing round-trips") {
  const Presentation& p = fixture::presentation();
  const std::string once = print_presentation(p);
  const Presentation q = parse_algebra_spec(once);
  CHECK(print_presentation(q) == once);
  CHECK(q.relations.size() == p.relations.size());
  CHECK(QuotientAlgebra::complete(q).dimension() == 36);
}

TEST_CASE("fingerprint is stable and sensitive") {
  const std::string text(kBuiltinSpecText);
  CHECK(fingerprint(text) == fingerprint(text));
  CHECK(fingerprint(text).size() == 16);
  CHECK(fingerprint(text) != fingerprint(text + " "));
}

TEST_CASE("parse errors carry locations") {
  ParseError e = parse_error("field 2\nquiver 2\narrow a 1 3\n");
  CHECK(e.line() == 3);

  e = parse_error("field 4\n");
  CHECK(e.line() == 1);

  e = parse_error("field 2\nquiver 2\narrow a 1 2\nrelations\na*a\n");
  CHECK(e.line() == 5);
  CHECK(e.column() >= 1);

  e = parse_error("field 2\nquiver 2\narrow a 1 2\nrelations\na + \n");
  CHECK(e.line() == 5);

  e = parse_error("field 2\nquiver 2\narrow a 1 2\nbogus\n");
  CHECK(e.line() == 4);
}

TEST_CASE("elements parse with coefficients reduced mod p") {
  const auto& q = fixture::quotient();
  PathExpr e = parse_element("3*b*d + b*d", q.quiver(), q.field());
  CHECK(q.reduce(e).terms.empty());
  CHECK_THROWS_AS(parse_element("b*b", q.quiver(), q.field()), ParseError);
  CHECK_THROWS_AS(parse_element("z", q.quiver(), q.field()), ParseError);
}
