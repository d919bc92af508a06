#include <string>

#include "doctest.h"
#include "support.hpp"

using namespace fbc;

TEST_CASE("serialisation round-trips byte for byte") {
  for (const auto& [id, c] : corpus::all()) {
    CAPTURE(id);
    std::string text = to_json(c);
    Configuration back = parse_configuration(text);
    CHECK(back == c);
    CHECK(to_json(back) == text);
  }
}

TEST_CASE("trivial L is written as the string") {
  std::string text = to_json(corpus::example0());
  CHECK(text.find("\"L\": \"trivial\"") != std::string::npos);
  CHECK(to_json(corpus::example1()).find("\"L\": [[") != std::string::npos);
}

TEST_CASE("parse errors report a byte position") {
  try {
    (void)parse_configuration("{\"angles\": [\"a\",}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("parse error at byte") != std::string::npos);
  }
}

TEST_CASE("document kind detection") {
  CHECK(detect_document_kind(to_json(corpus::example0())) == DocumentKind::configuration);
  CHECK(detect_document_kind(to_json(corpus::gs_example())) == DocumentKind::brauer);
  CHECK_THROWS_AS((void)detect_document_kind("[1,2]"), StructuralError);
}

TEST_CASE("structural problems in documents") {
  CHECK_THROWS_AS((void)parse_configuration(R"({"angles":["a","a"],"g":[],"P":[["a"]],"d":1})"),
                  StructuralError);
  CHECK_THROWS_AS((void)parse_configuration(R"({"angles":["a"],"g":[],"P":[["a"]]})"), StructuralError);
  CHECK_THROWS_AS((void)parse_configuration(R"({"angles":["a"],"g":[],"P":[["a"]],"L":"none","d":1})"),
                  StructuralError);
  CHECK_THROWS_AS((void)parse_configuration(R"({"angles":["a"],"g":[],"P":[["a"]],"d":"one"})"),
                  StructuralError);
  CHECK_THROWS_AS((void)parse_configuration(R"({"angles":[1],"g":[],"P":[[1]],"d":1})"), StructuralError);
}

TEST_CASE("degree forms") {
  const char* base = R"({"angles":["a","b","c"],"g":[["a","b"]],"P":[["a","b","c"]],"d":)";
  auto with = [&](const std::string& d) { return parse_configuration(std::string(base) + d + "}"); };

  Configuration uniform = with("3");
  for (Angle a = 0; a < 3; ++a) CHECK(uniform.degree(a) == 3);

  Configuration trivial = with("\"trivial\"");
  CHECK(trivial.degree(trivial.at("a")) == 2);
  CHECK(trivial.degree(trivial.at("c")) == 1);

  Configuration partial = with(R"({"a":4,"c":2})");
  CHECK(partial.degree(partial.at("b")) == 4);

  Configuration verbatim = with(R"({"a":4,"b":2,"c":2})");
  CHECK(verbatim.degree(verbatim.at("b")) == 2);
  CHECK_FALSE(validate(verbatim).ok());

  CHECK_THROWS_AS(with(R"({"a":4})"), StructuralError);
  CHECK_THROWS_AS(with(R"({"a":4,"c":2,"z":1})"), StructuralError);
}

TEST_CASE("brauer documents round-trip") {
  BrauerPresentation bc = corpus::gs_example();
  BrauerPresentation back = parse_brauer(to_json(bc));
  CHECK(back.vertices == bc.vertices);
  CHECK(back.zeta == bc.zeta);
  CHECK(back.polygons == bc.polygons);
  CHECK(back.orientation == bc.orientation);
  CHECK(back.multiplicity == bc.multiplicity);
}

TEST_CASE("missing files are input errors") {
  CHECK_THROWS_AS((void)read_document("/nonexistent/file.json"), InputError);
}
