#include <doctest.h>

#include "plonka/document.hpp"
#include "support.hpp"

using namespace plonka;
using namespace plonka::test;

TEST_CASE("the shipped system file parses, compiles and validates") {
  const Document doc = parse_document(data_file("diamond.system"));
  CHECK(doc.kind == DocKind::System);
  CHECK(doc.name == "diamond");
  const auto& body = std::get<SystemDoc>(doc.body);
  CHECK(body.components.size() == 4);
  CHECK(body.homs.size() == 5);

  const CompiledSystem compiled = compile_system(body);
  REQUIRE(compiled.ok());
  CHECK(compiled.system().carrier_size() == 18);
  CHECK(systems_isomorphic(compiled.system(), diamond_system()));
}

TEST_CASE("parse and print are mutually inverse on all shipped documents") {
  for (const char* name :
       {"diamond.system", "chain.system", "chain.raw", "diamond.state", "diamond-top.measure"}) {
    const Document doc = parse_document(data_file(name));
    const std::string printed = print_document(doc);
    CHECK(parse_document(printed) == doc);
    // the printer is canonical: printing again changes nothing
    CHECK(print_document(parse_document(printed)) == printed);
  }
}

TEST_CASE("an empty file is a syntax error at 1:1") {
  try {
    parse_document("");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::Syntax);
    CHECK(e.line == 1);
    CHECK(e.column == 1);
  }
  CHECK_THROWS_AS(parse_document("# only a comment\n"), ParseError);
}

TEST_CASE("an undeclared index in a hom is an unresolved reference") {
  const std::string text =
      "system broken\n"
      "semilattice i0 j\n"
      "join i0 j = j\n"
      "component i0 atoms=1 u\n"
      "component j atoms=1 v\n"
      "hom i0 -> m: v=u\n";
  try {
    parse_document(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::UnresolvedReference);
    CHECK(e.line == 6);
  }
}

TEST_CASE("duplicate names are rejected") {
  const std::string dup_component =
      "system broken\n"
      "semilattice i0 j\n"
      "join i0 j = j\n"
      "component i0 atoms=1 u\n"
      "component i0 atoms=1 w\n";
  try {
    parse_document(dup_component);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::DuplicateName);
  }
  CHECK_THROWS_AS(parse_document("system broken\nsemilattice i0 i0\n"), ParseError);
}

TEST_CASE("structural gaps are syntax errors") {
  // missing join pair
  CHECK_THROWS_AS(parse_document("system s\n"
                                 "semilattice a b c\n"
                                 "join a b = b\n"
                                 "join a c = c\n"
                                 "component a atoms=0\n"
                                 "component b atoms=0\n"
                                 "component c atoms=0\n"),
                  ParseError);
  // component atom count disagrees with the list
  CHECK_THROWS_AS(parse_document("system s\nsemilattice a\ncomponent a atoms=2 x\n"), ParseError);
  // hom not covering every target atom
  CHECK_THROWS_AS(parse_document("system s\n"
                                 "semilattice a b\n"
                                 "join a b = b\n"
                                 "component a atoms=1 x\n"
                                 "component b atoms=2 y z\n"
                                 "hom a -> b: y=x\n"),
                  ParseError);
  // unknown document kind
  CHECK_THROWS_AS(parse_document("thing t\n"), ParseError);
}

TEST_CASE("leading comments survive the round trip") {
  const std::string text = "# first\n# second\nmeasure m\nweights a=1/2, b=1/2\n";
  const Document doc = parse_document(text);
  CHECK(doc.comments == std::vector<std::string>{"first", "second"});
  CHECK(parse_document(print_document(doc)) == doc);
}

TEST_CASE("rationals are canonicalized by parsing") {
  const Document doc = parse_document("measure m\nweights a=2/4, b=1/2\n");
  const auto& body = std::get<MeasureDoc>(doc.body);
  CHECK(body.weights[0].second == Rat(1, 2));
  CHECK_THROWS_AS(parse_document("measure m\nweights a=1/0\n"), ParseError);
  CHECK_THROWS_AS(parse_document("measure m\nweights a=x\n"), ParseError);
}

TEST_CASE("state documents resolve against a system at compile time") {
  const CompiledSystem system =
      compile_system(std::get<SystemDoc>(parse_document(data_file("diamond.system")).body));
  const Document state_doc = parse_document(data_file("diamond.state"));
  const CompiledState state = compile_state(std::get<StateDoc>(state_doc.body), system);
  REQUIRE(state.componentwise);
  CHECK(state.component_weights[3] ==
        std::vector<Rat>{Rat(1, 2), Rat(1, 6), Rat(1, 3)});

  const Document top_doc = parse_document("state top\ntop-measure c=1/2, d=1/6, e=1/3\n");
  const CompiledState top = compile_state(std::get<StateDoc>(top_doc.body), system);
  CHECK(!top.componentwise);
  CHECK(top.top_weights == std::vector<Rat>{Rat(1, 2), Rat(1, 6), Rat(1, 3)});

  const Document unknown_atom = parse_document("state bad\ntop-measure q=1\n");
  CHECK_THROWS_AS(compile_state(std::get<StateDoc>(unknown_atom.body), system), ParseError);
  const Document missing_component =
      parse_document("state bad\ncomponent k: c=1/2, d=1/6, e=1/3\n");
  CHECK_THROWS_AS(compile_state(std::get<StateDoc>(missing_component.body), system), ParseError);

  const Document measure_doc = parse_document(data_file("diamond-top.measure"));
  CHECK(compile_measure(std::get<MeasureDoc>(measure_doc.body), system) ==
        std::vector<Rat>{Rat(1, 2), Rat(1, 6), Rat(1, 3)});
}

TEST_CASE("the raw document compiles to the six-element tables") {
  const Document doc = parse_document(data_file("chain.raw"));
  const RawAlgebra algebra = compile_raw(std::get<RawDoc>(doc.body));
  CHECK(algebra.size == 6);
  CHECK(algebra.well_formed());
  CHECK(check_ibsl(algebra).pass);
  // a ∨ b = b in document element order (a at 1, b at 4)
  CHECK(algebra.join(1, 4) == 4);

  // cell-for-cell equal to the materialized sum, under the element
  // correspondence (document order 0 a a' 1 b b', sum order 0 a a' 1 b' b)
  const PlonkaSum sum = plonka_sum(chain_system());
  const std::uint32_t to_sum[6] = {0, 1, 2, 3, 5, 4};
  for (std::uint32_t x = 0; x < 6; ++x) {
    CHECK(to_sum[algebra.comp(x)] == sum.raw.comp(to_sum[x]));
    for (std::uint32_t y = 0; y < 6; ++y) {
      CHECK(to_sum[algebra.join(x, y)] == sum.raw.join(to_sum[x], to_sum[y]));
      CHECK(to_sum[algebra.meet(x, y)] == sum.raw.meet(to_sum[x], to_sum[y]));
    }
  }
  CHECK(to_sum[algebra.zero] == sum.raw.zero);
  CHECK(to_sum[algebra.one] == sum.raw.one);
}

TEST_CASE("the parser survives arbitrary input without crashing") {
  std::mt19937_64 rng(99);
  const std::string alphabet = "abc =,:->#\n/0123'";
  for (int round = 0; round < 500; ++round) {
    std::string text;
    const std::size_t length = rng() % 120;
    for (std::size_t i = 0; i < length; ++i)
      text += alphabet[rng() % alphabet.size()];
    try {
      (void)parse_document(text);
    } catch (const ParseError&) {
      // rejected input is fine; anything else would escape and fail the test
    }
  }
}

TEST_CASE("element names follow the subscript convention") {
  const std::vector<std::string> atoms = {"c", "d", "e"};
  CHECK(element_name(atoms, 0, "k") == "0_k");
  CHECK(element_name(atoms, 7, "k") == "1_k");
  CHECK(element_name(atoms, 1, "k") == "c");
  CHECK(element_name(atoms, 5, "k") == "d'");  // {c,e} is the complement of d
  CHECK(element_name({"u"}, 0, "") == "0");
  CHECK(element_name({"u"}, 1, "") == "1");
  CHECK(element_name({"w", "x", "y", "z"}, 0b0011, "m") == "{w,x}");
}

TEST_CASE("documents synthesized from systems round trip and revalidate") {
  SystemGenerator gen(4242);
  for (int round = 0; round < 20; ++round) {
    const DirectSystem system = gen.next(false, false);
    const Document doc = document_from_system(system, "generated");
    const std::string printed = print_document(doc);
    const Document reparsed = parse_document(printed);
    CHECK(reparsed == doc);
    const CompiledSystem compiled = compile_system(std::get<SystemDoc>(reparsed.body));
    REQUIRE(compiled.ok());
    CHECK(systems_isomorphic(compiled.system(), system));
  }
}

TEST_CASE("raw documents synthesized from algebras round trip") {
  const PlonkaSum sum = plonka_sum(chain_system());
  const std::vector<std::string> names = {"0", "a", "a'", "1", "b'", "b"};
  const Document doc = document_from_raw(sum.raw, "chain", names);
  const Document reparsed = parse_document(print_document(doc));
  CHECK(reparsed == doc);
  CHECK(compile_raw(std::get<RawDoc>(reparsed.body)) == sum.raw);
}
