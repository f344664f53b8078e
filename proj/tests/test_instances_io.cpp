#include <doctest.h>

#include "modext/io.hpp"

using namespace modext;

TEST_CASE("corpus is deterministic, validated, and large enough")
{
    auto c1 = generate_corpus(42);
    auto c2 = generate_corpus(42);
    REQUIRE(c1.size() >= 20);
    REQUIRE(c1.size() == c2.size());
    for (std::size_t i = 0; i < c1.size(); ++i) {
        CHECK(c1[i].name == c2[i].name);
        CHECK(c1[i].module.base.dim <= 3);
        CHECK(c1[i].module.inner.dim <= 3);
        CHECK(validate_algebraic_module(c1[i].module).ok());
    }
    // seed changes the generated tail
    auto c3 = generate_corpus(7);
    bool differs = false;
    for (std::size_t i = 0; i < std::min(c1.size(), c3.size()); ++i)
        differs = differs || c1[i].name != c3[i].name;
    CHECK(differs);
}

TEST_CASE("corpus covers each recipe kind")
{
    auto c = generate_corpus(42);
    for (const std::string prefix : {"self:", "trivial:", "theta:", "t:", "zeroact:"}) {
        bool found = false;
        for (auto& e : c)
            found = found || e.name.rfind(prefix, 0) == 0;
        CHECK_MESSAGE(found, "missing kind ", prefix);
    }
}

TEST_CASE("named algebras all validate")
{
    for (auto& n : named_algebra_list()) {
        FiniteAlgebra a = named_algebra(n);
        CHECK(validate_algebra(a).ok());
    }
    CHECK_THROWS_AS(named_algebra("nope"), StructureError);
}

TEST_CASE("definition files parse")
{
    const std::string text = R"({
      "schema_version": 1,
      "algebras": {
        "A": {"dim": 2, "basis": ["u", "v"],
              "mult": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"]],
              "unit": ["1","0"]}
      },
      "modules": {
        "M": {"base": "A", "dim": 1,
              "left": [[0,0,0,"1"]], "right": [[0,0,0,"1"]]}
      },
      "construct": {"kind": "bowtie", "module": "M"}
    })";
    Definition d = parse_definition_text(text);
    REQUIRE(d.algebras.count("A"));
    CHECK(validate_algebra(d.algebras["A"]).ok());
    AlgebraicModule m = resolve_module(d, "M");
    CHECK(validate_algebraic_module(m).ok());
    REQUIRE(d.constructs.size() == 1);
    ProductAlgebra p = build_construct(d, d.constructs[0]);
    CHECK(p.carrier.dim == 3);
    CHECK(validate_algebra(p.carrier).ok());
}

TEST_CASE("built-in algebra references resolve inside definitions")
{
    const std::string text = R"({
      "schema_version": 1,
      "construct": [{"kind": "self_bowtie", "a": "t2"},
                    {"kind": "direct_sum", "a": "q", "b": "cyclic2"},
                    {"kind": "theta_lau", "a": "diag2", "b": "zero2", "theta": ["1","0"]}]
    })";
    Definition d = parse_definition_text(text);
    REQUIRE(d.constructs.size() == 3);
    CHECK(build_construct(d, d.constructs[0]).carrier.dim == 6);
    CHECK(build_construct(d, d.constructs[1]).carrier.dim == 3);
    CHECK(build_construct(d, d.constructs[2]).carrier.dim == 4);
}

TEST_CASE("parse errors carry a location path")
{
    CHECK_THROWS_AS(parse_definition_text("not json"), ParseError);
    CHECK_THROWS_AS(parse_definition_text(R"({"schema_version": 2})"), ParseError);
    try {
        parse_definition_text(R"({
          "schema_version": 1,
          "algebras": {"A": {"dim": 1, "mult": [[0,0,5,"1"]]}}
        })");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("/algebras/A/mult[0]") != std::string::npos);
    }
    // decimal scalars are rejected
    CHECK_THROWS_AS(parse_definition_text(R"({
      "schema_version": 1,
      "algebras": {"A": {"dim": 1, "mult": [[0,0,0,"0.5"]]}}
    })"),
                    ParseError);
    // unknown references
    Definition d = parse_definition_text(R"({"schema_version": 1})");
    CHECK_THROWS_AS(resolve_algebra(d, "missing"), ParseError);
    CHECK_THROWS_AS(resolve_module(d, "missing"), ParseError);
}
