#include <doctest.h>

#include <string>

#include "hopfcalc/corpus.hpp"
#include "hopfcalc/error.hpp"
#include "hopfcalc/fplinalg.hpp"
#include "hopfcalc/presentation.hpp"

using namespace hopfcalc;

namespace {

std::size_t relator_rank(const Presentation& p, std::uint64_t prime) {
  std::vector<std::vector<long long>> rows;
  for (const Word& r : p.relators()) rows.push_back(exponent_vector(r, p.arity()));
  return rank(MatrixFp::from_rows(prime, p.arity(), rows));
}

ParseError parse_error(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("parse expands commutators and powers") {
  Presentation p = parse_presentation("gens: z u1\nrel: [z,u1]");
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == Word{inv(0), inv(1), gen(0), gen(1)});

  Presentation q = parse_presentation("gens: u1 a b0 b1\nrel: (b0*b1^-1*a^-1*u1)^3");
  Word unit{gen(2), inv(3), inv(1), gen(0)};
  CHECK(q.relators()[0] == power(unit, 3));
  CHECK(q.relators()[0].size() == 12);

  Presentation r = parse_presentation("gens: b1 z\nrel: b1^-7*z");
  CHECK(r.relators()[0] == multiply(power(Word{gen(0)}, -7), Word{gen(1)}));
}

TEST_CASE("parse accepts comments, blank lines and the identity atom") {
  Presentation p = parse_presentation("# header\n\ngens: a b   # two\nrel: a^2 # trailing\nrel: 1\n");
  CHECK(p.arity() == 2);
  CHECK(p.relators().size() == 2);
  CHECK(p.relators()[1].empty());
}

TEST_CASE("parse errors carry line and column") {
  auto e = parse_error("gens: a\nrel: a*b");
  CHECK(e.line() == 2);
  CHECK(e.column() == 8);
  CHECK(std::string(e.what()).find("unknown identifier 'b'") != std::string::npos);

  e = parse_error("gens: a b a");
  CHECK(e.line() == 1);
  CHECK(std::string(e.what()).find("duplicate generator") != std::string::npos);

  e = parse_error("gens: a\nrel: a^x");
  CHECK(std::string(e.what()).find("non-integer exponent") != std::string::npos);
  CHECK(e.column() == 8);

  e = parse_error("gens: a\nrel: (a*a");
  CHECK(e.line() == 2);

  e = parse_error("rel: a\n");
  CHECK(e.line() == 1);
  CHECK_THROWS_AS(parse_presentation("gens: a\nfoo: a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("rel: a"), ParseError);
  CHECK_THROWS_AS(parse_presentation(""), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: 1a"), ParseError);
}

TEST_CASE("render") {
  Presentation p = parse_presentation("gens: a\nrel: a^4");
  CHECK(render(p) == "gens: a\nrel: a^4");
  Presentation free2 = parse_presentation("gens: a b");
  CHECK(render(free2) == "gens: a b");
  CHECK(render_word(Word{}, {"a"}) == "1");
  CHECK(render_word(Word{inv(0), inv(0), gen(1)}, {"a", "b"}) == "a^-2*b");
}

TEST_CASE("every corpus entry parses and round-trips") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    Presentation p = corpus(name);
    CHECK(parse_presentation(render(p)) == p);
  }
  CHECK(corpus("SL2Z7Z7_6GEN").arity() == 6);
  CHECK(corpus("SL2Z7Z7_6GEN").relators().size() == 32);
  CHECK(corpus("SL2Z7Z7_14GEN").arity() == 14);
  CHECK(render(corpus("SL2_Z")) == "gens: a b\nrel: a^4\nrel: b^6\nrel: a^2*b^-3");
  CHECK(render(corpus("PSL2_Z")) == "gens: a b\nrel: a^2\nrel: b^3");
}

TEST_CASE("unknown corpus names list the available entries") {
  try {
    corpus("SL3_Z");
    FAIL("expected an error");
  } catch (const InvalidArgument& e) {
    std::string msg = e.what();
    CHECK(msg.find("SL3_Z") != std::string::npos);
    CHECK(msg.find("SL2Z7Z7_6GEN") != std::string::npos);
  }
}

TEST_CASE("substitution") {
  Presentation p = corpus("SL2_Z");
  SubstitutionMap id = parse_substitution("targets: a b\nmap: a -> a\nmap: b -> b");
  CHECK(apply_substitution(p, id) == p);

  Presentation q = parse_presentation("gens: a b\nrel: b*a^-2");
  SubstitutionMap m = parse_substitution("targets: a\nmap: a -> a\nmap: b -> a^2");
  Presentation sub = apply_substitution(q, m);
  CHECK(sub.arity() == 1);
  REQUIRE(sub.relators().size() == 1);
  CHECK(sub.relators()[0].empty());
  CHECK(simplify(sub).relators().empty());

  SubstitutionMap absent = parse_substitution("targets: a\nmap: a -> a\nmap: c -> a");
  CHECK_THROWS_AS(apply_substitution(q, absent), InvalidArgument);
  SubstitutionMap missing = parse_substitution("targets: a\nmap: a -> a");
  CHECK_THROWS_AS(apply_substitution(q, missing), InvalidArgument);
  CHECK_THROWS_AS(parse_substitution("targets: a\nmap: a -> b"), ParseError);
  CHECK_THROWS_AS(parse_substitution("targets: a\nmap: a -> a\nmap: a -> a"), ParseError);
  CHECK_THROWS_AS(parse_substitution("map: a -> a"), ParseError);
  CHECK_THROWS_AS(parse_substitution("targets: a\nmap: a a"), ParseError);

  CHECK(parse_substitution(render(m)).images == m.images);
}

TEST_CASE("the 14-generator map preserves relator count before simplification") {
  Presentation big = corpus("SL2Z7Z7_14GEN");
  Presentation sub = apply_substitution(big, sl2z7_substitution());
  CHECK(sub.arity() == 6);
  CHECK(sub.relators().size() == big.relators().size());
  CHECK(sub.generator_names() == corpus("SL2Z7Z7_6GEN").generator_names());
}

TEST_CASE("simplify") {
  Presentation p = parse_presentation("gens: a\nrel: 1\nrel: a^4\nrel: a^4");
  CHECK(render(simplify(p)) == "gens: a\nrel: a^4");
  Presentation q = parse_presentation("gens: a b\nrel: b^-1*a^2*b");
  CHECK(render(simplify(q)) == "gens: a b\nrel: a^2");
  Presentation r = parse_presentation("gens: a b\nrel: a*b^2\nrel: b^-2*a^-1");
  CHECK(simplify(r).relators().size() == 1);
  CHECK(simplify(r).arity() == 2);
}

TEST_CASE("simplify is idempotent and keeps the relator row space") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    Presentation p = corpus(name);
    Presentation s = simplify(p);
    CHECK(simplify(s) == s);
    for (std::uint64_t prime : {2, 3, 5, 7}) CHECK(relator_rank(s, prime) == relator_rank(p, prime));
  }
}
