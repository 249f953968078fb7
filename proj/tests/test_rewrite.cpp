#include <doctest.h>

#include <array>
#include <random>
#include <variant>

#include "hopfcalc/corpus.hpp"
#include "hopfcalc/error.hpp"
#include "hopfcalc/presentation.hpp"
#include "hopfcalc/rewrite.hpp"

using namespace hopfcalc;

namespace {

Word random_word(std::mt19937& rng, std::uint32_t arity, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> g(0, arity - 1);
  std::bernoulli_distribution s;
  std::vector<Letter> out(len(rng));
  for (auto& l : out) l = Letter{g(rng), static_cast<std::int8_t>(s(rng) ? 1 : -1)};
  return free_reduce(out);
}

RewriteSystem complete(const std::string& text) {
  return knuth_bendix(initial_rules(parse_presentation(text)));
}

std::size_t count(const std::variant<std::vector<Word>, Overflow>& v) {
  return std::get<std::vector<Word>>(v).size();
}

}  // namespace

TEST_CASE("initial rules") {
  RewriteSystem free1 = initial_rules(parse_presentation("gens: a"));
  CHECK(free1.rule_count() == 2);

  RewriteSystem cubic = initial_rules(parse_presentation("gens: a\nrel: a^3"));
  CHECK(cubic.rule_count() == 3);
  bool found = false;
  for (const Rule& r : cubic.rules())
    if (r.lhs == Word{gen(0), gen(0)} && r.rhs == Word{inv(0)}) found = true;
  CHECK(found);

  RewriteSystem comm = initial_rules(parse_presentation("gens: a b\nrel: [a,b]"));
  found = false;
  for (const Rule& r : comm.rules())
    if (r.lhs == Word{inv(1), inv(0)} && r.rhs == Word{inv(0), inv(1)}) found = true;
  CHECK(found);
  CHECK_FALSE(comm.confluent());

  RewriteSystem done = knuth_bendix(comm);
  CHECK(done.confluent());
  found = false;
  for (const Rule& r : done.rules())
    if (r.lhs == Word{gen(1), gen(0)} && r.rhs == Word{gen(0), gen(1)}) found = true;
  CHECK(found);
}

TEST_CASE("knuth_bendix on small groups") {
  RewriteSystem z2 = complete("gens: a\nrel: a^2");
  CHECK(z2.confluent());
  CHECK(z2.normal_form(power(Word{gen(0)}, 3)) == Word{gen(0)});
  CHECK(count(enumerate_elements(z2, 10)) == 2);

  RewriteSystem s3 = complete(std::string(corpus_text("SL2_F2")));
  CHECK(s3.confluent());
  CHECK(count(enumerate_elements(s3, 100)) == 6);

  RewriteSystem free2 = knuth_bendix(initial_rules(parse_presentation("gens: a b")));
  CHECK(free2.confluent());
  CHECK(std::holds_alternative<Overflow>(enumerate_elements(free2, 10)));

  RewriteSystem z5 = complete("gens: a\nrel: a^5");
  auto elems = std::get<std::vector<Word>>(enumerate_elements(z5, 10));
  CHECK(elems.size() == 5);
  for (const Word& w : elems) CHECK(z5.normal_form(w) == w);

  RewriteSystem z2z = complete("gens: a b\nrel: [a,b]");
  Word baba{gen(1), gen(0), gen(1), gen(0)};
  CHECK(z2z.normal_form(baba) == Word{gen(0), gen(0), gen(1), gen(1)});
}

TEST_CASE("group_order") {
  CHECK(group_order(complete("gens: a\nrel: a^7"), 100) == 7u);
  CHECK(group_order(complete(std::string(corpus_text("SL2_F3"))), 100) == 24u);
  CHECK(group_order(complete(std::string(corpus_text("SL2_F5"))), 1000) == 120u);
  CHECK_FALSE(group_order(complete(std::string(corpus_text("SL2_Z"))), 1000).has_value());
  CHECK(presents_infinite_group(complete(std::string(corpus_text("SL2_Z")))) == true);
  CHECK(presents_infinite_group(complete(std::string(corpus_text("SL2_F3")))) == false);
  CHECK(presents_infinite_group(complete("gens: a b")) == true);
}

TEST_CASE("enumerate_elements rejects non-confluent systems") {
  RewriteSystem raw = initial_rules(parse_presentation("gens: a b\nrel: [a,b]"));
  CHECK_THROWS_AS(enumerate_elements(raw, 10), InvalidArgument);
  CHECK_FALSE(group_order(raw, 10).has_value());
}

TEST_CASE("budget exhaustion leaves a sound non-confluent system") {
  Budget tiny{20, 64, 2'000'000};
  Presentation p = corpus("SL2_F5");
  RewriteSystem rws = knuth_bendix(initial_rules(p), tiny);
  CHECK_FALSE(rws.confluent());
  CHECK(rws.stats().hit_rule_limit);
  for (const Word& r : p.relators()) CHECK(rws.normal_form(r).empty());
  CHECK_THROWS_AS(knuth_bendix(initial_rules(p), Budget{0, 1, 1}), InvalidArgument);
}

TEST_CASE("add_rule checks orientation and dump lists rules") {
  RewriteSystem rws(1);
  CHECK_THROWS_AS(rws.add_rule(Word{gen(0)}, Word{gen(0), gen(0)}), InvalidArgument);
  rws.add_rule(Word{gen(0), gen(0)}, Word{});
  CHECK(rws.normal_form(power(Word{gen(0)}, 5)) == Word{gen(0)});
  std::string text = rws.dump({"a"});
  CHECK(text.rfind("# confluent: false\n", 0) == 0);
  CHECK(text.find("a^2 -> 1") != std::string::npos);
}

TEST_CASE("rewriting properties") {
  std::mt19937 rng(7);
  for (const char* name : {"SL2_F2", "SL2_F3", "Q8", "KLEIN4", "SL2_F5"}) {
    CAPTURE(name);
    Presentation p = corpus(name);
    RewriteSystem rws = knuth_bendix(initial_rules(p));
    REQUIRE(rws.confluent());
    for (const Word& r : p.relators()) CHECK(rws.normal_form(r).empty());
    auto elems = std::get<std::vector<Word>>(enumerate_elements(rws, 1000));
    for (const Word& e : elems)
      for (std::uint32_t g = 0; g < p.arity(); ++g) {
        Word x = rws.normal_form(multiply(e, Word{gen(g)}));
        CHECK(std::binary_search(elems.begin(), elems.end(), x));
      }
    for (int i = 0; i < 200; ++i) {
      Word u = random_word(rng, static_cast<std::uint32_t>(p.arity()), 15);
      Word v = random_word(rng, static_cast<std::uint32_t>(p.arity()), 15);
      Word nu = rws.normal_form(u);
      CHECK(rws.normal_form(nu) == nu);
      CHECK_FALSE(rws.is_reducible(nu));
      CHECK(rws.normal_form(multiply(u, v)) == rws.normal_form(multiply(nu, rws.normal_form(v))));
      CHECK(rws.normal_form(multiply(u, invert(u))).empty());
    }
  }
}

TEST_CASE("normal forms separate exactly the elements of S3") {
  // a -> (0 1), b -> (0 1 2) is a faithful representation of <a,b | a^2, b^3, (ab)^2>.
  using Perm = std::array<int, 3>;
  auto compose = [](const Perm& x, const Perm& y) {
    Perm r{};
    for (int i = 0; i < 3; ++i) r[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])];
    return r;
  };
  const Perm a{1, 0, 2}, b{1, 2, 0}, binv{2, 0, 1};
  auto eval = [&](const Word& w) {
    Perm r{0, 1, 2};
    for (Letter l : w) r = compose(r, l.generator == 0 ? a : (l.sign > 0 ? b : binv));
    return r;
  };
  RewriteSystem rws = complete(std::string(corpus_text("SL2_F2")));
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    Word u = random_word(rng, 2, 10), v = random_word(rng, 2, 10);
    CHECK((rws.normal_form(u) == rws.normal_form(v)) == (eval(u) == eval(v)));
  }
}
