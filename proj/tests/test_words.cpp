#include <doctest.h>

#include <random>
#include <vector>

#include "hopfcalc/error.hpp"
#include "hopfcalc/words.hpp"

using namespace hopfcalc;

namespace {

constexpr std::uint32_t A = 0, B = 1, C = 2;

std::vector<Letter> random_letters(std::mt19937& rng, std::uint32_t arity, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> g(0, arity - 1);
  std::bernoulli_distribution s;
  std::vector<Letter> out(len(rng));
  for (auto& l : out) l = Letter{g(rng), static_cast<std::int8_t>(s(rng) ? 1 : -1)};
  return out;
}

std::vector<long long> add(std::vector<long long> a, const std::vector<long long>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
  std::vector<Letter> aa{gen(A), inv(A)};
  CHECK(free_reduce(aa).empty());
  CHECK(free_reduce(std::vector<Letter>{}).empty());
  std::vector<Letter> abba{gen(A), gen(B), inv(B), gen(A)};
  CHECK(free_reduce(abba) == Word{gen(A), gen(A)});
}

TEST_CASE("multiply, invert, conjugate, commutator, power") {
  CHECK(multiply(Word{gen(A)}, Word{inv(A)}).empty());
  CHECK(multiply(Word{gen(A), gen(B)}, Word{inv(B), gen(C)}) == Word{gen(A), gen(C)});
  Word w{gen(A), inv(B), gen(C)};
  CHECK(multiply(Word{}, w) == w);

  CHECK(invert(Word{gen(A), inv(B)}) == Word{gen(B), inv(A)});
  CHECK(invert(Word{}).empty());
  CHECK(invert(Word{gen(A), gen(B), gen(C)}) == Word{inv(C), inv(B), inv(A)});

  CHECK(conjugate(Word{gen(A)}, Word{}) == Word{gen(A)});
  // b1 conjugated by z^3 (z = 0, b1 = 1)
  Word z3 = power(Word{gen(0)}, 3);
  CHECK(conjugate(Word{gen(1)}, z3) ==
        Word{inv(0), inv(0), inv(0), gen(1), gen(0), gen(0), gen(0)});

  CHECK(commutator(Word{gen(A)}, Word{gen(A)}).empty());
  CHECK(commutator(Word{gen(A)}, Word{gen(B)}) == Word{inv(A), inv(B), gen(A), gen(B)});

  CHECK(power(Word{gen(A)}, 7).size() == 7);
  CHECK(power(w, 0).empty());
  CHECK(power(Word{gen(A), gen(B)}, -2) == Word{inv(B), inv(A), inv(B), inv(A)});
  CHECK(power(Word{inv(B), gen(A), gen(A), gen(B)}, 3) ==
        Word{inv(B), gen(A), gen(A), gen(A), gen(A), gen(A), gen(A), gen(B)});
}

TEST_CASE("exponent_vector") {
  Word w{gen(A), gen(A), inv(B), inv(B), inv(B)};
  CHECK(exponent_vector(w, 2) == std::vector<long long>{2, -3});
  CHECK(exponent_vector(commutator(w, Word{gen(C)}), 3) == std::vector<long long>{0, 0, 0});
  CHECK_THROWS_AS(exponent_vector(Word{gen(C)}, 2), InvalidArgument);
  // z^-3 b1 z^-1 a^-1 b1 z^-1 a^-1 b1 z^3 a over (z,u1,u2,u3,a,b1)
  const std::uint32_t z = 0, a = 4, b1 = 5;
  std::vector<Letter> raw{inv(z), inv(z), inv(z), gen(b1), inv(z), inv(a), gen(b1), inv(z),
                          inv(a), gen(b1), gen(z),  gen(z),  gen(z),  gen(a)};
  CHECK(exponent_vector(free_reduce(raw), 6) == std::vector<long long>{-2, 0, 0, 0, -1, 3});
}

TEST_CASE("cyclic_reduce") {
  auto r = cyclic_reduce(Word{inv(A), gen(B), gen(A)});
  CHECK(r.core == Word{gen(B)});
  CHECK(r.conjugator == Word{gen(A)});
  auto e = cyclic_reduce(Word{});
  CHECK(e.core.empty());
  CHECK(e.conjugator.empty());
  auto s = cyclic_reduce(Word{inv(B), gen(A), gen(A), gen(B)});
  CHECK(s.core == Word{gen(A), gen(A)});
  CHECK(s.conjugator == Word{gen(B)});
}

TEST_CASE("shortlex order uses a < A < b < B") {
  CHECK(Word{gen(A)} < Word{inv(A)});
  CHECK(Word{inv(A)} < Word{gen(B)});
  CHECK(Word{gen(B)} < Word{gen(A), gen(A)});
}

TEST_CASE("word algebra properties on random words") {
  std::mt19937 rng(20240611);
  for (int iter = 0; iter < 500; ++iter) {
    auto ru = random_letters(rng, 3, 20);
    auto rv = random_letters(rng, 3, 20);
    auto rg = random_letters(rng, 3, 8);
    Word u = free_reduce(ru), v = free_reduce(rv), g = free_reduce(rg);
    CHECK(free_reduce(u.letters()) == u);
    CHECK(exponent_vector(multiply(u, v), 3) == add(exponent_vector(u, 3), exponent_vector(v, 3)));
    auto neg = exponent_vector(u, 3);
    for (auto& x : neg) x = -x;
    CHECK(exponent_vector(invert(u), 3) == neg);
    CHECK(multiply(u, invert(u)).empty());
    CHECK(invert(invert(u)) == u);
    CHECK(conjugate(u, Word{}) == u);
    CHECK(power(u, 1) == u);
    CHECK(multiply(u, v).size() <= u.size() + v.size());
    CHECK(exponent_vector(conjugate(u, g), 3) == exponent_vector(u, 3));
    CHECK(exponent_vector(commutator(u, v), 3) == std::vector<long long>(3, 0));
    CHECK(multiply(multiply(u, v), g) == multiply(u, multiply(v, g)));
    auto [core, conj] = cyclic_reduce(u);
    CHECK(conjugate(core, conj) == u);
    if (core.size() > 1) CHECK_FALSE(core[0].cancels(core[core.size() - 1]));
    CHECK(power(u, 3) == multiply(u, multiply(u, u)));
    CHECK(power(u, -2) == invert(multiply(u, u)));
  }
}
