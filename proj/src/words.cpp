#include "hopfcalc/words.hpp"

#include <algorithm>
#include <string>

#include "hopfcalc/error.hpp"

namespace hopfcalc {

Word::Word(std::initializer_list<Letter> letters)
    : Word(free_reduce(std::span<const Letter>(letters.begin(), letters.size()))) {}

Word::Word(std::span<const Letter> letters) : Word(free_reduce(letters)) {}

std::uint32_t Word::min_arity() const noexcept {
  std::uint32_t arity = 0;
  for (Letter l : letters_) arity = std::max(arity, l.generator + 1);
  return arity;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ca = a[i].code(), cb = b[i].code();
    if (ca != cb) return ca <=> cb;
  }
  return std::strong_ordering::equal;
}

Word free_reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back().cancels(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(Word::Reduced{}, std::move(out));
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> raw;
  raw.reserve(u.size() + v.size());
  raw.insert(raw.end(), u.begin(), u.end());
  raw.insert(raw.end(), v.begin(), v.end());
  return free_reduce(raw);
}

Word invert(const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    raw.push_back(it->inverse());
  return free_reduce(raw);
}

Word conjugate(const Word& w, const Word& g) {
  return multiply(multiply(invert(g), w), g);
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(invert(u), invert(v)), multiply(u, v));
}

Word power(const Word& w, long long k) {
  const Word base = k < 0 ? invert(w) : w;
  const unsigned long long n =
      k < 0 ? 0ull - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  // Only the cyclically reduced core repeats; the conjugator cancels.
  auto [core, conj] = cyclic_reduce(base);
  std::vector<Letter> raw;
  raw.reserve(core.size() * n);
  for (unsigned long long i = 0; i < n; ++i)
    raw.insert(raw.end(), core.begin(), core.end());
  return conjugate(free_reduce(raw), conj);
}

std::vector<long long> exponent_vector(const Word& w, std::size_t arity) {
  std::vector<long long> v(arity, 0);
  for (Letter l : w) {
    if (l.generator >= arity)
      throw InvalidArgument("letter for generator " + std::to_string(l.generator) +
                            " exceeds arity " + std::to_string(arity));
    v[l.generator] += l.sign;
  }
  return v;
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo].cancels(w[hi - 1])) {
    ++lo;
    --hi;
  }
  Word core(w.letters().subspan(lo, hi - lo));
  Word conj(w.letters().subspan(hi));
  return {std::move(core), std::move(conj)};
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= l.code() + 1;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hopfcalc
