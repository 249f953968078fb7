#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace hopfcalc {

/// A generator or its formal inverse.
struct Letter {
  std::uint32_t generator = 0;
  std::int8_t sign = 1;  // +1 or -1

  constexpr Letter inverse() const noexcept {
    return Letter{generator, static_cast<std::int8_t>(-sign)};
  }
  constexpr bool cancels(Letter other) const noexcept {
    return generator == other.generator && sign == -other.sign;
  }
  /// Position in the rewriting alphabet g0 < g0^-1 < g1 < g1^-1 < ...
  constexpr std::uint32_t code() const noexcept {
    return 2 * generator + (sign < 0 ? 1u : 0u);
  }
  static constexpr Letter from_code(std::uint32_t code) noexcept {
    return Letter{code / 2, static_cast<std::int8_t>(code % 2 ? -1 : 1)};
  }

  friend constexpr bool operator==(Letter, Letter) = default;
};

constexpr Letter gen(std::uint32_t index) { return Letter{index, 1}; }
constexpr Letter inv(std::uint32_t index) { return Letter{index, -1}; }

/// Freely reduced element of a free group. Immutable value; every
/// constructor reduces its input.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Largest generator index used plus one (0 for the identity).
  std::uint32_t min_arity() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex order over the rewriting alphabet.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  struct Reduced {};
  Word(Reduced, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;

  friend Word free_reduce(std::span<const Letter> raw);
};

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(std::span<const Letter> raw);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
/// g^-1 w g
Word conjugate(const Word& w, const Word& g);
/// u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);
Word power(const Word& w, long long k);

/// Signed letter counts per generator. Throws InvalidArgument when a letter
/// is not below `arity`.
std::vector<long long> exponent_vector(const Word& w, std::size_t arity);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// Splits w as conjugator^-1 * core * conjugator with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace hopfcalc
