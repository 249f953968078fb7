#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfcalc/words.hpp"

namespace hopfcalc {

/// Finite presentation: named generators and relator words over them.
class Presentation {
 public:
  Presentation() = default;
  /// Validates names (distinct identifiers) and relator letters.
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t arity() const noexcept { return names_.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Generator images for a change of presentation.
struct SubstitutionMap {
  std::vector<std::string> source_generators;
  std::vector<std::string> target_generators;
  std::vector<Word> images;  // one per source generator, over the targets
};

bool is_identifier(std::string_view s);

/// Parses the `gens:` / `rel:` text format. Throws ParseError.
Presentation parse_presentation(std::string_view text);
std::string render(const Presentation& p);

/// Parses a word over the given generator names (same grammar as `rel:`).
Word parse_word(std::string_view text, const std::vector<std::string>& names);
/// Letters grouped into powers and joined by `*`; the identity renders as `1`.
std::string render_word(const Word& w, const std::vector<std::string>& names);

/// Parses the `targets:` / `map:` substitution format. Throws ParseError.
SubstitutionMap parse_substitution(std::string_view text);
std::string render(const SubstitutionMap& m);

/// Rewrites every relator through the map. The result has one relator per
/// input relator, over the map's target generators.
Presentation apply_substitution(const Presentation& p, const SubstitutionMap& m);

/// Free and cyclic reduction of relators, then removal of identity relators
/// and of repeats (a relator equal to an earlier one or to its inverse).
Presentation simplify(const Presentation& p);

}  // namespace hopfcalc
