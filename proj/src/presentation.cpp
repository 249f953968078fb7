#include "hopfcalc/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "hopfcalc/error.hpp"

namespace hopfcalc {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Recursive-descent parser for one word on one line.
class WordParser {
 public:
  WordParser(std::string_view text, std::size_t line, std::size_t column_offset,
             const std::vector<std::string>& names)
      : text_(text), line_(line), offset_(column_offset), names_(names) {}

  Word parse_all() {
    Word w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, offset_ + pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ < text_.size())
        fail(std::string("expected '") + c + "' but found '" + text_[pos_] + "'");
      fail(std::string("expected '") + c + "' at end of line");
    }
  }

  Word word() {
    Word w = term();
    while (accept('*')) w = multiply(w, term());
    return w;
  }

  Word term() {
    Word a = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_) {
        pos_ = start;
        fail("non-integer exponent");
      }
      long long k = 0;
      const char* first = text_.data() + (text_[start] == '+' ? start + 1 : start);
      auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, k);
      if (ec != std::errc{}) {
        pos_ = start;
        fail("exponent out of range");
      }
      a = power(a, k);
    }
    return a;
  }

  Word atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected generator, '(' or '[' at end of line");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      return commutator(u, v);
    }
    if (c == '1') {
      ++pos_;
      return Word{};
    }
    if (!ident_start(c)) fail("unexpected '" + std::string(1, c) + "'");
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    return Word{gen(static_cast<std::uint32_t>(it - names_.begin()))};
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

struct Line {
  std::size_t number;
  std::string_view keyword;  // text before ':'
  std::string_view body;     // text after ':'
  std::size_t body_column;   // 0-based column of body start
};

// Splits text into non-blank, comment-stripped `keyword: body` lines.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) continue;
    std::size_t colon = raw.find(':');
    if (colon == std::string_view::npos) {
      std::size_t col = raw.find_first_not_of(" \t");
      throw ParseError("expected 'keyword:'", number, col + 1);
    }
    out.push_back({number, trim(raw.substr(0, colon)), raw.substr(colon + 1), colon + 1});
  }
  return out;
}

std::vector<std::string> parse_names(const Line& line) {
  std::vector<std::string> names;
  std::string_view body = line.body;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < body.size() && !std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
    std::string name(body.substr(start, pos - start));
    if (!is_identifier(name))
      throw ParseError("invalid identifier '" + name + "'", line.number,
                       line.body_column + start + 1);
    if (std::find(names.begin(), names.end(), name) != names.end())
      throw ParseError("duplicate generator '" + name + "'", line.number,
                       line.body_column + start + 1);
    names.push_back(std::move(name));
  }
  return names;
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s.front())) return false;
  return std::all_of(s.begin(), s.end(), ident_char);
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)), relators_(std::move(relators)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw InvalidArgument("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate generator '" + n + "'");
  }
  for (const auto& r : relators_)
    if (r.min_arity() > names_.size())
      throw InvalidArgument("relator uses a generator beyond the declared " +
                            std::to_string(names_.size()));
}

std::optional<std::size_t> Presentation::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  return WordParser(text, 1, 0, names).parse_all();
}

Presentation parse_presentation(std::string_view text) {
  std::optional<std::vector<std::string>> names;
  std::vector<Word> relators;
  for (const Line& line : split_lines(text)) {
    if (line.keyword == "gens") {
      if (names) throw ParseError("second 'gens:' line", line.number, 1);
      names = parse_names(line);
    } else if (line.keyword == "rel") {
      if (!names) throw ParseError("'rel:' before 'gens:'", line.number, 1);
      relators.push_back(WordParser(line.body, line.number, line.body_column, *names).parse_all());
    } else {
      throw ParseError("unknown keyword '" + std::string(line.keyword) + "'", line.number, 1);
    }
  }
  if (!names) throw ParseError("missing 'gens:' line", 1, 1);
  return Presentation(std::move(*names), std::move(relators));
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += names.at(w[i].generator);
    long long k = static_cast<long long>(j - i) * w[i].sign;
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out;
}

std::string render(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& n : p.generator_names()) out += " " + n;
  for (const auto& r : p.relators()) out += "\nrel: " + render_word(r, p.generator_names());
  return out;
}

SubstitutionMap parse_substitution(std::string_view text) {
  SubstitutionMap m;
  bool have_targets = false;
  for (const Line& line : split_lines(text)) {
    if (line.keyword == "targets") {
      if (have_targets) throw ParseError("second 'targets:' line", line.number, 1);
      m.target_generators = parse_names(line);
      have_targets = true;
    } else if (line.keyword == "map") {
      if (!have_targets) throw ParseError("'map:' before 'targets:'", line.number, 1);
      std::size_t arrow = line.body.find("->");
      if (arrow == std::string_view::npos)
        throw ParseError("expected '->'", line.number, line.body_column + 1);
      std::string source(trim(line.body.substr(0, arrow)));
      if (!is_identifier(source))
        throw ParseError("invalid source identifier '" + source + "'", line.number,
                         line.body_column + 1);
      if (std::find(m.source_generators.begin(), m.source_generators.end(), source) !=
          m.source_generators.end())
        throw ParseError("generator '" + source + "' mapped twice", line.number,
                         line.body_column + 1);
      std::size_t image_col = line.body_column + arrow + 2;
      m.images.push_back(WordParser(line.body.substr(arrow + 2), line.number, image_col,
                                    m.target_generators)
                             .parse_all());
      m.source_generators.push_back(std::move(source));
    } else {
      throw ParseError("unknown keyword '" + std::string(line.keyword) + "'", line.number, 1);
    }
  }
  if (!have_targets) throw ParseError("missing 'targets:' line", 1, 1);
  return m;
}

std::string render(const SubstitutionMap& m) {
  std::string out = "targets:";
  for (const auto& n : m.target_generators) out += " " + n;
  for (std::size_t i = 0; i < m.source_generators.size(); ++i)
    out += "\nmap: " + m.source_generators[i] + " -> " +
           render_word(m.images.at(i), m.target_generators);
  return out;
}

Presentation apply_substitution(const Presentation& p, const SubstitutionMap& m) {
  if (m.images.size() != m.source_generators.size())
    throw InvalidArgument("substitution has " + std::to_string(m.source_generators.size()) +
                          " sources but " + std::to_string(m.images.size()) + " images");
  for (const auto& src : m.source_generators)
    if (!p.index_of(src))
      throw InvalidArgument("substitution maps '" + src +
                            "', which is not a generator of the presentation");
  std::vector<const Word*> image_of(p.arity(), nullptr);
  for (std::size_t g = 0; g < p.arity(); ++g) {
    const auto& name = p.generator_names()[g];
    auto it = std::find(m.source_generators.begin(), m.source_generators.end(), name);
    if (it == m.source_generators.end())
      throw InvalidArgument("substitution has no image for generator '" + name + "'");
    image_of[g] = &m.images[static_cast<std::size_t>(it - m.source_generators.begin())];
  }
  for (const auto& img : m.images)
    if (img.min_arity() > m.target_generators.size())
      throw InvalidArgument("substitution image references an unknown target generator");

  std::vector<Word> relators;
  relators.reserve(p.relators().size());
  for (const Word& r : p.relators()) {
    std::vector<Letter> raw;
    for (Letter l : r) {
      const Word& img = *image_of[l.generator];
      if (l.sign > 0) {
        raw.insert(raw.end(), img.begin(), img.end());
      } else {
        for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
          raw.push_back(it->inverse());
      }
    }
    relators.push_back(free_reduce(raw));
  }
  return Presentation(m.target_generators, std::move(relators));
}

Presentation simplify(const Presentation& p) {
  std::vector<Word> kept;
  std::unordered_set<Word, WordHash> seen;
  for (const Word& r : p.relators()) {
    Word core = cyclic_reduce(r).core;
    if (core.empty()) continue;
    if (seen.contains(core) || seen.contains(invert(core))) continue;
    seen.insert(core);
    kept.push_back(std::move(core));
  }
  return Presentation(p.generator_names(), std::move(kept));
}

}  // namespace hopfcalc
