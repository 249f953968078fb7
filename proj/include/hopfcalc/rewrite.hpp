#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopfcalc/presentation.hpp"
#include "hopfcalc/words.hpp"

namespace hopfcalc {

struct Rule {
  Word lhs;
  Word rhs;
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Limits for Knuth-Bendix completion. Exhausting any of them ends completion
/// with a sound but possibly non-confluent system.
struct Budget {
  std::size_t max_rules = 20000;
  std::size_t max_rule_length = 64;
  std::size_t max_steps = 2'000'000;  // critical pairs examined
};

struct CompletionStats {
  std::size_t rules_added = 0;
  std::size_t critical_pairs = 0;
  std::size_t discarded_long = 0;
  bool hit_rule_limit = false;
  bool hit_step_limit = false;
};

namespace detail {

/// Dense trie over rewriting-alphabet codes.
class Trie {
 public:
  explicit Trie(std::size_t alphabet = 0);
  int child(int node, std::uint16_t code) const {
    return next_[static_cast<std::size_t>(node) * alphabet_ + code];
  }
  int rule_at(int node) const { return rule_[static_cast<std::size_t>(node)]; }
  void insert(const std::vector<std::uint16_t>& key, bool reversed, int rule);
  void erase(const std::vector<std::uint16_t>& key, bool reversed);
  /// Rules stored at or below `node`.
  template <typename F>
  void for_each_below(int node, F&& f) const;
  std::size_t nodes() const { return rule_.size(); }

 private:
  int add_node();
  std::size_t alphabet_;
  std::vector<int> next_;
  std::vector<int> rule_;
};

template <typename F>
void Trie::for_each_below(int node, F&& f) const {
  std::vector<int> stack{node};
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    if (rule_[static_cast<std::size_t>(n)] >= 0) f(rule_[static_cast<std::size_t>(n)]);
    const int* kids = next_.data() + static_cast<std::size_t>(n) * alphabet_;
    for (std::size_t c = 0; c < alphabet_; ++c)
      if (kids[c] >= 0) stack.push_back(kids[c]);
  }
}

}  // namespace detail

/// Ordered rewriting rules over the group alphabet g0 < g0^-1 < g1 < ...,
/// compared by shortlex. Always contains the free cancellation rules.
class RewriteSystem {
 public:
  explicit RewriteSystem(std::size_t arity = 0);

  std::size_t arity() const noexcept { return arity_; }
  bool confluent() const noexcept { return confluent_; }
  const CompletionStats& stats() const noexcept { return stats_; }
  /// Active rules sorted by left-hand side, without the free cancellation
  /// rules (their left-hand sides are not reduced words).
  std::vector<Rule> rules() const;
  /// Number of active rules including the free cancellation rules.
  std::size_t rule_count() const noexcept { return active_; }

  /// Irreducible form of w. Throws LimitExceeded past `max_steps` rewrites.
  Word normal_form(const Word& w, std::size_t max_steps = 100'000'000) const;
  bool is_reducible(const Word& w) const;

  /// Adds `lhs -> rhs` after checking the shortlex orientation. Clears the
  /// confluence flag.
  void add_rule(const Word& lhs, const Word& rhs);

  /// `# confluent: true|false` followed by one `lhs -> rhs` line per rule.
  std::string dump(const std::vector<std::string>& names) const;

 private:
  using Codes = std::vector<std::uint16_t>;
  struct Stored {
    Codes lhs;
    Codes rhs;
    bool active = true;
    bool processed = false;
  };

  void reduce_in_place(Codes& w, std::size_t max_steps) const;
  // Rule whose lhs is a suffix of w[0, end), or -1. Skips `ignore`.
  int match_suffix(const Codes& w, std::size_t end, int ignore = -1) const;
  int insert(Codes lhs, Codes rhs);
  void deactivate(int id);
  void rebuild_tries();

  std::size_t arity_ = 0;
  std::vector<Stored> rules_;
  detail::Trie forward_;
  detail::Trie backward_;
  std::size_t max_lhs_ = 0;
  std::size_t active_ = 0;
  bool confluent_ = false;
  CompletionStats stats_;

  friend class Completion;
  friend RewriteSystem initial_rules(const Presentation& p);
  friend std::vector<Word> enumerate_irreducible(const RewriteSystem&, std::size_t, bool&);
};

/// Free cancellation rules plus one rule per relator: a relator of length L
/// is split after ceil(L/2) letters as u*v, giving the equation u = v^-1
/// oriented by shortlex.
RewriteSystem initial_rules(const Presentation& p);

/// Knuth-Bendix completion. The result is interreduced and presents the
/// same group; it is flagged confluent only when every critical pair was
/// resolved without hitting a budget limit or discarding a long rule.
RewriteSystem knuth_bendix(RewriteSystem rws, const Budget& budget = {});

struct Overflow {
  std::size_t cap;
};

/// Irreducible words in shortlex order, or Overflow when more than `cap`
/// exist. Throws InvalidArgument on a non-confluent system.
std::variant<std::vector<Word>, Overflow> enumerate_elements(const RewriteSystem& rws,
                                                             std::size_t cap);

/// Whether a confluent system has infinitely many irreducible words, i.e.
/// presents an infinite group. nullopt for a non-confluent system.
std::optional<bool> presents_infinite_group(const RewriteSystem& rws);

/// Number of elements of a confluent system with at most `cap` elements.
std::optional<std::size_t> group_order(const RewriteSystem& rws, std::size_t cap);

}  // namespace hopfcalc
