#include "hopfcalc/rewrite.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

#include "hopfcalc/error.hpp"

namespace hopfcalc {

namespace detail {

Trie::Trie(std::size_t alphabet) : alphabet_(alphabet) { add_node(); }

int Trie::add_node() {
  next_.resize(next_.size() + alphabet_, -1);
  rule_.push_back(-1);
  return static_cast<int>(rule_.size() - 1);
}

void Trie::insert(const std::vector<std::uint16_t>& key, bool reversed, int rule) {
  int node = 0;
  for (std::size_t i = 0; i < key.size(); ++i) {
    std::uint16_t c = reversed ? key[key.size() - 1 - i] : key[i];
    int nxt = child(node, c);
    if (nxt < 0) {
      nxt = add_node();
      next_[static_cast<std::size_t>(node) * alphabet_ + c] = nxt;
    }
    node = nxt;
  }
  rule_[static_cast<std::size_t>(node)] = rule;
}

void Trie::erase(const std::vector<std::uint16_t>& key, bool reversed) {
  int node = 0;
  for (std::size_t i = 0; i < key.size() && node >= 0; ++i)
    node = child(node, reversed ? key[key.size() - 1 - i] : key[i]);
  if (node >= 0) rule_[static_cast<std::size_t>(node)] = -1;
}

}  // namespace detail

namespace {

using Codes = std::vector<std::uint16_t>;

Codes to_codes(const Word& w) {
  Codes c;
  c.reserve(w.size());
  for (Letter l : w) c.push_back(static_cast<std::uint16_t>(l.code()));
  return c;
}

Word from_codes(const Codes& c) {
  std::vector<Letter> letters;
  letters.reserve(c.size());
  for (auto x : c) letters.push_back(Letter::from_code(x));
  return Word(letters);
}

bool is_cancellation(const Codes& c) { return c.size() == 2 && (c[0] ^ 1u) == c[1]; }

Codes inverse_codes(const Codes& c) {
  Codes out(c.rbegin(), c.rend());
  for (auto& x : out) x ^= 1u;
  return out;
}

bool shortlex_less(const Codes& a, const Codes& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

RewriteSystem::RewriteSystem(std::size_t arity)
    : arity_(arity), forward_(2 * arity), backward_(2 * arity) {
  if (2 * arity > 65535) throw InvalidArgument("too many generators for rewriting");
  for (std::size_t g = 0; g < arity; ++g) {
    auto a = static_cast<std::uint16_t>(2 * g), b = static_cast<std::uint16_t>(2 * g + 1);
    insert({a, b}, {});
    insert({b, a}, {});
  }
  confluent_ = true;
}

int RewriteSystem::insert(Codes lhs, Codes rhs) {
  int id = static_cast<int>(rules_.size());
  forward_.insert(lhs, false, id);
  backward_.insert(lhs, true, id);
  max_lhs_ = std::max(max_lhs_, lhs.size());
  rules_.push_back({std::move(lhs), std::move(rhs), true, false});
  ++active_;
  return id;
}

void RewriteSystem::deactivate(int id) {
  auto& r = rules_[static_cast<std::size_t>(id)];
  if (!r.active) return;
  r.active = false;
  forward_.erase(r.lhs, false);
  backward_.erase(r.lhs, true);
  --active_;
}

void RewriteSystem::rebuild_tries() {
  std::vector<Stored> kept;
  kept.reserve(active_);
  for (auto& r : rules_)
    if (r.active) kept.push_back(std::move(r));
  rules_ = std::move(kept);
  forward_ = detail::Trie(2 * arity_);
  backward_ = detail::Trie(2 * arity_);
  max_lhs_ = 0;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    forward_.insert(rules_[i].lhs, false, static_cast<int>(i));
    backward_.insert(rules_[i].lhs, true, static_cast<int>(i));
    max_lhs_ = std::max(max_lhs_, rules_[i].lhs.size());
  }
}

int RewriteSystem::match_suffix(const Codes& w, std::size_t end, int ignore) const {
  int node = 0;
  std::size_t limit = std::min(end, max_lhs_);
  for (std::size_t k = 1; k <= limit; ++k) {
    node = backward_.child(node, w[end - k]);
    if (node < 0) return -1;
    int r = backward_.rule_at(node);
    if (r >= 0 && r != ignore) return r;
  }
  return -1;
}

void RewriteSystem::reduce_in_place(Codes& w, std::size_t max_steps) const {
  Codes pending(w.rbegin(), w.rend());
  w.clear();
  std::size_t steps = 0;
  while (!pending.empty()) {
    w.push_back(pending.back());
    pending.pop_back();
    int r = match_suffix(w, w.size());
    if (r < 0) continue;
    if (++steps > max_steps) throw LimitExceeded("normal form exceeded the rewrite step limit");
    const auto& rule = rules_[static_cast<std::size_t>(r)];
    w.resize(w.size() - rule.lhs.size());
    pending.insert(pending.end(), rule.rhs.rbegin(), rule.rhs.rend());
  }
}

Word RewriteSystem::normal_form(const Word& w, std::size_t max_steps) const {
  if (w.min_arity() > arity_) throw InvalidArgument("word exceeds the system's arity");
  Codes c = to_codes(w);
  reduce_in_place(c, max_steps);
  return from_codes(c);
}

bool RewriteSystem::is_reducible(const Word& w) const {
  Codes c = to_codes(w);
  for (std::size_t end = 1; end <= c.size(); ++end)
    if (match_suffix(c, end) >= 0) return true;
  return false;
}

std::vector<Rule> RewriteSystem::rules() const {
  std::vector<Rule> out;
  for (const auto& r : rules_)
    if (r.active && !is_cancellation(r.lhs)) out.push_back({from_codes(r.lhs), from_codes(r.rhs)});
  std::sort(out.begin(), out.end(), [](const Rule& a, const Rule& b) { return a.lhs < b.lhs; });
  return out;
}

void RewriteSystem::add_rule(const Word& lhs, const Word& rhs) {
  if (lhs.empty() || !(rhs < lhs))
    throw InvalidArgument("rule must decrease shortlex weight");
  if (std::max(lhs.min_arity(), rhs.min_arity()) > arity_)
    throw InvalidArgument("rule exceeds the system's arity");
  insert(to_codes(lhs), to_codes(rhs));
  confluent_ = false;
}

std::string RewriteSystem::dump(const std::vector<std::string>& names) const {
  std::string out = std::string("# confluent: ") + (confluent_ ? "true" : "false") + "\n";
  for (const auto& r : rules())
    out += render_word(r.lhs, names) + " -> " + render_word(r.rhs, names) + "\n";
  return out;
}

RewriteSystem initial_rules(const Presentation& p) {
  RewriteSystem rws(p.arity());
  for (const Word& r : p.relators()) {
    if (r.empty()) continue;
    Codes w = to_codes(r);
    std::size_t k = (w.size() + 1) / 2;
    Codes u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    Codes v = inverse_codes(Codes(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
    rws.reduce_in_place(u, SIZE_MAX);
    rws.reduce_in_place(v, SIZE_MAX);
    if (u == v) continue;
    if (shortlex_less(u, v)) std::swap(u, v);
    rws.insert(std::move(u), std::move(v));
    rws.confluent_ = false;
  }
  return rws;
}

/// Single-owner completion state over a RewriteSystem.
class Completion {
 public:
  Completion(RewriteSystem& rws, const Budget& budget) : s_(rws), budget_(budget) {}

  void run() {
    auto& st = s_.stats_;
    for (std::size_t i = 0; i < s_.rules_.size(); ++i)
      if (s_.rules_[i].active && !s_.rules_[i].processed) enqueue(static_cast<int>(i));
    tidy();
    std::size_t since_tidy = 0;
    while (!stopped()) {
      int id = next_unprocessed();
      if (id < 0) {
        // Nothing left to overlap; a final tidy may surface new equations.
        if (!tidy()) break;
        continue;
      }
      process(id);
      if (st.rules_added - last_tidy_rules_ > std::max<std::size_t>(64, s_.active_ / 4) ||
          ++since_tidy > 256) {
        tidy();
        since_tidy = 0;
      }
    }
    tidy();
    s_.confluent_ = !stopped() && st.discarded_long == 0 && next_unprocessed() < 0;
    s_.rebuild_tries();
  }

 private:
  using Codes = RewriteSystem::Codes;
  using Key = std::tuple<std::size_t, int>;

  bool stopped() const { return s_.stats_.hit_rule_limit || s_.stats_.hit_step_limit; }

  void enqueue(int id) {
    queue_.push({s_.rules_[static_cast<std::size_t>(id)].lhs.size(), id});
  }

  int next_unprocessed() {
    while (!queue_.empty()) {
      auto [len, id] = queue_.top();
      const auto& r = s_.rules_[static_cast<std::size_t>(id)];
      if (r.active && !r.processed) return id;
      queue_.pop();
    }
    return -1;
  }

  // Reduces both sides and records a rule when they differ.
  void add_equation(Codes a, Codes b) {
    s_.reduce_in_place(a, SIZE_MAX);
    s_.reduce_in_place(b, SIZE_MAX);
    if (a == b) return;
    if (shortlex_less(a, b)) std::swap(a, b);
    if (a.size() > budget_.max_rule_length) {
      ++s_.stats_.discarded_long;
      return;
    }
    int id = s_.insert(std::move(a), std::move(b));
    ++s_.stats_.rules_added;
    enqueue(id);
    if (s_.active_ > budget_.max_rules) s_.stats_.hit_rule_limit = true;
  }

  struct Pair {
    std::size_t length;
    int left, right;
    std::size_t overlap;
  };

  void process(int id) {
    queue_.pop();
    auto& st = s_.stats_;
    s_.rules_[static_cast<std::size_t>(id)].processed = true;
    const Codes u = s_.rules_[static_cast<std::size_t>(id)].lhs;
    std::vector<Pair> pairs;
    // Suffix of u overlapping a prefix of another lhs.
    for (std::size_t i = 1; i < u.size(); ++i) {
      int node = 0;
      for (std::size_t j = i; j < u.size() && node >= 0; ++j) node = s_.forward_.child(node, u[j]);
      if (node < 0) continue;
      std::size_t k = u.size() - i;
      s_.forward_.for_each_below(node, [&](int other) {
        const auto& r = s_.rules_[static_cast<std::size_t>(other)];
        if (r.processed && r.lhs.size() > k) pairs.push_back({u.size() + r.lhs.size() - k, id, other, k});
      });
    }
    // Suffix of another lhs overlapping a prefix of u.
    for (std::size_t k = 1; k < u.size(); ++k) {
      int node = 0;
      for (std::size_t j = k; j-- > 0 && node >= 0;) node = s_.backward_.child(node, u[j]);
      if (node < 0) continue;
      s_.backward_.for_each_below(node, [&](int other) {
        const auto& r = s_.rules_[static_cast<std::size_t>(other)];
        if (other != id && r.processed && r.lhs.size() > k)
          pairs.push_back({u.size() + r.lhs.size() - k, other, id, k});
      });
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& a, const Pair& b) { return a.length < b.length; });
    for (const Pair& pr : pairs) {
      if (++st.critical_pairs > budget_.max_steps) {
        st.hit_step_limit = true;
        return;
      }
      const auto& l = s_.rules_[static_cast<std::size_t>(pr.left)];
      const auto& r = s_.rules_[static_cast<std::size_t>(pr.right)];
      if (!l.active || !r.active) continue;
      // l.lhs = x.o, r.lhs = o.y ; word x.o.y
      Codes a = l.rhs;
      a.insert(a.end(), r.lhs.begin() + static_cast<std::ptrdiff_t>(pr.overlap), r.lhs.end());
      Codes b(l.lhs.begin(), l.lhs.end() - static_cast<std::ptrdiff_t>(pr.overlap));
      b.insert(b.end(), r.rhs.begin(), r.rhs.end());
      add_equation(std::move(a), std::move(b));
      if (stopped()) return;
    }
  }

  // Removes rules with reducible lhs (re-adding them as equations) and
  // normalises right-hand sides. Returns true when anything changed.
  bool tidy() {
    last_tidy_rules_ = s_.stats_.rules_added;
    bool changed = false;
    for (;;) {
      std::vector<std::pair<Codes, Codes>> evicted;
      for (std::size_t i = 0; i < s_.rules_.size(); ++i) {
        auto& r = s_.rules_[i];
        if (!r.active) continue;
        bool reducible = false;
        for (std::size_t end = 1; end <= r.lhs.size() && !reducible; ++end)
          reducible = s_.match_suffix(r.lhs, end, static_cast<int>(i)) >= 0;
        if (reducible) {
          evicted.emplace_back(r.lhs, r.rhs);
          s_.deactivate(static_cast<int>(i));
        }
      }
      for (auto& r : s_.rules_)
        if (r.active) s_.reduce_in_place(r.rhs, SIZE_MAX);
      if (evicted.empty()) break;
      changed = true;
      for (auto& [a, b] : evicted) add_equation(std::move(a), std::move(b));
      if (stopped()) break;
    }
    if (s_.rules_.size() > 2 * s_.active_ + 1024) {
      s_.rebuild_tries();
      rebuild_queue();
    }
    return changed;
  }

  void rebuild_queue() {
    queue_ = {};
    for (std::size_t i = 0; i < s_.rules_.size(); ++i)
      if (s_.rules_[i].active && !s_.rules_[i].processed) enqueue(static_cast<int>(i));
  }

  RewriteSystem& s_;
  Budget budget_;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue_;
  std::size_t last_tidy_rules_ = 0;
};

RewriteSystem knuth_bendix(RewriteSystem rws, const Budget& budget) {
  if (budget.max_rules == 0 || budget.max_rule_length == 0 || budget.max_steps == 0)
    throw InvalidArgument("budget limits must be positive");
  if (rws.confluent()) return rws;
  Completion(rws, budget).run();
  return rws;
}

std::vector<Word> enumerate_irreducible(const RewriteSystem& rws, std::size_t cap, bool& overflow) {
  overflow = false;
  std::vector<Codes> level{Codes{}};
  std::vector<Word> out{Word{}};
  const std::size_t alphabet = 2 * rws.arity();
  while (!level.empty()) {
    std::vector<Codes> next;
    for (const Codes& w : level) {
      for (std::size_t c = 0; c < alphabet; ++c) {
        Codes x = w;
        x.push_back(static_cast<std::uint16_t>(c));
        if (rws.match_suffix(x, x.size()) >= 0) continue;
        if (out.size() >= cap) {
          overflow = true;
          return out;
        }
        out.push_back(from_codes(x));
        next.push_back(std::move(x));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::variant<std::vector<Word>, Overflow> enumerate_elements(const RewriteSystem& rws,
                                                             std::size_t cap) {
  if (!rws.confluent())
    throw InvalidArgument("element enumeration needs a confluent rewriting system");
  bool overflow = false;
  auto words = enumerate_irreducible(rws, cap, overflow);
  if (overflow) return Overflow{cap};
  return words;
}

std::optional<std::size_t> group_order(const RewriteSystem& rws, std::size_t cap) {
  if (!rws.confluent()) return std::nullopt;
  bool overflow = false;
  auto words = enumerate_irreducible(rws, cap, overflow);
  if (overflow) return std::nullopt;
  return words.size();
}

std::optional<bool> presents_infinite_group(const RewriteSystem& rws) {
  if (!rws.confluent()) return std::nullopt;
  const std::size_t alphabet = 2 * rws.arity();
  if (alphabet == 0) return false;
  // Aho-Corasick automaton over the left-hand sides; irreducible words are
  // the paths avoiding terminal states, so the group is infinite iff such a
  // path contains a cycle.
  std::vector<std::vector<int>> next(1, std::vector<int>(alphabet, -1));
  std::vector<bool> terminal(1, false);
  auto add_key = [&](const std::vector<std::uint32_t>& key) {
    int node = 0;
    for (std::uint32_t c : key) {
      if (next[static_cast<std::size_t>(node)][c] < 0) {
        next[static_cast<std::size_t>(node)][c] = static_cast<int>(next.size());
        next.emplace_back(alphabet, -1);
        terminal.push_back(false);
      }
      node = next[static_cast<std::size_t>(node)][c];
    }
    terminal[static_cast<std::size_t>(node)] = true;
  };
  for (std::uint32_t c = 0; c < alphabet; ++c) add_key({c, c ^ 1u});
  for (const Rule& r : rws.rules()) {
    std::vector<std::uint32_t> key;
    for (Letter l : r.lhs) key.push_back(l.code());
    add_key(key);
  }
  std::vector<int> fail(next.size(), 0);
  std::queue<int> bfs;
  for (std::size_t c = 0; c < alphabet; ++c) {
    int& child = next[0][c];
    if (child < 0) {
      child = 0;
    } else {
      bfs.push(child);
    }
  }
  while (!bfs.empty()) {
    auto u = static_cast<std::size_t>(bfs.front());
    bfs.pop();
    if (terminal[static_cast<std::size_t>(fail[u])]) terminal[u] = true;
    for (std::size_t c = 0; c < alphabet; ++c) {
      int& child = next[u][c];
      int via_fail = next[static_cast<std::size_t>(fail[u])][c];
      if (child < 0) {
        child = via_fail;
      } else {
        fail[static_cast<std::size_t>(child)] = via_fail;
        bfs.push(child);
      }
    }
  }
  // Iterative DFS cycle search over non-terminal states.
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(next.size(), kWhite);
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  colour[0] = kGrey;
  while (!stack.empty()) {
    auto& [u, c] = stack.back();
    if (c == alphabet) {
      colour[static_cast<std::size_t>(u)] = kBlack;
      stack.pop_back();
      continue;
    }
    int v = next[static_cast<std::size_t>(u)][c++];
    if (terminal[static_cast<std::size_t>(v)]) continue;
    if (colour[static_cast<std::size_t>(v)] == kGrey) return true;
    if (colour[static_cast<std::size_t>(v)] == kWhite) {
      colour[static_cast<std::size_t>(v)] = kGrey;
      stack.emplace_back(v, 0);
    }
  }
  return false;
}

}  // namespace hopfcalc
