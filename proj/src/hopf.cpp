#include "hopfcalc/hopf.hpp"

#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "hopfcalc/error.hpp"

namespace hopfcalc {
namespace {

std::vector<long long> exponents_mod(const Word& w, std::size_t n, const PrimeField& f) {
  auto v = exponent_vector(w, n);
  for (auto& x : v) x = static_cast<long long>(f.reduce(x));
  return v;
}

struct OrderData {
  RewriteSystem base;
  RewriteSystem cover;
  std::optional<std::size_t> order_G;
  std::optional<std::size_t> order_Q;
};

OrderData complete_both(const Presentation& pres, std::uint64_t p, const HopfOptions& options) {
  OrderData d;
  d.base = knuth_bendix(initial_rules(pres), options.budget);
  d.cover = knuth_bendix(initial_rules(build_p_cover(pres, p)), options.budget);
  d.order_G = group_order(d.base, options.order_cap);
  if (d.order_G) d.order_Q = group_order(d.cover, options.order_cap);
  return d;
}

std::optional<std::size_t> order_method(const OrderData& d, std::uint64_t p) {
  if (!d.order_G || !d.order_Q) return std::nullopt;
  if (*d.order_Q % *d.order_G != 0)
    throw Error("p-cover order " + std::to_string(*d.order_Q) +
                " is not a multiple of the group order " + std::to_string(*d.order_G));
  std::size_t ratio = *d.order_Q / *d.order_G;
  std::size_t dim = 0;
  while (ratio % p == 0) {
    ratio /= p;
    ++dim;
  }
  if (ratio != 1)
    throw Error("p-cover index " + std::to_string(*d.order_Q / *d.order_G) +
                " is not a power of " + std::to_string(p));
  return dim;
}

// NF(rel^e) for e in 1..p-1, computed on demand.
class PowerTable {
 public:
  PowerTable(const RewriteSystem& cover, const std::vector<Word>& relators, std::uint64_t p)
      : cover_(cover), relators_(relators), p_(p), cache_(relators.size()) {}

  const Word& at(std::size_t i, std::uint64_t e) {
    auto& row = cache_[i];
    if (row.empty()) {
      row.reserve(p_ - 1);
      Word acc;
      for (std::uint64_t k = 1; k < p_; ++k) {
        acc = cover_.normal_form(multiply(acc, relators_[i]));
        row.push_back(acc);
      }
    }
    return row[e - 1];
  }

 private:
  const RewriteSystem& cover_;
  const std::vector<Word>& relators_;
  std::uint64_t p_;
  std::vector<std::vector<Word>> cache_;
};

// Exact elimination inside a finite confluent cover: enumerates the span of
// the kept members and removes every relator already in it.
void eliminate_exact(BasisResult& res, PowerTable& powers, std::uint64_t p, std::size_t cap) {
  using Exps = std::vector<std::uint64_t>;
  std::unordered_map<Word, Exps, WordHash> span{{Word{}, Exps{}}};
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < res.relators.size(); ++i) {
    Word x = res.cover.normal_form(res.relators[i]);
    if (auto it = span.find(x); it != span.end()) {
      Certificate cert{i, {}};
      for (std::size_t k = 0; k < it->second.size(); ++k)
        if (it->second[k] != 0) cert.factors.emplace_back(kept[k], it->second[k]);
      res.certificates.push_back(std::move(cert));
      continue;
    }
    kept.push_back(i);
    std::unordered_map<Word, Exps, WordHash> grown;
    grown.reserve(span.size() * p);
    for (const auto& [w, exps] : span) {
      Exps e0 = exps;
      e0.push_back(0);
      grown.emplace(w, e0);
      for (std::uint64_t e = 1; e < p; ++e) {
        Exps ee = exps;
        ee.push_back(e);
        grown.emplace(res.cover.normal_form(multiply(w, powers.at(i, e))), std::move(ee));
      }
    }
    if (grown.size() > cap) throw LimitExceeded("span of relator images exceeds the order cap");
    span = std::move(grown);
  }
  res.kept = std::move(kept);
}

// Sound elimination in a possibly non-confluent cover: a relator is removed
// when its normal form matches a product of at most two other live members.
void eliminate_pairs(BasisResult& res, PowerTable& powers, std::uint64_t p) {
  const std::size_t n = res.relators.size();
  std::vector<bool> alive(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    std::unordered_map<Word, std::pair<std::size_t, std::uint64_t>, WordHash> lookup;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !alive[j]) continue;
      for (std::uint64_t e = 1; e < p; ++e) lookup.emplace(powers.at(j, e), std::make_pair(j, e));
    }
    Word x0 = res.cover.normal_form(res.relators[i]);
    std::optional<Certificate> cert;
    if (x0.empty()) {
      cert = Certificate{i, {}};
    } else if (auto it = lookup.find(x0); it != lookup.end()) {
      cert = Certificate{i, {it->second}};
    } else {
      for (std::size_t j = 0; j < n && !cert; ++j) {
        if (j == i || !alive[j]) continue;
        for (std::uint64_t e = 1; e < p && !cert; ++e) {
          Word x1 = res.cover.normal_form(multiply(x0, invert(powers.at(j, e))));
          if (auto it = lookup.find(x1); it != lookup.end())
            cert = Certificate{i, {{j, e}, it->second}};
        }
      }
    }
    if (cert) {
      alive[i] = false;
      res.certificates.push_back(std::move(*cert));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) res.kept.push_back(i);
}

}  // namespace

std::string to_string(BoundKind kind) {
  return kind == BoundKind::Exact ? "exact" : "upper_bound";
}

std::size_t h1_dimension(const Presentation& pres, std::uint64_t p) {
  PrimeField f(p);
  const std::size_t n = pres.arity();
  std::vector<std::vector<long long>> rows;
  for (const Word& r : pres.relators()) rows.push_back(exponents_mod(r, n, f));
  return n - rank(MatrixFp::from_rows(p, n, rows));
}

Presentation build_p_cover(const Presentation& pres, std::uint64_t p) {
  PrimeField f(p);
  std::vector<Word> rels;
  for (const Word& r : pres.relators()) rels.push_back(power(r, static_cast<long long>(p)));
  for (const Word& r : pres.relators())
    for (std::uint32_t s = 0; s < pres.arity(); ++s) rels.push_back(commutator(r, Word{gen(s)}));
  return simplify(Presentation(pres.generator_names(), std::move(rels)));
}

std::optional<std::size_t> dim_A_exact_finite(const Presentation& pres, std::uint64_t p,
                                              const HopfOptions& options) {
  PrimeField f(p);
  if (pres.relators().empty()) return 0;
  return order_method(complete_both(pres, p, options), p);
}

std::vector<Word> BasisResult::spanning_set() const {
  std::vector<Word> out;
  for (std::size_t i : kept) out.push_back(relators[i]);
  return out;
}

BasisResult find_basis(const Presentation& pres, std::uint64_t p, const HopfOptions& options) {
  PrimeField f(p);
  BasisResult res;
  res.relators = pres.relators();
  OrderData d = complete_both(pres, p, options);
  res.confluent_base = d.base.confluent();
  res.confluent_cover = d.cover.confluent();
  res.base_stats = d.base.stats();
  res.cover_stats = d.cover.stats();
  res.cover = std::move(d.cover);

  std::size_t nontrivial = 0;
  for (const Word& r : res.relators) nontrivial += r.empty() ? 0 : 1;
  if (nontrivial == 0) {
    res.dim_A = 0;
  } else if (nontrivial == 1) {
    // A one-relator group has K/[F,K] infinite cyclic.
    res.dim_A = 1;
  } else {
    res.dim_A = order_method(d, p);
  }

  PowerTable powers(res.cover, res.relators, p);
  if (res.confluent_cover && d.order_Q)
    eliminate_exact(res, powers, p, options.order_cap);
  else
    eliminate_pairs(res, powers, p);

  const std::size_t size = res.kept.size();
  if (!res.dim_A && rank(image_matrix(res.spanning_set(), pres.arity(), p)) == size)
    res.dim_A = size;  // images independent, so S_K is a basis of A
  if (res.dim_A && *res.dim_A > size)
    throw Error("spanning set smaller than the certified dimension of A");
  res.kind = res.dim_A && *res.dim_A == size ? BoundKind::Exact : BoundKind::UpperBound;
  return res;
}

bool verify_certificate(const RewriteSystem& cover, const std::vector<Word>& relators,
                        const Certificate& cert, std::uint64_t p) {
  if (cert.removed >= relators.size()) return false;
  Word x = cover.normal_form(relators[cert.removed]);
  for (auto [j, e] : cert.factors) {
    if (j >= relators.size() || j == cert.removed || e == 0 || e >= p) return false;
    Word acc;
    for (std::uint64_t k = 0; k < e; ++k) acc = cover.normal_form(multiply(acc, relators[j]));
    x = cover.normal_form(multiply(x, invert(acc)));
  }
  return x.empty();
}

MatrixFp image_matrix(const std::vector<Word>& words, std::size_t n, std::uint64_t p) {
  PrimeField f(p);
  std::vector<std::vector<long long>> rows;
  rows.reserve(words.size());
  for (const Word& w : words) rows.push_back(exponents_mod(w, n, f));
  return MatrixFp::from_rows(p, n, rows);
}

HopfResult compute_hopf(const Presentation& pres, std::uint64_t p, const HopfOptions& options,
                        std::string group) {
  HopfResult r;
  r.group = std::move(group);
  r.prime = p;
  r.generator_names = pres.generator_names();
  r.n_generators = pres.arity();
  r.h1_dim = h1_dimension(pres, p);

  BasisResult basis = find_basis(pres, p, options);
  r.spanning_set = basis.spanning_set();
  MatrixFp m = image_matrix(r.spanning_set, r.n_generators, p);
  r.rank_image = rank(m);
  if (r.rank_image != r.n_generators - r.h1_dim)
    throw Error("spanning set does not span the relator image");
  r.dim_A = r.spanning_set.size();
  r.dim_A_kind = basis.kind;
  r.h2_value = r.dim_A - r.rank_image;
  r.h2_kind = basis.kind;
  r.confluent_base = basis.confluent_base;
  r.confluent_cover = basis.confluent_cover;

  for (VectorFp& c : left_kernel_basis(m)) {
    std::vector<Letter> raw;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      Word part = power(r.spanning_set[i], static_cast<long long>(c[i]));
      raw.insert(raw.end(), part.begin(), part.end());
    }
    r.candidates.push_back({std::move(c), free_reduce(raw)});
  }

  BudgetReport& b = r.budget;
  b.budget = options.budget;
  b.order_cap = options.order_cap;
  b.base_rules_added = basis.base_stats.rules_added;
  b.base_critical_pairs = basis.base_stats.critical_pairs;
  b.cover_rules_added = basis.cover_stats.rules_added;
  b.cover_critical_pairs = basis.cover_stats.critical_pairs;
  b.cover_discarded_long = basis.cover_stats.discarded_long;
  b.cover_rules = basis.cover.rule_count();
  b.initial_spanning_set = basis.relators.size();
  b.certificates = basis.certificates.size();
  return r;
}

std::pair<std::size_t, BoundKind> h2_dimension(const Presentation& pres, std::uint64_t p,
                                               const HopfOptions& options) {
  HopfResult r = compute_hopf(pres, p, options);
  return {r.h2_value, r.h2_kind};
}

std::vector<Candidate> h2_generator_candidates(const Presentation& pres, std::uint64_t p,
                                               const HopfOptions& options) {
  return compute_hopf(pres, p, options).candidates;
}

std::string to_json(const HopfResult& r, int indent) {
  using json = nlohmann::ordered_json;
  json j;
  j["group"] = r.group;
  j["prime"] = r.prime;
  j["n_generators"] = r.n_generators;
  j["h1_dim"] = r.h1_dim;
  j["dim_A"] = r.dim_A;
  j["dim_A_kind"] = to_string(r.dim_A_kind);
  j["rank_image"] = r.rank_image;
  j["h2_value"] = r.h2_value;
  j["h2_kind"] = to_string(r.h2_kind);
  j["confluent_base"] = r.confluent_base;
  j["confluent_cover"] = r.confluent_cover;
  j["spanning_set"] = json::array();
  for (const Word& w : r.spanning_set) j["spanning_set"].push_back(render_word(w, r.generator_names));
  j["candidates"] = json::array();
  for (const Candidate& c : r.candidates)
    j["candidates"].push_back({{"coeffs", c.coeffs}, {"word", render_word(c.word, r.generator_names)}});
  const BudgetReport& b = r.budget;
  j["budget"] = {{"max_rules", b.budget.max_rules},
                 {"max_rule_length", b.budget.max_rule_length},
                 {"max_steps", b.budget.max_steps},
                 {"order_cap", b.order_cap},
                 {"base_rules_added", b.base_rules_added},
                 {"base_critical_pairs", b.base_critical_pairs},
                 {"cover_rules_added", b.cover_rules_added},
                 {"cover_critical_pairs", b.cover_critical_pairs},
                 {"cover_discarded_long", b.cover_discarded_long},
                 {"cover_rules", b.cover_rules},
                 {"initial_spanning_set", b.initial_spanning_set},
                 {"certificates", b.certificates}};
  return j.dump(indent);
}

}  // namespace hopfcalc
