#include "hopfcalc/oracle.hpp"

#include <unordered_map>
#include <variant>

#include "hopfcalc/error.hpp"
#include "hopfcalc/fplinalg.hpp"

namespace hopfcalc {
namespace {

// Sparse chain: (basis index, coefficient) pairs.
using Chain = std::vector<std::pair<std::size_t, long long>>;

// Nonidentity elements 1..m map to 0..m-1.
struct Complex {
  const MultTable& t;
  std::size_t m;

  explicit Complex(const MultTable& table) : t(table), m(table.order - 1) {}

  std::size_t idx2(std::uint32_t g, std::uint32_t h) const { return (g - 1) * m + (h - 1); }

  void add1(Chain& c, std::uint32_t g, long long s) const {
    if (g != 0) c.emplace_back(g - 1, s);
  }
  void add2(Chain& c, std::uint32_t g, std::uint32_t h, long long s) const {
    if (g != 0 && h != 0) c.emplace_back(idx2(g, h), s);
  }

  Chain d2(std::uint32_t g, std::uint32_t h) const {
    Chain c;
    add1(c, h, 1);
    add1(c, t.mul(g, h), -1);
    add1(c, g, 1);
    return c;
  }

  Chain d3(std::uint32_t g, std::uint32_t h, std::uint32_t k) const {
    Chain c;
    add2(c, h, k, 1);
    add2(c, t.mul(g, h), k, -1);
    add2(c, g, t.mul(h, k), 1);
    add2(c, g, h, -1);
    return c;
  }
};

VectorFp dense(const Chain& c, std::size_t cols, const PrimeField& f) {
  VectorFp v(cols, 0);
  for (auto [i, s] : c) v[i] = f.add(v[i], f.reduce(s));
  return v;
}

std::size_t rank_d2(const Complex& cx, const PrimeField& f) {
  EchelonBasis basis(f.p(), cx.m);
  for (std::uint32_t g = 1; g <= cx.m && basis.rank() < cx.m; ++g)
    for (std::uint32_t h = 1; h <= cx.m; ++h) basis.add(dense(cx.d2(g, h), cx.m, f));
  return basis.rank();
}

void check_dd_zero(const Complex& cx) {
  for (std::uint32_t g = 1; g <= cx.m; ++g)
    for (std::uint32_t h = 1; h <= cx.m; ++h)
      for (std::uint32_t k = 1; k <= cx.m; ++k) {
        std::unordered_map<std::size_t, long long> sum;
        for (auto [i, s] : cx.d3(g, h, k)) {
          auto a = static_cast<std::uint32_t>(i / cx.m + 1);
          auto b = static_cast<std::uint32_t>(i % cx.m + 1);
          for (auto [j, r] : cx.d2(a, b)) sum[j] += s * r;
        }
        for (auto [j, v] : sum)
          if (v != 0) throw Error("bar complex: d2 o d3 is nonzero");
      }
}

}  // namespace

MultTable multiplication_table(const RewriteSystem& rws, std::size_t cap) {
  auto listed = enumerate_elements(rws, cap);
  if (std::holds_alternative<Overflow>(listed))
    throw LimitExceeded("group has more than " + std::to_string(cap) + " elements");
  MultTable t;
  t.elements = std::get<std::vector<Word>>(std::move(listed));
  t.order = t.elements.size();
  std::unordered_map<Word, std::uint32_t, WordHash> index;
  for (std::size_t i = 0; i < t.order; ++i) index.emplace(t.elements[i], static_cast<std::uint32_t>(i));
  t.product.resize(t.order * t.order);
  t.inverse.resize(t.order);
  for (std::size_t a = 0; a < t.order; ++a)
    for (std::size_t b = 0; b < t.order; ++b) {
      Word w = rws.normal_form(multiply(t.elements[a], t.elements[b]));
      auto it = index.find(w);
      if (it == index.end()) throw Error("product left the enumerated element set");
      t.product[a * t.order + b] = it->second;
      if (it->second == 0) t.inverse[a] = static_cast<std::uint32_t>(b);
    }
  for (std::uint32_t a = 0; a < t.order; ++a)
    if (t.mul(0, a) != a || t.mul(a, 0) != a) throw Error("element 0 is not the identity");
  if (t.order <= 24)
    for (std::uint32_t a = 0; a < t.order; ++a)
      for (std::uint32_t b = 0; b < t.order; ++b)
        for (std::uint32_t c = 0; c < t.order; ++c)
          if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)))
            throw Error("multiplication table is not associative");
  return t;
}

std::size_t bar_h1(const MultTable& t, std::uint64_t p) {
  PrimeField f(p);
  Complex cx(t);
  if (cx.m == 0) return 0;
  return cx.m - rank_d2(cx, f);
}

std::size_t bar_h2(const MultTable& t, std::uint64_t p) {
  PrimeField f(p);
  Complex cx(t);
  if (cx.m == 0) return 0;
  check_dd_zero(cx);
  const std::size_t cols = cx.m * cx.m;
  const std::size_t kernel = cols - rank_d2(cx, f);
  EchelonBasis image(p, cols);
  for (std::uint32_t g = 1; g <= cx.m && image.rank() < kernel; ++g)
    for (std::uint32_t h = 1; h <= cx.m && image.rank() < kernel; ++h)
      for (std::uint32_t k = 1; k <= cx.m && image.rank() < kernel; ++k)
        image.add(dense(cx.d3(g, h, k), cols, f));
  return kernel - image.rank();
}

OracleReport oracle_check(const Presentation& pres, std::uint64_t p, const HopfOptions& options,
                          std::size_t max_order, std::string group) {
  PrimeField f(p);
  RewriteSystem rws = knuth_bendix(initial_rules(pres), options.budget);
  if (!rws.confluent()) throw OracleUnavailable("no confluent rewriting system within budget");
  if (presents_infinite_group(rws).value_or(false)) throw OracleUnavailable("infinite group");
  MultTable t;
  try {
    t = multiplication_table(rws, max_order);
  } catch (const LimitExceeded&) {
    throw OracleUnavailable("group order exceeds the oracle cap " + std::to_string(max_order));
  }

  OracleReport r;
  r.group = std::move(group);
  r.prime = p;
  HopfResult h = compute_hopf(pres, p, options);
  r.pipeline_h1 = h.h1_dim;
  r.pipeline_h2 = h.h2_value;
  r.pipeline_kind = h.h2_kind;
  r.oracle_h1 = bar_h1(t, p);
  r.oracle_h2 = bar_h2(t, p);
  if (r.pipeline_h1 != r.oracle_h1) {
    r.verdict = "FAIL: h1 differs";
  } else if (r.pipeline_kind == BoundKind::Exact && r.pipeline_h2 != r.oracle_h2) {
    r.verdict = "FAIL: exact h2 differs";
  } else if (r.pipeline_h2 < r.oracle_h2) {
    r.verdict = "FAIL: h2 bound below the true value";
  } else {
    r.pass = true;
    r.verdict = "pass";
  }
  return r;
}

}  // namespace hopfcalc
