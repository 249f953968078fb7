#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcalc/fplinalg.hpp"
#include "hopfcalc/presentation.hpp"
#include "hopfcalc/rewrite.hpp"
#include "hopfcalc/words.hpp"

namespace hopfcalc {

enum class BoundKind { Exact, UpperBound };

std::string to_string(BoundKind kind);

struct HopfOptions {
  Budget budget;
  /// Largest group order enumerated by the order method (applies to both the
  /// group and its p-cover).
  std::size_t order_cap = 100'000;
};

/// dim H1(G;F_p) = n - rank of the relator exponent matrix mod p.
std::size_t h1_dimension(const Presentation& pres, std::uint64_t p);

/// F / R^p [F,R]: relators r^p and [r,s] for every relator r and generator s,
/// simplified.
Presentation build_p_cover(const Presentation& pres, std::uint64_t p);

/// log_p(|Q| / |G|) when both the group and its p-cover complete to finite
/// confluent systems within the cap; nullopt otherwise.
std::optional<std::size_t> dim_A_exact_finite(const Presentation& pres, std::uint64_t p,
                                              const HopfOptions& options = {});

/// Proof that spanning-set member `removed` equals the product of
/// `factors` (member index, exponent in 1..p-1) in the p-cover.
struct Certificate {
  std::size_t removed = 0;
  std::vector<std::pair<std::size_t, std::uint64_t>> factors;
};

struct BasisResult {
  std::vector<Word> relators;     // initial spanning set, in relator order
  std::vector<std::size_t> kept;  // indices into `relators` of S_K
  std::vector<Certificate> certificates;
  std::optional<std::size_t> dim_A;  // certified dimension of A
  BoundKind kind = BoundKind::UpperBound;
  bool confluent_base = false;
  bool confluent_cover = false;
  CompletionStats base_stats;
  CompletionStats cover_stats;
  RewriteSystem cover;

  std::vector<Word> spanning_set() const;
};

/// Reduces the relator list to a smaller spanning set S_K of
/// A = K / K^p[F,K]. Every removal carries a certificate checked against
/// normal forms of the p-cover, so S_K spans A even when the cover's
/// rewriting system is not confluent.
BasisResult find_basis(const Presentation& pres, std::uint64_t p, const HopfOptions& options = {});

/// Replays a certificate: NF(rho), then multiplication by the inverse of
/// NF(mu^e) for each factor, must end at the identity.
bool verify_certificate(const RewriteSystem& cover, const std::vector<Word>& relators,
                        const Certificate& cert, std::uint64_t p);

/// Rows are exponent vectors mod p.
MatrixFp image_matrix(const std::vector<Word>& words, std::size_t n, std::uint64_t p);

struct Candidate {
  VectorFp coeffs;  // over S_K
  Word word;        // product of S_K members raised to coeffs, in S_K order
};

struct BudgetReport {
  Budget budget;
  std::size_t order_cap = 0;
  std::size_t base_rules_added = 0;
  std::size_t base_critical_pairs = 0;
  std::size_t cover_rules_added = 0;
  std::size_t cover_critical_pairs = 0;
  std::size_t cover_discarded_long = 0;
  std::size_t cover_rules = 0;
  std::size_t initial_spanning_set = 0;
  std::size_t certificates = 0;
};

struct HopfResult {
  std::string group;
  std::uint64_t prime = 0;
  std::vector<std::string> generator_names;
  std::size_t n_generators = 0;
  std::size_t h1_dim = 0;
  std::size_t dim_A = 0;
  BoundKind dim_A_kind = BoundKind::UpperBound;
  std::size_t rank_image = 0;
  std::size_t h2_value = 0;
  BoundKind h2_kind = BoundKind::UpperBound;
  bool confluent_base = false;
  bool confluent_cover = false;
  std::vector<Word> spanning_set;
  std::vector<Candidate> candidates;
  BudgetReport budget;
};

/// Full pipeline for one presentation and prime.
HopfResult compute_hopf(const Presentation& pres, std::uint64_t p, const HopfOptions& options = {},
                        std::string group = {});

/// (value, kind) of dim H2(G;F_p).
std::pair<std::size_t, BoundKind> h2_dimension(const Presentation& pres, std::uint64_t p,
                                               const HopfOptions& options = {});

std::vector<Candidate> h2_generator_candidates(const Presentation& pres, std::uint64_t p,
                                               const HopfOptions& options = {});

/// JSON object with the documented result fields.
std::string to_json(const HopfResult& r, int indent = -1);

}  // namespace hopfcalc
