#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hopfcalc/hopf.hpp"
#include "hopfcalc/presentation.hpp"
#include "hopfcalc/rewrite.hpp"
#include "hopfcalc/words.hpp"

namespace hopfcalc {

/// Cayley table of a finite group; element 0 is the identity.
struct MultTable {
  std::size_t order = 0;
  std::vector<std::uint32_t> product;  // order x order, row-major
  std::vector<std::uint32_t> inverse;
  std::vector<Word> elements;          // shortlex normal forms

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return product[a * order + b]; }
};

/// Table over the irreducible words of a confluent system. Associativity is
/// checked for orders up to 24. Throws InvalidArgument on a non-confluent
/// system and LimitExceeded past `cap` elements.
MultTable multiplication_table(const RewriteSystem& rws, std::size_t cap = 24);

/// H1 and H2 with F_p coefficients from the normalized bar complex.
std::size_t bar_h1(const MultTable& t, std::uint64_t p);
std::size_t bar_h2(const MultTable& t, std::uint64_t p);

struct OracleReport {
  std::string group;
  std::uint64_t prime = 0;
  std::size_t pipeline_h1 = 0;
  std::size_t pipeline_h2 = 0;
  BoundKind pipeline_kind = BoundKind::UpperBound;
  std::size_t oracle_h1 = 0;
  std::size_t oracle_h2 = 0;
  bool pass = false;
  std::string verdict;
};

/// Compares the pipeline against the bar complex. Throws OracleUnavailable
/// when the group has no confluent system, is infinite, or exceeds
/// `max_order`.
OracleReport oracle_check(const Presentation& pres, std::uint64_t p,
                          const HopfOptions& options = {}, std::size_t max_order = 24,
                          std::string group = {});

}  // namespace hopfcalc
