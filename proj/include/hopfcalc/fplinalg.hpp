#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hopfcalc {

using Residue = std::uint64_t;
using VectorFp = std::vector<Residue>;

bool is_prime(std::uint64_t n);

/// Arithmetic in the prime field F_p.
class PrimeField {
 public:
  /// Throws InvalidArgument unless p is prime.
  explicit PrimeField(std::uint64_t p);
  std::uint64_t p() const noexcept { return p_; }
  Residue reduce(long long x) const noexcept;
  Residue add(Residue a, Residue b) const noexcept { return a >= p_ - b ? a - (p_ - b) : a + b; }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Dense row-major matrix over F_p.
class MatrixFp {
 public:
  MatrixFp(std::uint64_t p, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod p. All rows must have `cols` entries.
  static MatrixFp from_rows(std::uint64_t p, std::size_t cols,
                            const std::vector<std::vector<long long>>& rows);

  std::uint64_t p() const noexcept { return field_.p(); }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v) { data_[r * cols_ + c] = v % p(); }
  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  bool row_is_zero(std::size_t r) const;

  /// Comma-separated rows, one per line.
  std::string to_csv() const;

  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

struct RrefResult {
  MatrixFp reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form; pivots are taken from the first nonzero entry
/// scanning columns left to right and rows top to bottom.
RrefResult rref(const MatrixFp& m);
std::size_t rank(const MatrixFp& m);

/// Basis of {c : c*M = 0}, itself in reduced echelon form.
std::vector<VectorFp> left_kernel_basis(const MatrixFp& m);

/// Greedy maximal independent subset of rows, in input order.
std::vector<std::size_t> select_independent_rows(const MatrixFp& m);

/// Coefficients a with sum_i a_i * M[basis_rows[i]] = row. Throws
/// InvalidArgument when row is outside the span or the basis is dependent.
VectorFp express_in_basis(const MatrixFp& m, std::span<const std::size_t> basis_rows,
                          std::span<const Residue> row);

/// c*M for a row vector c.
VectorFp row_times(std::span<const Residue> c, const MatrixFp& m);

/// Incrementally grown echelon basis of a row space.
class EchelonBasis {
 public:
  EchelonBasis(std::uint64_t p, std::size_t cols);
  /// Adds v; returns false when v already lies in the span.
  bool add(std::span<const Residue> v);
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  void reduce(VectorFp& v) const;

  PrimeField field_;
  std::size_t cols_;
  std::vector<VectorFp> rows_;  // each normalised to pivot 1
  std::vector<std::size_t> pivots_;  // pivot column of rows_[i]
};

}  // namespace hopfcalc
