#include "hopfcalc/fplinalg.hpp"

#include <algorithm>
#include <string>

#include "hopfcalc/error.hpp"

namespace hopfcalc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit n.
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
      if (e & 1) r = mulmod(r, a);
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

Residue PrimeField::reduce(long long x) const noexcept {
  if (x >= 0) return static_cast<Residue>(x) % p_;
  Residue r = (static_cast<Residue>(-(x + 1)) + 1) % p_;
  return r == 0 ? 0 : p_ - r;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no inverse");
  Residue r = 1, base = a % p_;
  for (std::uint64_t e = p_ - 2; e; e >>= 1, base = mul(base, base))
    if (e & 1) r = mul(r, base);
  return r;
}

MatrixFp::MatrixFp(std::uint64_t p, std::size_t rows, std::size_t cols)
    : field_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixFp MatrixFp::from_rows(std::uint64_t p, std::size_t cols,
                             const std::vector<std::vector<long long>>& rows) {
  MatrixFp m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw InvalidArgument("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                            " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = m.field_.reduce(rows[r][c]);
  }
  return m;
}

bool MatrixFp::row_is_zero(std::size_t r) const {
  auto v = row(r);
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

std::string MatrixFp::to_csv() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ',';
      out += std::to_string(at(r, c));
    }
    out += '\n';
  }
  return out;
}

RrefResult rref(const MatrixFp& m) {
  MatrixFp a = m;
  const PrimeField& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      auto x = a.row(piv), y = a.row(r);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    auto pr = a.row(r);
    Residue s = f.inv(pr[c]);
    for (auto& x : pr) x = f.mul(x, s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      auto ri = a.row(i);
      Residue factor = ri[c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < a.cols(); ++j) ri[j] = f.sub(ri[j], f.mul(factor, pr[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

std::size_t rank(const MatrixFp& m) {
  EchelonBasis basis(m.p(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.add(m.row(r));
  return basis.rank();
}

std::vector<VectorFp> left_kernel_basis(const MatrixFp& m) {
  // Row reduce [M | I]; identity parts of the zero rows span the left kernel.
  const std::size_t n = m.rows(), k = m.cols();
  MatrixFp aug(m.p(), n, k + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, k + r, 1);
  }
  RrefResult red = rref(aug);
  std::size_t rank_m = 0;
  while (rank_m < red.pivot_cols.size() && red.pivot_cols[rank_m] < k) ++rank_m;
  MatrixFp kernel(m.p(), n - rank_m, n);
  for (std::size_t r = rank_m; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) kernel.set(r - rank_m, c, red.reduced.at(r, k + c));
  RrefResult kred = rref(kernel);
  std::vector<VectorFp> out;
  for (std::size_t r = 0; r < kred.rank; ++r) {
    auto row = kred.reduced.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

std::vector<std::size_t> select_independent_rows(const MatrixFp& m) {
  EchelonBasis basis(m.p(), m.cols());
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (basis.add(m.row(r))) out.push_back(r);
  return out;
}

VectorFp express_in_basis(const MatrixFp& m, std::span<const std::size_t> basis_rows,
                          std::span<const Residue> row) {
  if (row.size() != m.cols()) throw InvalidArgument("row length does not match matrix columns");
  // Solve a * B = row via the left kernel of [B ; row].
  const std::size_t b = basis_rows.size();
  MatrixFp stacked(m.p(), b + 1, m.cols());
  for (std::size_t i = 0; i < b; ++i) {
    if (basis_rows[i] >= m.rows()) throw InvalidArgument("basis row index out of range");
    for (std::size_t c = 0; c < m.cols(); ++c) stacked.set(i, c, m.at(basis_rows[i], c));
  }
  for (std::size_t c = 0; c < m.cols(); ++c) stacked.set(b, c, row[c] % m.p());
  auto kernel = left_kernel_basis(stacked);
  const PrimeField& f = m.field();
  for (const auto& c : kernel) {
    if (c[b] == 0) throw InvalidArgument("basis rows are linearly dependent");
  }
  if (kernel.size() != 1) throw InvalidArgument("row is not in the span of the basis rows");
  const auto& c = kernel.front();
  Residue scale = f.neg(f.inv(c[b]));
  VectorFp a(b);
  for (std::size_t i = 0; i < b; ++i) a[i] = f.mul(c[i], scale);
  return a;
}

VectorFp row_times(std::span<const Residue> c, const MatrixFp& m) {
  if (c.size() != m.rows()) throw InvalidArgument("vector length does not match matrix rows");
  const PrimeField& f = m.field();
  VectorFp out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (c[r] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(c[r], m.at(r, j)));
  }
  return out;
}

EchelonBasis::EchelonBasis(std::uint64_t p, std::size_t cols)
    : field_(p), cols_(cols) {}

void EchelonBasis::reduce(VectorFp& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue factor = v[pivots_[i]];
    if (factor == 0) continue;
    const auto& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < cols_; ++j)
      if (row[j]) v[j] = field_.sub(v[j], field_.mul(factor, row[j]));
  }
}

bool EchelonBasis::add(std::span<const Residue> v) {
  if (v.size() != cols_) throw InvalidArgument("vector length does not match basis width");
  VectorFp w(v.begin(), v.end());
  for (auto& x : w) x %= field_.p();
  reduce(w);
  auto it = std::find_if(w.begin(), w.end(), [](Residue x) { return x != 0; });
  if (it == w.end()) return false;
  auto pivot = static_cast<std::size_t>(it - w.begin());
  Residue s = field_.inv(*it);
  for (auto& x : w) x = field_.mul(x, s);
  pivots_.push_back(pivot);
  rows_.push_back(std::move(w));
  return true;
}

}  // namespace hopfcalc
