#include "cayley/linalg.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "cayley/errors.hpp"

namespace cayley::linalg {

namespace {

using u64 = std::uint64_t;
using Row = std::vector<Coeff>;

Coeff reduce(std::int64_t c, std::uint32_t p) {
  const std::int64_t r = c % static_cast<std::int64_t>(p);
  return static_cast<Coeff>(r < 0 ? r + p : r);
}

Coeff inverse(Coeff a, std::uint32_t p) {
  u64 out = 1;
  u64 base = a;
  for (u64 e = p - 2; e > 0; e >>= 1) {
    if (e & 1) out = out * base % p;
    base = base * base % p;
  }
  return static_cast<Coeff>(out);
}

/// dst -= factor * src, entrywise mod p.
void axpy(Row& dst, const Row& src, Coeff factor, std::uint32_t p) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Coeff t = static_cast<Coeff>(u64{factor} * src[i] % p);
    dst[i] = dst[i] >= t ? dst[i] - t : dst[i] + p - t;
  }
}

void check_same(const FMatrix& a, const FMatrix& b) {
  if (a.modulus() != b.modulus() || a.dim() != b.dim()) {
    throw std::invalid_argument("matrix mismatch: " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                                " mod " + std::to_string(a.modulus()) + " vs " + std::to_string(b.dim()) + "x" +
                                std::to_string(b.dim()) + " mod " + std::to_string(b.modulus()));
  }
}

/// Row-reduces in place; returns pivot columns in row order.
std::vector<std::size_t> row_reduce(std::vector<Row>& rows, std::size_t cols, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Coeff inv = inverse(rows[r][c], p);
    for (auto& x : rows[r]) x = static_cast<Coeff>(u64{x} * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i][c] != 0) axpy(rows[i], rows[r], rows[i][c], p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FVector::FVector(std::uint32_t p, std::vector<std::int64_t> entries) : p_(p) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  entries_.reserve(entries.size());
  for (auto c : entries) entries_.push_back(reduce(c, p));
}

FVector FVector::zero(std::uint32_t p, std::size_t n) { return FVector(p, std::vector<std::int64_t>(n, 0)); }

FVector FVector::unit(std::uint32_t p, std::size_t n, std::size_t i) {
  std::vector<std::int64_t> e(n, 0);
  e.at(i) = 1;
  return FVector(p, std::move(e));
}

bool FVector::is_zero() const {
  for (auto c : entries_) {
    if (c != 0) return false;
  }
  return true;
}

FVector operator+(const FVector& a, const FVector& b) {
  if (a.modulus() != b.modulus() || a.size() != b.size()) throw std::invalid_argument("vector mismatch");
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::int64_t{a[i]} + b[i];
  return FVector(a.modulus(), std::move(out));
}

FVector operator-(const FVector& a) {
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -std::int64_t{a[i]};
  return FVector(a.modulus(), std::move(out));
}

FVector operator*(const FVector& v, const FMatrix& m) {
  if (v.modulus() != m.modulus() || v.size() != m.dim()) throw std::invalid_argument("vector/matrix mismatch");
  const std::uint32_t p = m.modulus();
  std::vector<std::int64_t> out(m.dim(), 0);
  for (std::size_t c = 0; c < m.dim(); ++c) {
    u64 acc = 0;
    for (std::size_t r = 0; r < m.dim(); ++r) acc = (acc + u64{v[r]} * m(r, c)) % p;
    out[c] = static_cast<std::int64_t>(acc);
  }
  return FVector(p, std::move(out));
}

FMatrix::FMatrix(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows)
    : p_(p), n_(rows.size()), a_(rows.size() * rows.size(), 0) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  if (n_ == 0) throw std::invalid_argument("matrix dimension must be at least 1");
  for (std::size_t r = 0; r < n_; ++r) {
    if (rows[r].size() != n_) throw std::invalid_argument("matrix must be square");
    for (std::size_t c = 0; c < n_; ++c) a_[r * n_ + c] = reduce(rows[r][c], p);
  }
}

FMatrix FMatrix::zero(std::uint32_t p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be at least 1");
  return FMatrix(p, n);
}

FMatrix FMatrix::identity(std::uint32_t p, std::size_t n) {
  FMatrix m = zero(p, n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

FMatrix FMatrix::neg_identity(std::uint32_t p, std::size_t n) { return -identity(p, n); }

FVector FMatrix::row(std::size_t r) const {
  return FVector(p_, std::vector<std::int64_t>(a_.begin() + r * n_, a_.begin() + (r + 1) * n_));
}

std::vector<std::vector<Coeff>> FMatrix::rows() const {
  std::vector<std::vector<Coeff>> out;
  for (std::size_t r = 0; r < n_; ++r) out.emplace_back(a_.begin() + r * n_, a_.begin() + (r + 1) * n_);
  return out;
}

FMatrix operator*(const FMatrix& a, const FMatrix& b) {
  check_same(a, b);
  const std::size_t n = a.n_;
  const std::uint32_t p = a.p_;
  FMatrix out(p, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const u64 aik = a.a_[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out.a_[i * n + j] = static_cast<Coeff>((out.a_[i * n + j] + aik * b.a_[k * n + j]) % p);
      }
    }
  }
  return out;
}

FMatrix operator+(const FMatrix& a, const FMatrix& b) {
  check_same(a, b);
  FMatrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = static_cast<Coeff>((u64{a.a_[i]} + b.a_[i]) % a.p_);
  return out;
}

FMatrix operator-(const FMatrix& a) {
  FMatrix out = a;
  for (auto& x : out.a_) x = x == 0 ? 0 : a.p_ - x;
  return out;
}

FMatrix operator-(const FMatrix& a, const FMatrix& b) { return a + (-b); }

FMatrix power(const FMatrix& m, std::uint64_t e) {
  FMatrix out = FMatrix::identity(m.modulus(), m.dim());
  FMatrix base = m;
  for (; e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    if (e > 1) base = base * base;
  }
  return out;
}

std::size_t rank(const std::vector<FVector>& vecs) {
  if (vecs.empty()) return 0;
  std::vector<Row> rows;
  for (const auto& v : vecs) rows.push_back(v.entries());
  return row_reduce(rows, vecs.front().size(), vecs.front().modulus()).size();
}

std::size_t rank(const FMatrix& m) {
  std::vector<Row> rows = m.rows();
  return row_reduce(rows, m.dim(), m.modulus()).size();
}

std::vector<FVector> kernel_basis(const FMatrix& m) {
  // v * M = 0  <=>  M^T v^T = 0: reduce the transpose and read off free columns.
  const std::size_t n = m.dim();
  const std::uint32_t p = m.modulus();
  std::vector<Row> rows(n, Row(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[c][r] = m(r, c);
  }
  const std::vector<std::size_t> pivots = row_reduce(rows, n, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<FVector> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -std::int64_t{rows[r][free]};
    out.emplace_back(p, std::move(v));
  }
  return out;
}

bool is_invertible(const FMatrix& m) { return rank(m) == m.dim(); }

FMatrix companion_matrix(const FieldPoly& f) {
  if (!f.is_monic() || f.degree() == 0) throw std::invalid_argument("companion_matrix: need monic f of degree >= 1");
  if (f.constant_term() == 0) throw std::invalid_argument("companion_matrix: f(0) = 0 gives a singular matrix");
  const std::size_t n = f.degree();
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) rows[i][i - 1] = 1;
    rows[i][n - 1] += -std::int64_t{f.coeff(i)};
  }
  return FMatrix(f.modulus(), rows);
}

FieldPoly minimal_polynomial(const FMatrix& m) {
  const std::size_t n = m.dim();
  const std::uint32_t p = m.modulus();
  FieldPoly out = FieldPoly::constant(p, 1);

  for (std::size_t basis = 0; basis < n; ++basis) {
    // Echelon rows of the Krylov space, each paired with the polynomial in M
    // that produces it from the starting vector.
    std::vector<Row> rows;
    std::vector<Row> exprs;
    std::vector<std::size_t> pivots;

    FVector w = FVector::unit(p, n, basis);
    for (std::size_t k = 0;; ++k) {
      Row vec = w.entries();
      Row expr(k + 1, 0);
      expr[k] = 1;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Coeff c = vec[pivots[r]];
        if (c == 0) continue;
        axpy(vec, rows[r], c, p);
        axpy(expr, exprs[r], c, p);
      }
      std::size_t piv = 0;
      while (piv < n && vec[piv] == 0) ++piv;
      if (piv == n) {
        out = lcm(out, FieldPoly(p, std::vector<std::int64_t>(expr.begin(), expr.end())));
        break;
      }
      const Coeff inv = inverse(vec[piv], p);
      for (auto& x : vec) x = static_cast<Coeff>(u64{x} * inv % p);
      for (auto& x : expr) x = static_cast<Coeff>(u64{x} * inv % p);
      rows.push_back(std::move(vec));
      exprs.push_back(std::move(expr));
      pivots.push_back(piv);
      w = w * m;
    }
  }
  return out;
}

std::uint64_t matrix_order(const FMatrix& m) {
  const FieldPoly mp = minimal_polynomial(m);
  if (mp.constant_term() == 0) throw std::domain_error("matrix_order: singular matrix");
  return ffpoly::ord_poly(mp);
}

std::uint64_t matrix_order_iterative(const FMatrix& m, std::uint64_t cap) {
  if (!is_invertible(m)) throw std::domain_error("matrix_order: singular matrix");
  if (cap == 0) {
    cap = 1;
    for (std::size_t i = 0; i < 2 * m.dim(); ++i) {
      if (cap > std::numeric_limits<u64>::max() / m.modulus()) {
        cap = std::numeric_limits<u64>::max();
        break;
      }
      cap *= m.modulus();
    }
  }
  const FMatrix id = FMatrix::identity(m.modulus(), m.dim());
  FMatrix acc = m;
  for (u64 k = 1; k <= cap; ++k) {
    if (acc == id) return k;
    acc = acc * m;
  }
  throw CapExceeded("matrix_order: no identity power within " + std::to_string(cap) + " steps");
}

bool contains_neg_identity(const FMatrix& m) {
  if (m.modulus() == 2) throw std::invalid_argument("contains_neg_identity: vacuous for p=2 (-I = I)");
  const u64 o = matrix_order(m);
  return o % 2 == 0 && power(m, o / 2) == FMatrix::neg_identity(m.modulus(), m.dim());
}

std::size_t fixed_subspace_dim(const FMatrix& m) {
  return m.dim() - rank(m - FMatrix::identity(m.modulus(), m.dim()));
}

}  // namespace cayley::linalg
