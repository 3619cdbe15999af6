#include "plumbkit/lattice.hpp"

#include <algorithm>
#include <utility>

#include "plumbkit/error.hpp"

namespace plumbkit {

SymmetricIntMatrix::SymmetricIntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Integer(0)) {}

SymmetricIntMatrix::SymmetricIntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> converted;
  for (const auto& row : rows) {
    std::vector<Integer> r;
    for (long v : row) r.emplace_back(v);
    converted.push_back(std::move(r));
  }
  *this = from_rows(converted);
}

SymmetricIntMatrix SymmetricIntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  SymmetricIntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InvalidInput("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.entries_[i * m.dim_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < m.dim_; ++i)
    for (std::size_t j = i + 1; j < m.dim_; ++j)
      if (m(i, j) != m(j, i)) throw InvalidInput("matrix is not symmetric");
  return m;
}

void SymmetricIntMatrix::set(std::size_t i, std::size_t j, const Integer& value) {
  entries_[i * dim_ + j] = value;
  entries_[j * dim_ + i] = value;
}

std::vector<std::vector<Integer>> SymmetricIntMatrix::rows() const {
  std::vector<std::vector<Integer>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
  return out;
}

SymmetricIntMatrix SymmetricIntMatrix::without(std::size_t k) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < dim_; ++i)
    if (i != k) keep.push_back(i);
  return principal(keep);
}

SymmetricIntMatrix SymmetricIntMatrix::principal(std::span<const std::size_t> indices) const {
  SymmetricIntMatrix out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j)
      out.entries_[i * out.dim_ + j] = (*this)(indices[i], indices[j]);
  return out;
}

SymmetricIntMatrix SymmetricIntMatrix::bordered(std::span<const Integer> links,
                                                const Integer& diagonal) const {
  if (links.size() != dim_) throw InvalidInput("border vector length must equal matrix dimension");
  SymmetricIntMatrix out(dim_ + 1);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out.entries_[i * out.dim_ + j] = (*this)(i, j);
    out.set(i, dim_, links[i]);
  }
  out.set(dim_, dim_, diagonal);
  return out;
}

SymmetricIntMatrix SymmetricIntMatrix::direct_sum(const SymmetricIntMatrix& other) const {
  SymmetricIntMatrix out(dim_ + other.dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out.entries_[i * out.dim_ + j] = (*this)(i, j);
  for (std::size_t i = 0; i < other.dim_; ++i)
    for (std::size_t j = 0; j < other.dim_; ++j)
      out.entries_[(dim_ + i) * out.dim_ + dim_ + j] = other(i, j);
  return out;
}

namespace {

// Dense row-major scratch matrix for the elimination routines.
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;

  explicit Dense(const SymmetricIntMatrix& m) : rows(m.dim()), cols(m.dim()), a(rows * cols) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j);
  }
  Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, j), at(i, k));
  }
};

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Divides a symmetric block by the gcd of its entries (a positive congruence scaling).
void remove_content(std::vector<Integer>& block) {
  Integer g = 0;
  for (const auto& v : block) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : block) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Integer determinant(const SymmetricIntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  Dense d(m);
  Integer previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (d.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && d.at(r, k) == 0) ++r;
      if (r == n) return 0;
      d.swap_rows(k, r);
      negate = !negate;
    }
    const Integer pivot = d.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = d.at(i, j) * pivot - d.at(i, k) * d.at(k, j);
        mpz_divexact(d.at(i, j).get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      d.at(i, k) = 0;
    }
    previous = pivot;
  }
  Integer det = d.at(n - 1, n - 1);
  return negate ? Integer(-det) : det;
}

Inertia inertia(const SymmetricIntMatrix& m) {
  Inertia result;
  std::size_t n = m.dim();
  std::vector<Integer> block(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) block[i * n + j] = m(i, j);
  // The active block equals (positive multiple of) the Schur complement, or of its negative.
  bool flipped = false;

  auto count_sign = [&](int s) {
    if (flipped) s = -s;
    if (s > 0)
      ++result.positive;
    else
      ++result.negative;
  };

  while (n > 0) {
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return block[i * n + j]; };

    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (at(i, i) == 0) continue;
      if (pivot == n || cmpabs(at(i, i), at(pivot, pivot)) < 0) pivot = i;
    }

    if (pivot != n) {
      const Integer p = at(pivot, pivot);
      count_sign(sgn(p));
      std::vector<Integer> next;
      next.reserve((n - 1) * (n - 1));
      for (std::size_t i = 0; i < n; ++i) {
        if (i == pivot) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == pivot) continue;
          next.push_back(p * at(i, j) - at(i, pivot) * at(pivot, j));
        }
      }
      if (p < 0) flipped = !flipped;
      block = std::move(next);
      --n;
      remove_content(block);
      continue;
    }

    std::size_t k = n, l = n;
    for (std::size_t i = 0; i < n && k == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (at(i, j) != 0) {
          k = i;
          l = j;
          break;
        }
    if (k == n) {
      result.zero += n;
      break;
    }

    // Hyperbolic block [[0,b],[b,0]]: one positive and one negative direction.
    ++result.positive;
    ++result.negative;
    const Integer b = at(k, l);
    const Integer b2 = b * b;
    std::vector<Integer> next;
    next.reserve((n - 2) * (n - 2));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || i == l) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k || j == l) continue;
        next.push_back(b2 * at(i, j) - b * (at(i, k) * at(j, l) + at(i, l) * at(j, k)));
      }
    }
    block = std::move(next);
    n -= 2;
    remove_content(block);
  }
  return result;
}

Mod2Solution solve_mod2(const SymmetricIntMatrix& a, const BitVector& b) {
  const std::size_t n = a.dim();
  if (b.size() != n) throw InvalidInput("right-hand side length must equal matrix dimension");

  const std::size_t words = (n + 1 + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
  auto set_bit = [](std::vector<std::uint64_t>& row, std::size_t j) { row[j / 64] |= std::uint64_t{1} << (j % 64); };
  auto bit = [](const std::vector<std::uint64_t>& row, std::size_t j) { return (row[j / 64] >> (j % 64)) & 1U; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (mpz_odd_p(a(i, j).get_mpz_t())) set_bit(rows[i], j);
    if (b[i] & 1U) set_bit(rows[i], n);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t r = rank;
    while (r < n && !bit(rows[r], col)) ++r;
    if (r == n) continue;
    std::swap(rows[rank], rows[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || !bit(rows[i], col)) continue;
      for (std::size_t w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  for (std::size_t i = rank; i < n; ++i)
    if (bit(rows[i], n)) return {Mod2Status::NoSolution, {}};

  BitVector x(n, 0);
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = static_cast<std::uint8_t>(bit(rows[i], n));
  return {rank == n ? Mod2Status::Unique : Mod2Status::NonUnique, std::move(x)};
}

std::vector<Integer> smith_invariants(const SymmetricIntMatrix& m) {
  const std::size_t n = m.dim();
  Dense d(m);
  std::vector<Integer> diagonal;

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = n, pc = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d.at(i, j) != 0 && (pr == n || cmpabs(d.at(i, j), d.at(pr, pc)) < 0)) {
            pr = i;
            pc = j;
          }
      if (pr == n) break;
      d.swap_rows(t, pr);
      d.swap_cols(t, pc);
      const Integer p = d.at(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d.at(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), p.get_mpz_t());
        for (std::size_t j = t; j < n; ++j) d.at(i, j) -= q * d.at(t, j);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), p.get_mpz_t());
        for (std::size_t i = t; i < n; ++i) d.at(i, j) -= q * d.at(i, t);
        if (d.at(t, j) != 0) clean = false;
      }
      if (clean) break;
    }
    diagonal.push_back(abs(d.at(t, t)));
  }

  // Any diagonal form normalizes to the divisibility chain via gcd/lcm exchanges.
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), diagonal[i].get_mpz_t(), diagonal[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diagonal[i].get_mpz_t(), diagonal[j].get_mpz_t());
      if (diagonal[i] == 0 && diagonal[j] != 0) {
        std::swap(diagonal[i], diagonal[j]);
      } else if (diagonal[i] != 0 && diagonal[j] != 0) {
        diagonal[i] = g;
        diagonal[j] = l;
      }
    }
  return diagonal;
}

Cokernel cokernel(const SymmetricIntMatrix& m) {
  Cokernel c;
  for (const auto& d : smith_invariants(m)) {
    if (d == 0)
      ++c.free_rank;
    else if (d > 1)
      c.torsion.push_back(d);
  }
  return c;
}

}  // namespace plumbkit
