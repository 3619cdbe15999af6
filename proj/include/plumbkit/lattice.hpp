#pragma once

// Exact integer linear algebra on small symmetric matrices.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace plumbkit {

using Integer = mpz_class;
using BitVector = std::vector<std::uint8_t>;

class SymmetricIntMatrix {
 public:
  SymmetricIntMatrix() = default;
  explicit SymmetricIntMatrix(std::size_t dim);
  // Throws InvalidInput unless the rows form a symmetric square array.
  SymmetricIntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static SymmetricIntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  // Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, const Integer& value);

  std::vector<std::vector<Integer>> rows() const;

  SymmetricIntMatrix without(std::size_t k) const;
  SymmetricIntMatrix principal(std::span<const std::size_t> indices) const;
  // Appends one row/column: `links` off the diagonal, `diagonal` in the corner.
  SymmetricIntMatrix bordered(std::span<const Integer> links, const Integer& diagonal) const;
  SymmetricIntMatrix direct_sum(const SymmetricIntMatrix& other) const;

  friend bool operator==(const SymmetricIntMatrix&, const SymmetricIntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Integer> entries_;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Fraction-free (Bareiss) elimination with row pivoting. det of the 0x0 matrix is 1.
Integer determinant(const SymmetricIntMatrix& m);

// Sylvester inertia by integer congruence diagonalization. A nonzero diagonal
// pivot is preferred; a block with zero diagonal but a nonzero off-diagonal
// entry is split off as a hyperbolic 2x2 block contributing (1,0,1).
Inertia inertia(const SymmetricIntMatrix& m);

enum class Mod2Status { Unique, NoSolution, NonUnique };

struct Mod2Solution {
  Mod2Status status = Mod2Status::NoSolution;
  // The solution when Unique; one particular solution when NonUnique; empty otherwise.
  BitVector x;
};

// Gaussian elimination over GF(2) for A x = b. Throws InvalidInput on size mismatch.
Mod2Solution solve_mod2(const SymmetricIntMatrix& a, const BitVector& b);

// Diagonal of the Smith normal form: nonnegative, d_1 | d_2 | ..., zeros last.
std::vector<Integer> smith_invariants(const SymmetricIntMatrix& m);

struct Cokernel {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  bool is_infinite_cyclic() const { return free_rank == 1 && torsion.empty(); }
  friend bool operator==(const Cokernel&, const Cokernel&) = default;
};

Cokernel cokernel(const SymmetricIntMatrix& m);

}  // namespace plumbkit
