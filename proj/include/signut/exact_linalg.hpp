#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

#include "signut/int_matrix.hpp"

namespace signut {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense matrix of exact rationals, always stored in canonical (reduced) form.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RationalMatrix(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Rational value);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RankNullity {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  friend bool operator==(const RankNullity&, const RankNullity&) = default;
};

/// Basis of ker A. `is_full` / `is_integer` describe every vector.
struct KernelBasis {
  std::size_t dimension = 0;  // length of each vector (n)
  std::vector<std::vector<Rational>> vectors;
  bool is_full = false;
  bool is_integer = false;

  std::size_t nullity() const { return vectors.size(); }

  /// Recomputes the flags.
  static KernelBasis from_vectors(std::size_t dimension, std::vector<std::vector<Rational>> vectors);
  /// Union of the supports of the basis vectors (= support of the span).
  std::vector<bool> support() const;
};

RankNullity rank_nullity(const RationalMatrix& m);
RankNullity rank_nullity(const IntMatrix& m);

/// One primitive integer vector per free column of the reduced echelon form,
/// free columns ascending, first non-zero entry positive. Every vector is
/// checked against A x = 0 before it is returned.
KernelBasis kernel_basis(const RationalMatrix& m);
KernelBasis kernel_basis(const IntMatrix& m);

/// Same span and cardinality with no zero entries. Input must be an integer
/// basis whose span covers every coordinate (std::domain_error otherwise).
KernelBasis fullify_basis(const KernelBasis& b);

/// Coprime integers, first non-zero entry positive. Nullity must be 1.
std::vector<Integer> canonical_eigenvector(const KernelBasis& b);

/// Scales to coprime integers with first non-zero entry positive.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> v);
std::vector<Integer> primitive_integer_vector(std::span<const Integer> v);

bool in_kernel(const IntMatrix& a, std::span<const Integer> x);
bool in_kernel(const IntMatrix& a, std::span<const Rational> x);

/// Exact span equality of two sets of vectors of the same length.
bool same_span(const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b);

/// Whether the int64 elimination path is exact for this matrix (every minor,
/// bounded by Hadamard's inequality, fits in 62 bits).
bool fits_machine_elimination(const IntMatrix& m);

}  // namespace signut
