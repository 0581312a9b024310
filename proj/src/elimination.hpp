#pragma once

// Fraction-free Gauss-Jordan elimination shared by the machine-integer and
// GMP paths. After processing, every pivot row i has entry `scale` in its
// pivot column and zero in every other pivot column; all stored entries are
// minors of the input, so each division below is exact.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace signut::detail {

struct MachineOps {
  using Value = std::int64_t;
  static Value abs(Value v) { return v < 0 ? -v : v; }
  static Value combine(Value piv, Value x, Value f, Value y, Value prev) {
    const __int128 num = static_cast<__int128>(piv) * x - static_cast<__int128>(f) * y;
    const __int128 q = num / prev;
    if (q * prev != num) throw std::logic_error("fraction-free elimination: inexact division");
    return static_cast<Value>(q);
  }
};

struct GmpOps {
  using Value = mpz_class;
  static Value abs(const Value& v) { return ::abs(v); }
  static Value combine(const Value& piv, const Value& x, const Value& f, const Value& y, const Value& prev) {
    Value num = piv * x - f * y;
    Value q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
    return q;
  }
};

template <class Ops>
struct Echelon {
  using Value = typename Ops::Value;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Value> data;  // row-major
  std::vector<std::size_t> pivot_cols;
  Value scale = 1;

  Value& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Value& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Partial pivoting by absolute value, ties to the lowest row index.
template <class Ops>
void gauss_jordan(Echelon<Ops>& e) {
  using Value = typename Ops::Value;
  Value prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < e.cols && r < e.rows; ++c) {
    std::size_t best = e.rows;
    Value best_abs = 0;
    for (std::size_t i = r; i < e.rows; ++i) {
      if (e.at(i, c) == 0) continue;
      Value a = Ops::abs(e.at(i, c));
      if (best == e.rows || a > best_abs) {
        best = i;
        best_abs = a;
      }
    }
    if (best == e.rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < e.cols; ++j) std::swap(e.at(best, j), e.at(r, j));
    const Value piv = e.at(r, c);
    for (std::size_t i = 0; i < e.rows; ++i) {
      if (i == r) continue;
      const Value f = e.at(i, c);
      for (std::size_t j = 0; j < e.cols; ++j) {
        if (j == c) continue;
        e.at(i, j) = Ops::combine(piv, e.at(i, j), f, e.at(r, j), prev);
      }
      e.at(i, c) = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.scale = prev;
}

}  // namespace signut::detail
