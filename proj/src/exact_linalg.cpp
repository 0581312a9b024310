#include "signut/exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "elimination.hpp"

namespace signut {

using detail::Echelon;
using detail::GmpOps;
using detail::MachineOps;

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.rows(), m.cols()) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = Rational(static_cast<long>(m(r, c)));
}

void RationalMatrix::set(std::size_t r, std::size_t c, Rational value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix::set: index out of range");
  value.canonicalize();
  data_[r * cols_ + c] = std::move(value);
}

bool fits_machine_elimination(const IntMatrix& m) {
  long double log2_bound = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    long double sq = 0;
    for (auto v : m.row(r)) sq += static_cast<long double>(v) * static_cast<long double>(v);
    if (sq > 1) log2_bound += 0.5L * std::log2(sq);
  }
  return log2_bound < 61.0L;
}

namespace {

Echelon<GmpOps> integer_rows(const RationalMatrix& m) {
  Echelon<GmpOps> e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.data.resize(e.rows * e.cols);
  for (std::size_t r = 0; r < e.rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < e.cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < e.cols; ++c) {
      const Rational& q = m(r, c);
      e.at(r, c) = Integer(q.get_num() * (l / q.get_den()));
    }
  }
  return e;
}

Echelon<GmpOps> gmp_rows(const IntMatrix& m) {
  Echelon<GmpOps> e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.data.reserve(e.rows * e.cols);
  for (auto v : m.data()) e.data.emplace_back(static_cast<long>(v));
  return e;
}

Echelon<MachineOps> machine_rows(const IntMatrix& m) {
  Echelon<MachineOps> e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.data.assign(m.data().begin(), m.data().end());
  return e;
}

Integer to_integer(const std::int64_t& v) { return Integer(static_cast<long>(v)); }
const Integer& to_integer(const Integer& v) { return v; }

template <class Ops>
std::vector<std::vector<Rational>> kernel_from_echelon(const Echelon<Ops>& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  const Integer scale = to_integer(e.scale);
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Integer> x(e.cols, Integer(0));
    x[f] = scale;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = -to_integer(e.at(i, f));
    auto p = primitive_integer_vector(std::span<const Integer>(x));
    std::vector<Rational> q(p.begin(), p.end());
    out.push_back(std::move(q));
  }
  return out;
}

template <class Vec>
bool in_kernel_impl(const IntMatrix& a, const Vec& x) {
  if (x.size() != a.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    typename Vec::value_type acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0) acc += static_cast<long>(a(r, c)) * x[c];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

RankNullity rank_nullity(const RationalMatrix& m) {
  auto e = integer_rows(m);
  detail::gauss_jordan(e);
  return {e.pivot_cols.size(), m.cols() - e.pivot_cols.size()};
}

RankNullity rank_nullity(const IntMatrix& m) {
  std::size_t rank = 0;
  if (fits_machine_elimination(m)) {
    auto e = machine_rows(m);
    detail::gauss_jordan(e);
    rank = e.pivot_cols.size();
  } else {
    auto e = gmp_rows(m);
    detail::gauss_jordan(e);
    rank = e.pivot_cols.size();
  }
  return {rank, m.cols() - rank};
}

KernelBasis KernelBasis::from_vectors(std::size_t dimension, std::vector<std::vector<Rational>> vectors) {
  KernelBasis b;
  b.dimension = dimension;
  b.vectors = std::move(vectors);
  b.is_full = true;
  b.is_integer = true;
  for (const auto& v : b.vectors) {
    if (v.size() != dimension) throw std::invalid_argument("kernel basis: vector length mismatch");
    for (const auto& q : v) {
      if (q == 0) b.is_full = false;
      if (q.get_den() != 1) b.is_integer = false;
    }
  }
  return b;
}

std::vector<bool> KernelBasis::support() const {
  std::vector<bool> s(dimension, false);
  for (const auto& v : vectors)
    for (std::size_t i = 0; i < dimension; ++i)
      if (v[i] != 0) s[i] = true;
  return s;
}

KernelBasis kernel_basis(const IntMatrix& m) {
  std::vector<std::vector<Rational>> vectors;
  if (fits_machine_elimination(m)) {
    auto e = machine_rows(m);
    detail::gauss_jordan(e);
    vectors = kernel_from_echelon(e);
  } else {
    auto e = gmp_rows(m);
    detail::gauss_jordan(e);
    vectors = kernel_from_echelon(e);
  }
  for (const auto& v : vectors)
    if (!in_kernel(m, std::span<const Rational>(v)))
      throw std::logic_error("kernel_basis: produced vector violates the local condition");
  return KernelBasis::from_vectors(m.cols(), std::move(vectors));
}

KernelBasis kernel_basis(const RationalMatrix& m) {
  auto e = integer_rows(m);
  detail::gauss_jordan(e);
  auto vectors = kernel_from_echelon(e);
  for (const auto& v : vectors)
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Rational acc = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * v[c];
      if (acc != 0) throw std::logic_error("kernel_basis: produced vector is not in the kernel");
    }
  return KernelBasis::from_vectors(m.cols(), std::move(vectors));
}

KernelBasis fullify_basis(const KernelBasis& b) {
  const std::size_t n = b.dimension;
  const auto support = b.support();
  for (std::size_t i = 0; i < n; ++i)
    if (!support[i]) throw std::domain_error("fullify_basis: not a core kernel (coordinate " + std::to_string(i) +
                                             " is zero in every kernel vector)");

  std::vector<std::vector<Integer>> x;
  x.reserve(b.vectors.size());
  for (const auto& v : b.vectors) {
    if (b.is_integer) {
      std::vector<Integer> row;
      row.reserve(n);
      for (const auto& q : v) row.push_back(q.get_num());
      x.push_back(std::move(row));
    } else {
      x.push_back(primitive_integer_vector(std::span<const Rational>(v)));
    }
  }

  for (;;) {
    // Lowest coordinate with a zero somewhere, lowest vector holding it.
    std::size_t iota = n, ell = x.size();
    for (std::size_t i = 0; i < n && iota == n; ++i)
      for (std::size_t l = 0; l < x.size(); ++l)
        if (x[l][i] == 0) {
          iota = i;
          ell = l;
          break;
        }
    if (iota == n) break;
    std::size_t k = 0;
    while (x[k][iota] == 0) ++k;  // exists: the span covers iota

    // alpha = floor(max |x_l(i)| / |x_k(i)|) + 1 over i != iota with x_k(i) != 0
    Integer alpha = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == iota || x[k][i] == 0) continue;
      Integer q;
      const Integer num = ::abs(x[ell][i]);
      const Integer den = ::abs(x[k][i]);
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      q += 1;
      if (q > alpha) alpha = q;
    }
    for (std::size_t i = 0; i < n; ++i) x[ell][i] += alpha * x[k][i];
  }

  std::vector<std::vector<Rational>> out;
  out.reserve(x.size());
  for (auto& row : x) out.emplace_back(row.begin(), row.end());
  return KernelBasis::from_vectors(n, std::move(out));
}

std::vector<Integer> canonical_eigenvector(const KernelBasis& b) {
  if (b.nullity() != 1)
    throw std::domain_error("canonical_eigenvector: nullity is " + std::to_string(b.nullity()) + ", expected 1");
  return primitive_integer_vector(std::span<const Rational>(b.vectors.front()));
}

std::vector<Integer> primitive_integer_vector(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& a : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  std::vector<Integer> out(v.begin(), v.end());
  if (g == 0) return out;
  auto lead = std::find_if(out.begin(), out.end(), [](const Integer& a) { return a != 0; });
  if (*lead < 0) g = -g;
  for (auto& a : out) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> scaled;
  scaled.reserve(v.size());
  for (const auto& q : v) scaled.emplace_back(q.get_num() * (l / q.get_den()));
  return primitive_integer_vector(std::span<const Integer>(scaled));
}

bool in_kernel(const IntMatrix& a, std::span<const Integer> x) {
  return in_kernel_impl(a, std::vector<Integer>(x.begin(), x.end()));
}

bool in_kernel(const IntMatrix& a, std::span<const Rational> x) {
  return in_kernel_impl(a, std::vector<Rational>(x.begin(), x.end()));
}

bool same_span(const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b) {
  auto rank_of = [](const std::vector<std::vector<Rational>>& rows) -> std::size_t {
    if (rows.empty()) return 0;
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
    return rank_nullity(m).rank;
  };
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto ra = rank_of(a);
  return ra == rank_of(b) && ra == rank_of(both);
}

}  // namespace signut
