#include "signut/simd/modular_rank.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace signut::simd {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool is_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(SIGNUT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_supported_isa() { return is_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("SIGNUT_ISA")) {
    const std::string_view name(env);
    if (name == "scalar") return Isa::Scalar;
    if (name == "avx2" && is_supported(Isa::Avx2)) return Isa::Avx2;
  }
  return best_supported_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!is_supported(isa)) throw std::invalid_argument("ISA " + std::string(to_string(isa)) + " not supported here");
  active().store(isa, std::memory_order_relaxed);
}

AxpyModKernel axpy_mod_kernel(Isa isa) {
  if (!is_supported(isa)) throw std::invalid_argument("ISA " + std::string(to_string(isa)) + " not supported here");
#if defined(SIGNUT_HAVE_AVX2)
  if (isa == Isa::Avx2) return &axpy_mod_avx2;
#endif
  return &axpy_mod_scalar;
}

void axpy_mod_scalar(std::int32_t* dst, const std::int32_t* src, std::int32_t factor, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    const std::int32_t t = static_cast<std::int32_t>((factor * src[i]) % kModulus);
    std::int32_t d = dst[i] - t;
    if (d < 0) d += kModulus;
    dst[i] = d;
  }
}

std::int32_t inverse_mod(std::int32_t a) {
  // Extended Euclid.
  std::int32_t r0 = kModulus, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int32_t q = r0 / r1;
    std::int32_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::domain_error("inverse_mod: zero has no inverse");
  return s0 < 0 ? s0 + kModulus : s0;
}

std::size_t ModularRankWorkspace::rank(const IntMatrix& m, Isa isa) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t stride = (cols + kLaneWidth - 1) / kLaneWidth * kLaneWidth;
  buffer_.assign(rows * stride, 0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::int64_t v = m(r, c) % kModulus;
      if (v < 0) v += kModulus;
      buffer_[r * stride + c] = static_cast<std::int32_t>(v);
    }

  const AxpyModKernel axpy = axpy_mod_kernel(isa);
  std::int32_t* a = buffer_.data();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * stride + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < stride; ++j) std::swap(a[piv * stride + j], a[rank * stride + j]);
    const std::int32_t inv = inverse_mod(a[rank * stride + c]);
    const std::int32_t* pivot_row = a + rank * stride;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int32_t lead = a[i * stride + c];
      if (lead == 0) continue;
      const auto factor = static_cast<std::int32_t>((static_cast<std::int64_t>(lead) * inv) % kModulus);
      axpy(a + i * stride, pivot_row, factor, stride);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, Isa isa) {
  ModularRankWorkspace ws;
  return ws.rank(m, isa);
}

}  // namespace signut::simd
