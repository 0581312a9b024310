#pragma once

// Rank over GF(p) as a cheap one-sided filter for exact rank: reduction mod p
// never increases rank, so rank_p(A) == n proves A nonsingular over Q. The
// row-update inner loop has a scalar reference kernel and an AVX2 variant,
// selected at runtime; both produce canonical residues in [0, p).

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "signut/int_matrix.hpp"

namespace signut::simd {

/// Largest prime below 2^15: products of two residues fit in 30 bits.
inline constexpr std::int32_t kModulus = 32749;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Best ISA the running CPU supports (and the build compiled in).
Isa best_supported_isa();
bool is_supported(Isa isa);

/// ISA used when none is passed explicitly. Starts as best_supported_isa(),
/// or as named by the SIGNUT_ISA environment variable ("scalar" / "avx2").
Isa active_isa();
/// Throws std::invalid_argument when the ISA is not supported here.
void set_active_isa(Isa isa);

/// dst[i] = (dst[i] - factor * src[i]) mod p for i < len. Inputs are residues
/// in [0, p); `len` is a multiple of kLaneWidth and the buffers are padded.
using AxpyModKernel = void (*)(std::int32_t* dst, const std::int32_t* src, std::int32_t factor, std::size_t len);

inline constexpr std::size_t kLaneWidth = 8;

AxpyModKernel axpy_mod_kernel(Isa isa);

void axpy_mod_scalar(std::int32_t* dst, const std::int32_t* src, std::int32_t factor, std::size_t len);
#if defined(SIGNUT_HAVE_AVX2)
void axpy_mod_avx2(std::int32_t* dst, const std::int32_t* src, std::int32_t factor, std::size_t len);
#endif

/// Modular inverse of a non-zero residue.
std::int32_t inverse_mod(std::int32_t a);

/// Rank of `m` reduced mod kModulus.
std::size_t rank_mod_p(const IntMatrix& m, Isa isa);
inline std::size_t rank_mod_p(const IntMatrix& m) { return rank_mod_p(m, active_isa()); }

/// Reusable buffers for repeated rank computations on same-sized matrices.
class ModularRankWorkspace {
 public:
  std::size_t rank(const IntMatrix& m, Isa isa);
  std::size_t rank(const IntMatrix& m) { return rank(m, active_isa()); }

 private:
  std::vector<std::int32_t> buffer_;
};

}  // namespace signut::simd
