// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "signut/simd/modular_rank.hpp"

namespace signut::simd {

void axpy_mod_avx2(std::int32_t* dst, const std::int32_t* src, std::int32_t factor, std::size_t len) {
  const __m256i p = _mm256_set1_epi32(kModulus);
  const __m256i p_minus_one = _mm256_set1_epi32(kModulus - 1);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i f = _mm256_set1_epi32(factor);
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(kModulus));

  for (std::size_t i = 0; i < len; i += kLaneWidth) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));

    // t < p^2 < 2^30; the float quotient is off by at most one either way.
    const __m256i t = _mm256_mullo_epi32(s, f);
    const __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(t), inv_p));
    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, p));
    r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), p));
    r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, p_minus_one), p));

    __m256i out = _mm256_sub_epi32(d, r);
    out = _mm256_add_epi32(out, _mm256_and_si256(_mm256_cmpgt_epi32(zero, out), p));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), out);
  }
}

}  // namespace signut::simd
