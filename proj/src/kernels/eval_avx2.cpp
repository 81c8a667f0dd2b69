// Compiled with -mavx2. Residues are carried in double lanes: for p < 2^26
// every product of two residues is below 2^52 and therefore exact, so the
// reduction q = floor(a*b/p), r = a*b - q*p is off by at most one multiple
// of p and is corrected with two compares.

#include <immintrin.h>

#include <vector>

#include "fano/kernels/eval_kernel.hpp"

namespace fano::kernels {

namespace {

inline __m256d reduce_once(__m256d r, __m256d p) {
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return r;
}

inline __m256d mulmod(__m256d a, __m256d b, __m256d p, __m256d pinv) {
  const __m256d prod = _mm256_mul_pd(a, b);
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, pinv));
  return reduce_once(_mm256_sub_pd(prod, _mm256_mul_pd(q, p)), p);
}

inline __m256d addmod(__m256d a, __m256d b, __m256d p) {
  const __m256d s = _mm256_add_pd(a, b);
  return _mm256_sub_pd(s, _mm256_and_pd(_mm256_cmp_pd(s, p, _CMP_GE_OQ), p));
}

}  // namespace

void eval_batch_avx2(const CompiledPoly& f, const std::uint32_t* coords, std::size_t stride,
                     std::size_t count, std::uint32_t* out) {
  constexpr std::size_t kLanes = 4;
  const std::size_t full = count - count % kLanes;
  const __m256d p = _mm256_set1_pd(static_cast<double>(f.p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(f.p));
  const std::size_t nterms = f.coeffs.size();

  std::vector<std::size_t> base(f.nvars);
  std::size_t total = 0;
  for (std::size_t v = 0; v < f.nvars; ++v) {
    base[v] = total;
    total += f.max_exp[v] + 1;
  }
  // Power-table slots of each term's nontrivial factors.
  std::vector<std::uint32_t> slot, slot_end(nterms);
  for (std::size_t t = 0; t < nterms; ++t) {
    const std::uint8_t* e = &f.exps[t * f.nvars];
    for (std::size_t v = 0; v < f.nvars; ++v)
      if (e[v]) slot.push_back(static_cast<std::uint32_t>(base[v] + e[v]));
    slot_end[t] = static_cast<std::uint32_t>(slot.size());
  }
  std::vector<__m256d> pw(total);
  std::vector<__m256d> coef(nterms);
  for (std::size_t t = 0; t < nterms; ++t) coef[t] = _mm256_set1_pd(static_cast<double>(f.coeffs[t]));

  for (std::size_t i = 0; i < full; i += kLanes) {
    for (std::size_t v = 0; v < f.nvars; ++v) {
      const __m128i xi =
          _mm_loadu_si128(reinterpret_cast<const __m128i*>(coords + v * stride + i));
      // Residues are below 2^31, so the signed conversion is exact.
      const __m256d x = _mm256_cvtepi32_pd(xi);
      __m256d acc = _mm256_set1_pd(1.0);
      pw[base[v]] = acc;
      for (unsigned e = 1; e <= f.max_exp[v]; ++e) {
        acc = mulmod(acc, x, p, pinv);
        pw[base[v] + e] = acc;
      }
    }
    __m256d sum = _mm256_setzero_pd();
    for (std::size_t t = 0, k = 0; t < nterms; ++t) {
      __m256d prod = coef[t];
      for (; k < slot_end[t]; ++k) prod = mulmod(prod, pw[slot[k]], p, pinv);
      sum = addmod(sum, prod, p);
    }
    const __m128i r = _mm256_cvttpd_epi32(sum);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), r);
  }
  if (full < count) {
    // Tail through the scalar reference on a compacted copy.
    std::vector<std::uint32_t> tail(f.nvars * (count - full));
    const std::size_t n = count - full;
    for (std::size_t v = 0; v < f.nvars; ++v)
      for (std::size_t j = 0; j < n; ++j) tail[v * n + j] = coords[v * stride + full + j];
    eval_batch_scalar(f, tail.data(), n, n, out + full);
  }
}

}  // namespace fano::kernels
