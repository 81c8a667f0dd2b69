#include <cstdlib>
#include <vector>

#include "fano/kernels/eval_kernel.hpp"

namespace fano::kernels {

CompiledPoly compile(const Polynomial<PrimeField>& f) {
  CompiledPoly c;
  c.p = f.field().characteristic();
  c.nvars = f.nvars();
  c.max_exp.assign(f.nvars(), 0);
  for (const auto& t : f.terms()) {
    c.coeffs.push_back(t.coefficient);
    for (std::size_t v = 0; v < f.nvars(); ++v) {
      const unsigned e = t.monomial[v];
      if (e > 255) throw InvalidParameters("batch kernel supports exponents below 256");
      c.exps.push_back(static_cast<std::uint8_t>(e));
      if (e > c.max_exp[v]) c.max_exp[v] = e;
    }
  }
  return c;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "?";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(FANO_HAVE_AVX2_KERNEL) && (defined(__x86_64__) || defined(__i386__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* force = std::getenv("FANO_FORCE_SCALAR");
    if (force && force[0] == '1') return Isa::kScalar;
    return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
  }();
  return isa;
}

void eval_batch_scalar(const CompiledPoly& f, const std::uint32_t* coords, std::size_t stride,
                       std::size_t count, std::uint32_t* out) {
  const std::uint64_t p = f.p;
  const std::size_t nterms = f.coeffs.size();
  std::vector<std::uint64_t> pw;
  std::vector<std::size_t> base(f.nvars);
  for (std::size_t i = 0; i < count; ++i) {
    // Powers of each coordinate up to its maximal exponent.
    pw.clear();
    for (std::size_t v = 0; v < f.nvars; ++v) {
      base[v] = pw.size();
      std::uint64_t x = coords[v * stride + i], acc = 1;
      pw.push_back(1);
      for (unsigned e = 1; e <= f.max_exp[v]; ++e) {
        acc = acc * x % p;
        pw.push_back(acc);
      }
    }
    std::uint64_t sum = 0;
    for (std::size_t t = 0; t < nterms; ++t) {
      std::uint64_t prod = f.coeffs[t];
      const std::uint8_t* e = &f.exps[t * f.nvars];
      for (std::size_t v = 0; v < f.nvars; ++v)
        if (e[v]) prod = prod * pw[base[v] + e[v]] % p;
      sum += prod;
      if (sum >= p) sum -= p;
    }
    out[i] = static_cast<std::uint32_t>(sum);
  }
}

void eval_batch(const CompiledPoly& f, const std::uint32_t* coords, std::size_t stride,
                std::size_t count, std::uint32_t* out, Isa isa) {
  if (isa == Isa::kAvx2 && f.p < (1u << 26) && isa_supported(Isa::kAvx2)) {
    eval_batch_avx2(f, coords, stride, count, out);
    return;
  }
  eval_batch_scalar(f, coords, stride, count, out);
}

#if !defined(FANO_HAVE_AVX2_KERNEL)
void eval_batch_avx2(const CompiledPoly& f, const std::uint32_t* coords, std::size_t stride,
                     std::size_t count, std::uint32_t* out) {
  eval_batch_scalar(f, coords, stride, count, out);
}
#endif

}  // namespace fano::kernels
