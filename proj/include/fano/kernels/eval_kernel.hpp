#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fano/polynomial.hpp"
#include "fano/prime_field.hpp"

namespace fano::kernels {

// A polynomial over F_p flattened for batch evaluation at many points.
struct CompiledPoly {
  std::uint32_t p = 0;
  std::size_t nvars = 0;
  std::vector<std::uint32_t> coeffs;  // one per term
  std::vector<std::uint8_t> exps;     // term-major, nvars per term
  std::vector<unsigned> max_exp;      // per variable
};

CompiledPoly compile(const Polynomial<PrimeField>& f);

enum class Isa { kScalar, kAvx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
// Best ISA on this machine; FANO_FORCE_SCALAR=1 pins the scalar path.
Isa active_isa();

// Points are given structure-of-arrays: coordinate v of point i sits at
// coords[v * stride + i]. Writes f(point_i) to out[i] for i < count.
void eval_batch_scalar(const CompiledPoly& f, const std::uint32_t* coords, std::size_t stride,
                       std::size_t count, std::uint32_t* out);
void eval_batch_avx2(const CompiledPoly& f, const std::uint32_t* coords, std::size_t stride,
                     std::size_t count, std::uint32_t* out);

// Dispatches to the requested ISA, falling back to scalar when the ISA is
// unavailable or p >= 2^26 (the double-precision reduction needs exact
// products).
void eval_batch(const CompiledPoly& f, const std::uint32_t* coords, std::size_t stride,
                std::size_t count, std::uint32_t* out, Isa isa = active_isa());

}  // namespace fano::kernels
