#include "fano/hilbert.hpp"

#include <algorithm>
#include <map>

namespace fano {

namespace {

using Memo = std::map<std::vector<Monomial>, IntPoly>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t support_size(const Monomial& m) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) s += m[i] != 0;
  return s;
}

IntPoly numerator(std::vector<Monomial> gens, std::size_t nvars, Memo& memo) {
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.degree() == 0) return {};
  gens = minimalize(std::move(gens));
  if (auto it = memo.find(gens); it != memo.end()) return it->second;

  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
      if (!gens[a].coprime(gens[b])) coprime = false;

  IntPoly result;
  if (coprime) {
    result = {1};
    for (const auto& g : gens) {
      IntPoly factor(g.degree() + 1, 0);
      factor[0] = 1;
      factor[g.degree()] -= 1;
      result = mul(result, factor);
    }
  } else {
    // Pivot on the variable occurring in most non-pure-power generators.
    std::vector<std::size_t> counts(nvars, 0);
    for (const auto& g : gens) {
      if (support_size(g) < 2) continue;
      for (std::size_t i = 0; i < nvars; ++i)
        if (g[i]) ++counts[i];
    }
    const auto x = static_cast<std::size_t>(
        std::max_element(counts.begin(), counts.end()) - counts.begin());
    std::vector<Monomial> with_x, colon;
    for (const auto& g : gens) {
      if (!g[x]) with_x.push_back(g);
      Monomial c = g;
      if (c[x]) c.set(x, c[x] - 1);
      colon.push_back(c);
    }
    with_x.push_back(Monomial::variable(nvars, x));
    IntPoly shifted = numerator(std::move(colon), nvars, memo);
    shifted.insert(shifted.begin(), 0);
    trim(shifted);
    result = add(numerator(std::move(with_x), nvars, memo), shifted);
  }
  memo.emplace(std::move(gens), result);
  return result;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

IntPoly hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  Memo memo;
  return numerator(std::move(gens), nvars, memo);
}

HilbertData hilbert_data_from_monomials(const std::vector<Monomial>& gens, std::size_t nvars) {
  HilbertData out;
  out.numerator = hilbert_numerator(gens, nvars);
  if (out.numerator.empty()) return out;
  IntPoly h = out.numerator;
  std::size_t c = 0;
  for (;;) {
    std::int64_t at_one = 0;
    for (auto v : h) at_one += v;
    if (at_one != 0) {
      out.degree = at_one;
      break;
    }
    // h = (1 - t) q
    IntPoly q(h.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      acc += h[i];
      q[i] = acc;
    }
    trim(q);
    h = std::move(q);
    ++c;
  }
  out.reduced_numerator = h;
  const int krull = static_cast<int>(nvars) - static_cast<int>(c);
  out.dimension = krull - 1;
  if (out.dimension < 0) {
    out.dimension = -1;
    out.degree = 0;
  }
  return out;
}

std::int64_t hilbert_function(const IntPoly& numerator, std::size_t nvars, unsigned d) {
  std::int64_t total = 0;
  const auto n = static_cast<std::int64_t>(nvars);
  for (std::size_t i = 0; i < numerator.size() && i <= d; ++i)
    total += numerator[i] * binomial(static_cast<std::int64_t>(d - i) + n - 1, n - 1);
  return total;
}

}  // namespace fano
