#include "fano/points.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "fano/kernels/eval_kernel.hpp"

namespace fano {

ExtensionField canonical_field(std::uint32_t p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, ExtensionField> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({p, k});
  if (it == cache.end()) it = cache.emplace(std::pair{p, k}, build_extension(p, k)).first;
  return it->second;
}

namespace {

using PPoly = Polynomial<PrimeField>;

PPoly dehomogenize(const PPoly& g) {
  const std::size_t n = g.nvars() - 1;
  std::vector<PPoly> images;
  images.push_back(PPoly::constant(g.field(), n, g.field().one()));
  for (std::size_t i = 0; i < n; ++i) images.push_back(PPoly::variable(g.field(), n, i));
  return compose(g, images);
}

// Standard monomials of a leading-term ideal, or nullopt when more than
// `cap` exist (the quotient is too large or infinite).
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& lead,
                                                        std::size_t nvars, std::size_t cap) {
  std::vector<Monomial> out;
  std::set<Monomial> seen;
  std::vector<Monomial> frontier{Monomial(nvars)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      bool divisible = false;
      for (const auto& l : lead)
        if (l.divides(m)) {
          divisible = true;
          break;
        }
      if (divisible) continue;
      out.push_back(m);
      if (out.size() > cap) return std::nullopt;
      for (std::size_t i = 0; i < nvars; ++i) {
        Monomial up = m * Monomial::variable(nvars, i);
        if (seen.insert(up).second) next.push_back(up);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

UPoly from_coeffs(const std::vector<PrimeField::Element>& c) {
  UPoly u(c.begin(), c.end());
  upoly::trim(u);
  return u;
}

ExtensionField::Element eval_upoly(const ExtensionField& E, const UPoly& f,
                                   const ExtensionField::Element& x) {
  auto acc = E.zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = E.add(E.mul(acc, x), E.embed(f[i]));
  return acc;
}

template <class Fn>
std::vector<std::uint64_t> parallel_collect(std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  const std::uint64_t total = end - begin;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (total < (1u << 16)) threads = 1;
  if (threads == 1) return fn(begin, end);
  std::vector<std::vector<std::uint64_t>> parts(threads);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = begin + std::min<std::uint64_t>(total, chunk * t);
    const std::uint64_t hi = begin + std::min<std::uint64_t>(total, chunk * (t + 1));
    pool.emplace_back([&, t, lo, hi] { parts[t] = fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool all_vanish(const Ideal<PrimeField>& ideal, const GeometricPoint& y) {
  for (const auto& g : ideal.generators())
    if (!y.field().is_zero(evaluate_in(g, y.field(), y.coords()))) return false;
  return true;
}

}  // namespace

ZeroDimSolution solve_zero_dimensional(const Ideal<PrimeField>& ideal,
                                       const PointSearchOptions& options) {
  const PrimeField& F = ideal.field();
  const std::size_t n = ideal.nvars() - 1;  // affine variables after dehomogenizing
  if (n == 0) throw InvalidParameters("zero-dimensional solving needs at least P^1");
  const auto hd = hilbert_data(ideal, options.groebner);
  if (hd.dimension != 0)
    throw InvalidParameters("ideal is not zero-dimensional (dimension " +
                            std::to_string(hd.dimension) + ")");
  ZeroDimSolution sol;
  sol.degree = hd.degree;
  const auto D = static_cast<std::size_t>(hd.degree);
  Rng rng(options.seed ^ 0x5eed0fu);

  for (unsigned attempt = 0; attempt < options.elimination_attempts; ++attempt) {
    auto M = random_invertible(F, n + 1, rng);
    std::vector<PPoly> affine;
    for (const auto& g : ideal.generators()) {
      if (g.is_zero()) continue;
      affine.push_back(dehomogenize(linear_substitute(g.with_order(MonomialOrder::grevlex()), M)));
    }
    auto basis = groebner_basis(affine, options.groebner);
    std::vector<Monomial> lead;
    for (const auto& g : basis) lead.push_back(g.leading_monomial());
    auto standard = standard_monomials(lead, n, 4 * D + 16);
    if (!standard || standard->size() != D) {
      sol.attempts.push_back("attempt " + std::to_string(attempt) + ": points at infinity");
      continue;
    }
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < D; ++i) index[(*standard)[i]] = i;
    auto vec = [&](const PPoly& f) {
      std::vector<PrimeField::Element> v(D, 0);
      for (const auto& t : f.terms()) v[index.at(t.monomial)] = t.coefficient;
      return v;
    };
    const auto t = PPoly::variable(F, n, n - 1);
    std::vector<std::vector<PrimeField::Element>> powers;
    PPoly cur = PPoly::constant(F, n, F.one());
    cur = normal_form(cur, basis);
    for (std::size_t j = 0; j <= D; ++j) {
      powers.push_back(vec(cur));
      cur = normal_form(cur * t, basis);
    }
    Matrix<PrimeField> A(F, D, D);
    for (std::size_t j = 0; j < D; ++j)
      for (std::size_t i = 0; i < D; ++i) A(i, j) = powers[j][i];
    if (rank(A) != D) {
      sol.attempts.push_back("attempt " + std::to_string(attempt) + ": coordinate not separating");
      continue;
    }
    const auto Ainv = inverse(A);
    auto solve = [&](const std::vector<PrimeField::Element>& b) { return Ainv.apply(b); };
    // mu(t) = t^D - sum c_j t^j
    auto c = solve(powers[D]);
    UPoly mu(D + 1);
    for (std::size_t j = 0; j < D; ++j) mu[j] = F.neg(c[j]);
    mu[D] = 1;
    sol.eliminant = mu;
    sol.shape.clear();
    for (std::size_t i = 0; i + 1 < n; ++i)
      sol.shape.push_back(from_coeffs(solve(vec(normal_form(PPoly::variable(F, n, i), basis)))));
    sol.change = M;
    sol.shape_position = true;
    sol.squarefree = upoly::is_squarefree(F, mu);
    UPoly radical = mu;
    if (!sol.squarefree)
      radical = upoly::divmod(F, mu, upoly::gcd(F, mu, upoly::derivative(F, mu))).first;
    sol.factors = upoly::factor_squarefree(F, radical, rng);
    sol.attempts.push_back("attempt " + std::to_string(attempt) + ": shape position");
    return sol;
  }
  return sol;
}

std::vector<std::uint64_t> scan_common_zeros(const std::vector<Polynomial<PrimeField>>& polys,
                                             const ProjectiveEnumerator<PrimeField>& points,
                                             std::uint64_t begin, std::uint64_t end) {
  std::vector<const Polynomial<PrimeField>*> nonzero;
  for (const auto& g : polys)
    if (!g.is_zero()) nonzero.push_back(&g);
  if (nonzero.empty()) {
    std::vector<std::uint64_t> all;
    for (std::uint64_t i = begin; i < end; ++i) all.push_back(i);
    return all;
  }
  // Sparsest first. Each polynomial runs through the batch kernel on the
  // compacted survivors of the previous one.
  std::stable_sort(nonzero.begin(), nonzero.end(),
                   [](const auto* a, const auto* b) { return a->size() < b->size(); });
  std::vector<kernels::CompiledPoly> compiled;
  for (const auto* g : nonzero) compiled.push_back(kernels::compile(*g));
  const std::size_t nv = points.ambient_dimension() + 1;
  const auto isa = kernels::active_isa();

  return parallel_collect(begin, end, [&](std::uint64_t lo, std::uint64_t hi) {
    constexpr std::size_t kBatch = 1024;
    std::vector<std::uint32_t> soa(nv * kBatch), values(kBatch);
    std::vector<std::uint64_t> alive(kBatch);
    std::vector<PrimeField::Element> c;
    std::vector<std::uint64_t> found;
    for (std::uint64_t base = lo; base < hi; base += kBatch) {
      std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, hi - base));
      points.coords_at(base, c);
      for (std::size_t i = 0; i < count; ++i) {
        alive[i] = base + i;
        if (i) points.advance(c);
        for (std::size_t v = 0; v < nv; ++v) soa[v * kBatch + i] = c[v];
      }
      for (const auto& poly : compiled) {
        if (count == 0) break;
        kernels::eval_batch(poly, soa.data(), kBatch, count, values.data(), isa);
        std::size_t kept = 0;
        for (std::size_t i = 0; i < count; ++i) {
          if (values[i] != 0) continue;
          if (kept != i) {
            alive[kept] = alive[i];
            for (std::size_t v = 0; v < nv; ++v) soa[v * kBatch + kept] = soa[v * kBatch + i];
          }
          ++kept;
        }
        count = kept;
      }
      found.insert(found.end(), alive.begin(), alive.begin() + static_cast<std::ptrdiff_t>(count));
    }
    return found;
  });
}

RationalPoints rational_points(const Ideal<PrimeField>& ideal, const PointSearchOptions& options) {
  const std::uint32_t p = ideal.field().characteristic();
  const std::size_t N = ideal.ambient_dimension();
  RationalPoints out;

  bool can_enumerate = true;
  {
    unsigned __int128 q = 1;
    for (unsigned k = 1; k <= options.k_max; ++k) {
      q *= p;
      if (q > UINT64_MAX) {
        can_enumerate = false;
        break;
      }
      auto count = projective_point_count(static_cast<std::uint64_t>(q), N);
      if (!count || *count > options.budget) can_enumerate = false;
    }
  }
  PointMethod method = options.method;
  if (method == PointMethod::kAuto) {
    if (can_enumerate) {
      method = PointMethod::kEnumeration;
    } else if (ideal.is_homogeneous() && hilbert_data(ideal, options.groebner).dimension == 0) {
      method = PointMethod::kElimination;
    } else {
      throw BudgetExceeded("P^" + std::to_string(N) + " over GF(" + std::to_string(p) + "^k), k <= " +
                           std::to_string(options.k_max) + " exceeds the enumeration budget and the "
                           "ideal is not zero-dimensional");
    }
  }

  if (method == PointMethod::kEnumeration) {
    out.method = "enumeration";
    for (unsigned k = 1; k <= options.k_max; ++k) {
      if (k == 1) {
        ProjectiveEnumerator<PrimeField> en(ideal.field(), N, options.budget);
        const auto E = canonical_field(p, 1);
        for (auto idx : scan_common_zeros(ideal.generators(), en, 0, en.count())) {
          const auto y = en.point_at(idx);
          std::vector<ExtensionField::Element> c;
          for (auto v : y.coords()) c.push_back(E.embed(v));
          out.points.emplace_back(E, std::move(c));
        }
        out.count_by_degree[1] = out.points.size();
        continue;
      }
      const auto E = canonical_field(p, k);
      ProjectiveEnumerator<ExtensionField> en(E, N, options.budget);
      std::vector<Polynomial<ExtensionField>> lifted;
      for (const auto& g : ideal.generators()) lifted.push_back(lift(g, E));
      std::size_t found = 0;
      en.for_each(0, en.count(), [&](std::uint64_t, const std::vector<ExtensionField::Element>& c) {
        for (const auto& g : lifted)
          if (!E.is_zero(g.evaluate(c))) return;
        GeometricPoint y(E, c);
        if (residue_degree(y) != k) return;
        out.points.push_back(std::move(y));
        ++found;
      });
      out.count_by_degree[k] = found;
    }
    return out;
  }

  out.method = "elimination";
  PointSearchOptions opts = options;
  auto sol = solve_zero_dimensional(ideal, opts);
  out.log = sol.attempts;
  if (!sol.shape_position)
    throw DegenerateInstance("no coordinate change put the system in shape position");
  if (!sol.squarefree) out.log.push_back("eliminant has repeated roots: scheme is not reduced");
  std::size_t geometric = 0;
  const PrimeField& F = ideal.field();
  for (const auto& phi : sol.factors) {
    const auto k = static_cast<unsigned>(upoly::degree(phi));
    geometric += k;
    if (k > options.k_max || k > kMaxExtensionDegree) {
      out.higher_extension += k;
      continue;
    }
    const ExtensionField E = k == 1 ? canonical_field(p, 1) : ExtensionField(F, phi);
    auto theta = k == 1 ? E.embed(F.neg(phi[0])) : E.generator();
    for (unsigned j = 0; j < k; ++j) {
      std::vector<ExtensionField::Element> affine{E.one()};
      for (const auto& s : sol.shape) affine.push_back(eval_upoly(E, s, theta));
      affine.push_back(theta);
      std::vector<ExtensionField::Element> x(N + 1, E.zero());
      for (std::size_t r = 0; r <= N; ++r)
        for (std::size_t col = 0; col <= N; ++col)
          x[r] = E.add(x[r], E.mul(E.embed((*sol.change)(r, col)), affine[col]));
      GeometricPoint y(E, std::move(x));
      if (!all_vanish(ideal, y)) throw Error("elimination produced a point off the variety");
      out.points.push_back(std::move(y));
      theta = E.frobenius(theta);
    }
    out.count_by_degree[k] += k;
  }
  out.geometric_count = geometric;
  return out;
}

std::vector<GeometricPoint> singular_points(const Ideal<PrimeField>& ideal, std::size_t codim,
                                            const PointSearchOptions& options) {
  auto found = rational_points(ideal, options);
  const auto jac = jacobian(ideal.generators());
  std::vector<GeometricPoint> out;
  for (auto& y : found.points)
    if (jacobian_rank_at(jac, y) < codim) out.push_back(std::move(y));
  return out;
}

SliceSample random_slice(const Ideal<PrimeField>& ideal, int dim, Rng& rng,
                         const PointSearchOptions& options) {
  if (dim < 1) throw InvalidParameters("slicing needs a positive-dimensional scheme");
  const PrimeField& F = ideal.field();
  const std::size_t N = ideal.ambient_dimension();
  const std::size_t m = N + 1 - static_cast<std::size_t>(dim);  // coordinates on the slice
  Matrix<PrimeField> A(F, N + 1, m);
  do {
    for (std::size_t i = 0; i <= N; ++i)
      for (std::size_t j = 0; j < m; ++j) A(i, j) = F.sample(rng);
  } while (rank(A) != m);
  const auto images = linear_forms(A);
  std::vector<PPoly> restricted;
  for (const auto& g : ideal.generators())
    restricted.push_back(compose(g.with_order(MonomialOrder::grevlex()), images));
  Ideal<PrimeField> cut(F, m, restricted);
  SliceSample out;
  const auto hd = hilbert_data(cut, options.groebner);
  if (hd.dimension != 0) return out;
  PointSearchOptions opts = options;
  opts.method = PointMethod::kElimination;
  opts.k_max = kMaxExtensionDegree;
  opts.seed = rng();
  RationalPoints pts;
  try {
    pts = rational_points(cut, opts);
  } catch (const DegenerateInstance&) {
    return out;
  }
  // Fewer points than the slice degree means a non-reduced slice.
  if (pts.higher_extension != 0 || static_cast<std::int64_t>(pts.points.size()) != hd.degree) return out;
  out.count = static_cast<std::int64_t>(pts.points.size());
  for (const auto& z : pts.points) {
    const auto& E = z.field();
    std::vector<ExtensionField::Element> x(N + 1, E.zero());
    for (std::size_t r = 0; r <= N; ++r)
      for (std::size_t j = 0; j < m; ++j) x[r] = E.add(x[r], E.mul(E.embed(A(r, j)), z[j]));
    out.points.emplace_back(E, std::move(x));
  }
  return out;
}

SliceResult slice_degree(const Ideal<PrimeField>& ideal, int dim, unsigned trials, Rng& rng,
                         const PointSearchOptions& options) {
  SliceResult out;
  for (unsigned trial = 0; trial < trials; ++trial)
    out.counts.push_back(random_slice(ideal, dim, rng, options).count);
  std::map<std::int64_t, unsigned> freq;
  for (auto c : out.counts) ++freq[c];
  auto best = std::max_element(freq.begin(), freq.end(),
                               [](const auto& a, const auto& b) { return a.second < b.second; });
  if (best == freq.end() || best->first < 0 || 2 * best->second <= trials)
    throw Inconclusive("slice counts have no majority");
  out.mode = best->first;
  return out;
}

}  // namespace fano
