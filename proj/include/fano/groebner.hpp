#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fano/errors.hpp"
#include "fano/polynomial.hpp"

namespace fano {

struct GroebnerOptions {
  std::size_t max_basis_size = 20'000;
  std::size_t max_reduction_steps = 50'000'000;
};

// Index of the first element of `basis` whose leading monomial divides m.
template <Field F>
std::optional<std::size_t> find_reducer(const Monomial& m, const std::vector<Polynomial<F>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero() && basis[i].leading_monomial().divides(m)) return i;
  return std::nullopt;
}

// Full normal form of f modulo `basis` (every term reduced). The result does
// not depend on whether basis elements are monic.
template <Field F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis,
                          std::size_t* steps = nullptr) {
  using Term = typename Polynomial<F>::Term;
  const F& field = f.field();
  std::vector<Term> remainder;
  Polynomial<F> p = f;
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    if (auto idx = find_reducer(lt.monomial, basis)) {
      const auto& g = basis[*idx];
      const auto c = field.div(lt.coefficient, g.leading_coefficient());
      p = p.sub_mul(c, lt.monomial.quotient(g.leading_monomial()), g);
      if (steps) ++*steps;
    } else {
      remainder.push_back(lt);
      p = p - Polynomial<F>::monomial(field, lt.monomial, lt.coefficient, p.order());
    }
  }
  return Polynomial<F>::from_terms(field, f.nvars(), std::move(remainder), f.order());
}

template <Field F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const F& field = f.field();
  auto a = f.mul_term(l.quotient(f.leading_monomial()), field.inv(f.leading_coefficient()));
  return a.sub_mul(field.inv(g.leading_coefficient()), l.quotient(g.leading_monomial()), g);
}

// Inter-reduces a Groebner basis into the unique reduced basis: monic,
// minimal, tails reduced, sorted by increasing leading monomial.
template <Field F>
std::vector<Polynomial<F>> reduce_basis(std::vector<Polynomial<F>> basis) {
  std::erase_if(basis, [](const auto& g) { return g.is_zero(); });
  if (basis.empty()) return basis;
  const auto order = basis.front().order();
  std::sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  // Drop elements whose leading monomial is divisible by an earlier one.
  std::vector<Polynomial<F>> minimal;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) redundant = true;
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto& g = minimal[i];
    const auto lt = Polynomial<F>::monomial(g.field(), g.leading_monomial(), g.leading_coefficient(),
                                            g.order());
    auto tail = normal_form(g - lt, others);
    out.push_back((lt + tail).monic());
  }
  return out;
}

namespace detail {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace detail

// Buchberger's algorithm with the normal selection strategy and the
// Gebauer-Moeller installation of both Buchberger criteria. Returns the
// reduced Groebner basis of the ideal generated by `generators` (all in one
// ring); {1} for the unit ideal and {} for the zero ideal.
template <Field F>
std::vector<Polynomial<F>> groebner_basis(const std::vector<Polynomial<F>>& generators,
                                          const GroebnerOptions& options = {}) {
  using detail::CriticalPair;
  std::vector<Polynomial<F>> polys;
  for (const auto& g : generators)
    if (!g.is_zero()) polys.push_back(g.monic());
  if (polys.empty()) return {};
  const MonomialOrder order = polys.front().order();
  for (const auto& g : polys)
    if (!(g.order() == order) || g.nvars() != polys.front().nvars())
      throw InvalidParameters("generators live in different rings");

  std::vector<Polynomial<F>> basis;  // every element ever added
  std::vector<bool> active;
  std::vector<CriticalPair> pairs;
  std::size_t steps = 0;

  auto active_basis = [&]() {
    std::vector<Polynomial<F>> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (active[i]) out.push_back(basis[i]);
    return out;
  };

  auto install = [&](Polynomial<F> h) {
    const std::size_t hi = basis.size();
    const Monomial& lh = h.leading_monomial();
    // New pairs (g, h), pruned by the chain criterion among themselves.
    std::vector<CriticalPair> cands;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) cands.push_back({g, hi, lcm(basis[g].leading_monomial(), lh)});
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const bool coprime = basis[cands[a].i].leading_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = 0; b < cands.size() && !dominated; ++b) {
          if (a == b) continue;
          const bool strictly = !(cands[b].lcm == cands[a].lcm);
          if (cands[b].lcm.divides(cands[a].lcm) && (strictly || b < a)) dominated = true;
        }
      }
      if (!dominated) kept.push_back(cands[a]);
    }
    // Product criterion.
    std::erase_if(kept, [&](const CriticalPair& cp) {
      return basis[cp.i].leading_monomial().coprime(lh);
    });
    // Chain criterion on old pairs.
    std::erase_if(pairs, [&](const CriticalPair& cp) {
      if (!lh.divides(cp.lcm)) return false;
      const Monomial l1 = lcm(basis[cp.i].leading_monomial(), lh);
      const Monomial l2 = lcm(basis[cp.j].leading_monomial(), lh);
      return !(l1 == cp.lcm) && !(l2 == cp.lcm);
    });
    pairs.insert(pairs.end(), kept.begin(), kept.end());
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && lh.divides(basis[g].leading_monomial())) active[g] = false;
    basis.push_back(std::move(h));
    active.push_back(true);
    if (basis.size() > options.max_basis_size)
      throw ResourceLimit("Groebner basis exceeded " + std::to_string(options.max_basis_size) +
                          " elements");
  };

  // Install generators one by one, each reduced by what is already there.
  std::sort(polys.begin(), polys.end(), [&](const auto& a, const auto& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  for (auto& g : polys) {
    auto r = normal_form(g, active_basis(), &steps);
    if (r.is_zero()) continue;
    if (r.degree() == 0) return {Polynomial<F>::constant(r.field(), r.nvars(), r.field().one(), order)};
    install(r.monic());
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first, ties broken by indices.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      const int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const CriticalPair cp = *best;
    pairs.erase(best);
    auto s = s_polynomial(basis[cp.i], basis[cp.j]);
    auto r = normal_form(s, active_basis(), &steps);
    if (steps > options.max_reduction_steps)
      throw ResourceLimit("Groebner reduction exceeded " +
                          std::to_string(options.max_reduction_steps) + " steps");
    if (r.is_zero()) continue;
    if (r.degree() == 0) return {Polynomial<F>::constant(r.field(), r.nvars(), r.field().one(), order)};
    install(r.monic());
  }
  return reduce_basis(active_basis());
}

// True when every S-polynomial of `basis` reduces to zero modulo it.
template <Field F>
bool is_groebner_basis(const std::vector<Polynomial<F>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

}  // namespace fano
