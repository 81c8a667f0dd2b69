#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fano/groebner.hpp"
#include "fano/hilbert.hpp"
#include "fano/linalg.hpp"
#include "fano/polynomial.hpp"
#include "fano/projective.hpp"

namespace fano {

// Ideal of a polynomial ring in nvars variables (projective routines read it
// as a subscheme of P^{nvars-1}). Generators are stored under `order`.
template <Field F>
class Ideal {
 public:
  Ideal(F field, std::size_t nvars, std::vector<Polynomial<F>> generators,
        MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), nvars_(nvars), order_(order) {
    for (auto& g : generators) {
      if (g.nvars() != nvars_) throw InvalidParameters("generator has wrong number of variables");
      gens_.push_back(g.order() == order_ ? std::move(g) : g.with_order(order_));
    }
  }

  explicit Ideal(std::vector<Polynomial<F>> generators)
      : Ideal(generators.at(0).field(), generators.at(0).nvars(), generators,
              generators.at(0).order()) {}

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t ambient_dimension() const { return nvars_ - 1; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }

  bool is_homogeneous() const {
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  // Product of generator degrees (Bezout bound), ignoring zero generators.
  std::int64_t bezout_bound() const {
    std::int64_t b = 1;
    for (const auto& g : gens_)
      if (!g.is_zero()) b *= g.degree();
    return b;
  }

  std::size_t nonzero_generator_count() const {
    std::size_t c = 0;
    for (const auto& g : gens_) c += !g.is_zero();
    return c;
  }

  Ideal with_order(MonomialOrder order) const { return Ideal(field_, nvars_, gens_, order); }

  Ideal plus(const std::vector<Polynomial<F>>& more) const {
    auto gens = gens_;
    for (const auto& g : more) gens.push_back(g.order() == order_ ? g : g.with_order(order_));
    return Ideal(field_, nvars_, std::move(gens), order_);
  }

  bool contains(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) const {
    return normal_form(f.order() == order_ ? f : f.with_order(order_), basis).is_zero();
  }

 private:
  F field_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Polynomial<F>> gens_;
};

// Reduced Groebner basis of I under I's order.
template <Field F>
Ideal<F> buchberger(const Ideal<F>& ideal, const GroebnerOptions& options = {}) {
  return Ideal<F>(ideal.field(), ideal.nvars(), groebner_basis(ideal.generators(), options),
                  ideal.order());
}

// Projective dimension and degree of V(I) from the leading-term ideal of a
// grevlex basis. All-zero generators give the whole space; 1 in I gives
// the empty scheme (dimension -1, degree 0).
template <Field F>
HilbertData hilbert_data(const Ideal<F>& ideal, const GroebnerOptions& options = {}) {
  if (!ideal.is_homogeneous()) throw InvalidParameters("hilbert_data needs homogeneous generators");
  auto basis = groebner_basis(ideal.with_order(MonomialOrder::grevlex()).generators(), options);
  std::vector<Monomial> lead;
  for (const auto& g : basis) lead.push_back(g.leading_monomial());
  return hilbert_data_from_monomials(lead, ideal.nvars());
}

// Matrix of partial derivatives, one row per generator.
template <Field F>
std::vector<std::vector<Polynomial<F>>> jacobian(const std::vector<Polynomial<F>>& gens) {
  std::vector<std::vector<Polynomial<F>>> rows;
  for (const auto& g : gens) rows.push_back(gradient(g));
  return rows;
}

template <Field F>
Matrix<F> evaluate_matrix(const std::vector<std::vector<Polynomial<F>>>& m,
                          const std::vector<typename F::Element>& point, const F& field) {
  Matrix<F> out(field, m.size(), m.empty() ? 0 : m.front().size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) out(r, c) = m[r][c].evaluate(point);
  return out;
}

// Evaluates f over F_p at a point with coordinates in an extension.
inline ExtensionField::Element evaluate_in(const Polynomial<PrimeField>& f, const ExtensionField& E,
                                           const std::vector<ExtensionField::Element>& point) {
  std::vector<std::vector<ExtensionField::Element>> powers(f.nvars());
  auto acc = E.zero();
  for (const auto& t : f.terms()) {
    auto v = E.embed(t.coefficient);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      const unsigned e = t.monomial[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(E.one());
      while (pw.size() <= e) pw.push_back(E.mul(pw.back(), point[i]));
      v = E.mul(v, pw[e]);
    }
    acc = E.add(acc, v);
  }
  return acc;
}

inline std::size_t jacobian_rank_at(const std::vector<std::vector<Polynomial<PrimeField>>>& jac,
                                    const ProjectivePoint<ExtensionField>& y) {
  const auto& E = y.field();
  Matrix<ExtensionField> m(E, jac.size(), jac.empty() ? 0 : jac.front().size());
  for (std::size_t r = 0; r < jac.size(); ++r)
    for (std::size_t c = 0; c < jac[r].size(); ++c) m(r, c) = evaluate_in(jac[r][c], E, y.coords());
  return rank(m);
}

template <Field F>
std::size_t jacobian_rank_at(const std::vector<std::vector<Polynomial<F>>>& jac,
                             const ProjectivePoint<F>& y) {
  return rank(evaluate_matrix(jac, y.coords(), y.field()));
}

namespace detail {

template <Field F>
Polynomial<F> determinant(const std::vector<std::vector<Polynomial<F>>>& m,
                          const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  Polynomial<F> acc(m[rows[0]][cols[0]].field(), m[rows[0]][cols[0]].nvars(),
                    m[rows[0]][cols[0]].order());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    auto term = m[rows[0]][cols[k]] * determinant(m, sub_rows, sub_cols);
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// All size x size minors of a polynomial matrix.
template <Field F>
std::vector<Polynomial<F>> minors(const std::vector<std::vector<Polynomial<F>>>& m, std::size_t size) {
  std::vector<Polynomial<F>> out;
  if (m.empty() || size == 0 || size > m.size() || size > m.front().size()) return out;
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  std::vector<std::size_t> cur;
  detail::combinations(m.size(), size, 0, cur, row_sets);
  detail::combinations(m.front().size(), size, 0, cur, col_sets);
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      auto d = detail::determinant(m, rs, cs);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  return out;
}

// I + (codim x codim minors of the Jacobian): its zero set is where the
// Jacobian of the generators drops below rank `codim`.
template <Field F>
Ideal<F> rank_drop_ideal(const Ideal<F>& ideal, std::size_t codim) {
  return ideal.plus(minors(jacobian(ideal.generators()), codim));
}

}  // namespace fano
