#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fano/errors.hpp"
#include "fano/field.hpp"
#include "fano/linalg.hpp"
#include "fano/monomial.hpp"

namespace fano {

// Sparse multivariate polynomial. Terms are kept sorted in decreasing order
// under the polynomial's monomial order, with no zero coefficients; the zero
// polynomial has no terms.
template <Field F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial monomial;
    Element coefficient;
  };

  Polynomial(F field, std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), nvars_(nvars), order_(order) {
    if (nvars > kMaxVariables) throw InvalidParameters("too many variables");
  }

  static Polynomial from_terms(F field, std::size_t nvars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(std::move(field), nvars, order);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  static Polynomial constant(F field, std::size_t nvars, Element c,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(field, nvars, order);
    if (!field.is_zero(c)) p.terms_.push_back({Monomial(nvars), std::move(c)});
    return p;
  }

  static Polynomial variable(F field, std::size_t nvars, std::size_t i,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(field, nvars, order);
    p.terms_.push_back({Monomial::variable(nvars, i), field.one()});
    return p;
  }

  static Polynomial monomial(F field, const Monomial& m, Element c,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(field, m.nvars(), order);
    if (!field.is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Total degree; -1 stands for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    return true;
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Element& leading_coefficient() const { return leading_term().coefficient; }

  Element coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coefficient;
    return field_.zero();
  }

  Polynomial with_order(MonomialOrder order) const {
    Polynomial p(field_, nvars_, order);
    p.terms_ = terms_;
    p.sort_terms();
    return p;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scale(field_.inv(leading_coefficient()));
  }

  Polynomial scale(const Element& c) const {
    Polynomial p(field_, nvars_, order_);
    if (field_.is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial, field_.mul(t.coefficient, c)});
    return p;
  }

  Polynomial mul_term(const Monomial& m, const Element& c) const {
    Polynomial p(field_, nvars_, order_);
    if (field_.is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, field_.mul(t.coefficient, c)});
    return p;
  }

  Polynomial operator-() const { return scale(field_.neg(field_.one())); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return a.merge(b, a.field_.one(), Monomial(a.nvars_));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a.merge(b, a.field_.neg(a.field_.one()), Monomial(a.nvars_));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    std::vector<Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_)
        prods.push_back({s.monomial * t.monomial, a.field_.mul(s.coefficient, t.coefficient)});
    return from_terms(a.field_, a.nvars_, std::move(prods), a.order_);
  }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  // *this - c * m * g, computed in one merge.
  Polynomial sub_mul(const Element& c, const Monomial& m, const Polynomial& g) const {
    return merge(g, field_.neg(c), m);
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(field_, nvars_, field_.one(), order_);
    Polynomial base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != nvars_) throw InvalidParameters("evaluation point has wrong length");
    // Cache powers per variable: exponents are small.
    std::vector<std::vector<Element>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(field_.one());
    Element acc = field_.zero();
    for (const auto& t : terms_) {
      Element v = t.coefficient;
      for (std::size_t i = 0; i < nvars_; ++i) {
        const unsigned e = t.monomial[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        while (pw.size() <= e) pw.push_back(field_.mul(pw.back(), point[i]));
        v = field_.mul(v, pw[e]);
      }
      acc = field_.add(acc, v);
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    if (!(a.order_ == b.order_)) return a == b.with_order(a.order_);
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
      if (!a.field_.equal(a.terms_[i].coefficient, b.terms_[i].coefficient)) return false;
    }
    return true;
  }

 private:
  void check_compatible(const Polynomial& b) const {
    if (nvars_ != b.nvars_) throw InvalidParameters("polynomials over different variable sets");
    if (!(order_ == b.order_)) throw InvalidParameters("polynomials under different orders");
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& x, const Term& y) {
      return order_.compare(x.monomial, y.monomial) > 0;
    });
  }

  void normalize() {
    for (const auto& t : terms_)
      if (t.monomial.nvars() != nvars_) throw InvalidParameters("monomial length mismatch");
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coefficient = field_.add(out.back().coefficient, t.coefficient);
      } else {
        if (!out.empty() && field_.is_zero(out.back().coefficient)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field_.is_zero(out.back().coefficient)) out.pop_back();
    terms_ = std::move(out);
  }

  // *this + c * m * b
  Polynomial merge(const Polynomial& b, const Element& c, const Monomial& m) const {
    check_compatible(b);
    Polynomial out(field_, nvars_, order_);
    out.terms_.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size()) {
        out.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial bm = b.terms_[j].monomial * m;
      const int cmp = i == terms_.size() ? -1 : order_.compare(terms_[i].monomial, bm);
      if (cmp > 0) {
        out.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        out.terms_.push_back({bm, field_.mul(c, b.terms_[j++].coefficient)});
      } else {
        Element s = field_.add(terms_[i].coefficient, field_.mul(c, b.terms_[j].coefficient));
        if (!field_.is_zero(s)) out.terms_.push_back({bm, std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  F field_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

// Canonical variable names x0, x1, ...
std::vector<std::string> default_variable_names(std::size_t n);

// Parses text with the grammar
//   term  ::= [coeff] {'*'} factor {'*' factor} | coeff
//   factor::= var ['^' uint]
//   coeff ::= ['-'] uint ['/' uint]
// with terms joined by '+' or '-'. Whitespace is ignored. Variable names are
// mapped positionally onto x0..x{n-1}.
template <Field F>
Polynomial<F> parse(std::string_view text, const std::vector<std::string>& vars, const F& field,
                    MonomialOrder order = MonomialOrder::grevlex());

template <Field F>
std::string to_string(const Polynomial<F>& f, const std::vector<std::string>& vars = {});

// Decomposition f = sum_d f_d into homogeneous components; zero
// components are absent.
template <Field F>
std::map<unsigned, Polynomial<F>> homogeneous_components(const Polynomial<F>& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  std::map<unsigned, std::vector<typename Polynomial<F>::Term>> buckets;
  for (const auto& t : f.terms()) buckets[t.monomial.degree()].push_back(t);
  std::map<unsigned, Polynomial<F>> out;
  for (auto& [d, ts] : buckets)
    out.emplace(d, Polynomial<F>::from_terms(f.field(), f.nvars(), std::move(ts), f.order()));
  return out;
}

// f(images[0], ..., images[n-1]); every image lives in the same ring.
template <Field F>
Polynomial<F> compose(const Polynomial<F>& f, const std::vector<Polynomial<F>>& images) {
  if (images.size() != f.nvars()) throw InvalidParameters("compose: wrong number of images");
  if (images.empty()) return f;
  const auto& target = images.front();
  Polynomial<F> result(f.field(), target.nvars(), target.order());
  std::vector<std::vector<Polynomial<F>>> powers(images.size());
  for (const auto& t : f.terms()) {
    auto term = Polynomial<F>::constant(f.field(), target.nvars(), t.coefficient, target.order());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial<F>::constant(f.field(), target.nvars(), f.field().one(),
                                                           target.order()));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      term *= pw[e];
    }
    result += term;
  }
  return result;
}

// Linear forms sum_j M(i, j) * y_j for each row i, in m.cols() variables.
template <Field F>
std::vector<Polynomial<F>> linear_forms(const Matrix<F>& m,
                                        MonomialOrder order = MonomialOrder::grevlex()) {
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<typename Polynomial<F>::Term> ts;
    for (std::size_t j = 0; j < m.cols(); ++j)
      ts.push_back({Monomial::variable(m.cols(), j), m(i, j)});
    out.push_back(Polynomial<F>::from_terms(m.field(), m.cols(), std::move(ts), order));
  }
  return out;
}

// f o M, i.e. x -> M x. M must be square and invertible.
template <Field F>
Polynomial<F> linear_substitute(const Polynomial<F>& f, const Matrix<F>& m) {
  if (m.rows() != f.nvars() || m.cols() != f.nvars() || rank(m) != m.rows())
    throw SingularMatrix();
  return compose(f, linear_forms(m, f.order()));
}

template <Field F>
Polynomial<F> partial_derivative(const Polynomial<F>& f, std::size_t i) {
  if (i >= f.nvars()) throw InvalidParameters("derivative variable out of range");
  std::vector<typename Polynomial<F>::Term> ts;
  for (const auto& t : f.terms()) {
    const unsigned e = t.monomial[i];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(i, e - 1);
    ts.push_back({m, f.field().mul(t.coefficient, f.field().from_int(e))});
  }
  return Polynomial<F>::from_terms(f.field(), f.nvars(), std::move(ts), f.order());
}

template <Field F>
std::vector<Polynomial<F>> gradient(const Polynomial<F>& f) {
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

// Coefficient-wise image under a field map.
template <Field F, Field G, class Map>
Polynomial<G> map_coefficients(const Polynomial<F>& f, const G& target, Map&& map) {
  std::vector<typename Polynomial<G>::Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) ts.push_back({t.monomial, map(t.coefficient)});
  return Polynomial<G>::from_terms(target, f.nvars(), std::move(ts), f.order());
}

inline Polynomial<ExtensionField> lift(const Polynomial<PrimeField>& f, const ExtensionField& E) {
  return map_coefficients(f, E, [&](PrimeField::Element a) { return E.embed(a); });
}

// Moves f into `nvars` variables; variable i goes to position index_map[i].
template <Field F>
Polynomial<F> rename_variables(const Polynomial<F>& f, std::size_t nvars,
                               const std::vector<std::size_t>& index_map) {
  std::vector<typename Polynomial<F>::Term> ts;
  for (const auto& t : f.terms()) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < f.nvars(); ++i)
      if (t.monomial[i]) m.set(index_map.at(i), t.monomial[i]);
    ts.push_back({m, t.coefficient});
  }
  return Polynomial<F>::from_terms(f.field(), nvars, std::move(ts), f.order());
}

// Random homogeneous polynomial of degree d with every coefficient sampled.
template <Field F>
Polynomial<F> random_homogeneous(const F& field, std::size_t nvars, unsigned d, Rng& rng,
                                 MonomialOrder order = MonomialOrder::grevlex());

// All exponent vectors of total degree d in n variables, in lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

}  // namespace fano

#include "fano/polynomial_io.inl"
