#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fano/errors.hpp"
#include "fano/field.hpp"
#include "fano/linalg.hpp"
#include "fano/polynomial.hpp"

namespace fano {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// Point of P^N stored with its first nonzero coordinate scaled to 1.
template <Field F>
class ProjectivePoint {
 public:
  using Element = typename F::Element;

  ProjectivePoint(F field, std::vector<Element> coords)
      : field_(std::move(field)), coords_(std::move(coords)) {
    std::size_t i = 0;
    while (i < coords_.size() && field_.is_zero(coords_[i])) ++i;
    if (i == coords_.size()) throw InvalidParameters("projective point with all coordinates zero");
    pivot_ = i;
    if (!field_.equal(coords_[i], field_.one())) {
      const auto inv = field_.inv(coords_[i]);
      for (std::size_t j = i; j < coords_.size(); ++j) coords_[j] = field_.mul(coords_[j], inv);
    }
  }

  const F& field() const { return field_; }
  std::size_t ambient_dimension() const { return coords_.size() - 1; }
  const std::vector<Element>& coords() const { return coords_; }
  const Element& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t pivot() const { return pivot_; }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coords_) out.push_back(field_.to_string(c));
    return out;
  }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.coords_.size() != b.coords_.size()) return false;
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
      if (!a.field_.equal(a.coords_[i], b.coords_[i])) return false;
    return true;
  }

 private:
  F field_;
  std::vector<Element> coords_;
  std::size_t pivot_ = 0;
};

template <Field F>
bool vanishes_at(const Polynomial<F>& f, const ProjectivePoint<F>& y) {
  return f.field().is_zero(f.evaluate(y.coords()));
}

// Coordinate-wise Frobenius a -> a^p.
inline ProjectivePoint<ExtensionField> frobenius(const ProjectivePoint<ExtensionField>& y) {
  std::vector<ExtensionField::Element> c;
  for (const auto& a : y.coords()) c.push_back(y.field().frobenius(a));
  return ProjectivePoint<ExtensionField>(y.field(), std::move(c));
}

// Degree over F_p of the field generated by the point's coordinates.
unsigned residue_degree(const ProjectivePoint<ExtensionField>& y);

// Linear subspace of P^N cut out by independent linear forms.
template <Field F>
class LinearSubspace {
 public:
  LinearSubspace(std::size_t ambient, std::vector<Polynomial<F>> forms)
      : ambient_(ambient), forms_(std::move(forms)) {
    if (forms_.empty()) return;
    Matrix<F> m(forms_.front().field(), forms_.size(), ambient_ + 1);
    for (std::size_t r = 0; r < forms_.size(); ++r) {
      if (forms_[r].nvars() != ambient_ + 1 || forms_[r].degree() != 1 ||
          !forms_[r].is_homogeneous())
        throw InvalidParameters("linear subspace needs homogeneous linear forms");
      for (const auto& t : forms_[r].terms())
        for (std::size_t c = 0; c <= ambient_; ++c)
          if (t.monomial[c]) m(r, c) = t.coefficient;
    }
    if (rank(m) != forms_.size()) throw InvalidParameters("linear forms are dependent");
  }

  // Subspace {x_i = 0 for i in indices}.
  static LinearSubspace coordinate(const F& field, std::size_t ambient,
                                   const std::vector<std::size_t>& indices) {
    std::vector<Polynomial<F>> forms;
    for (auto i : indices) forms.push_back(Polynomial<F>::variable(field, ambient + 1, i));
    return LinearSubspace(ambient, std::move(forms));
  }

  std::size_t ambient_dimension() const { return ambient_; }
  int dimension() const { return static_cast<int>(ambient_) - static_cast<int>(forms_.size()); }
  const std::vector<Polynomial<F>>& forms() const { return forms_; }

  bool contains(const ProjectivePoint<F>& y) const {
    for (const auto& f : forms_)
      if (!vanishes_at(f, y)) return false;
    return true;
  }

 private:
  std::size_t ambient_;
  std::vector<Polynomial<F>> forms_;
};

// Invertible M with M * e0 = y: column 0 is y, the remaining columns are
// the unit vectors e_j for j != pivot(y), in increasing order.
template <Field F>
Matrix<F> move_to_base_point(const ProjectivePoint<F>& y) {
  const std::size_t n = y.coords().size();
  Matrix<F> m(y.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, 0) = y[i];
  std::size_t col = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == y.pivot()) continue;
    m(j, col++) = y.field().one();
  }
  return m;
}

// Parametrization (u:v) -> u*y + v*y' of the line through two points.
template <Field F>
class LineParametrization {
 public:
  using Element = typename F::Element;

  LineParametrization(const ProjectivePoint<F>& y, const ProjectivePoint<F>& y2)
      : field_(y.field()), a_(y.coords()), b_(y2.coords()) {
    if (y == y2) throw EqualPoints();
  }

  ProjectivePoint<F> point(const Element& u, const Element& v) const {
    std::vector<Element> c;
    for (std::size_t i = 0; i < a_.size(); ++i)
      c.push_back(field_.add(field_.mul(u, a_[i]), field_.mul(v, b_[i])));
    return ProjectivePoint<F>(field_, std::move(c));
  }

  // f restricted to the line, as a binary form in (u, v).
  Polynomial<F> restrict(const Polynomial<F>& f) const {
    std::vector<Polynomial<F>> images;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      std::vector<typename Polynomial<F>::Term> ts{{Monomial{1, 0}, a_[i]}, {Monomial{0, 1}, b_[i]}};
      images.push_back(Polynomial<F>::from_terms(field_, 2, std::move(ts), f.order()));
    }
    return compose(f, images);
  }

 private:
  F field_;
  std::vector<Element> a_;
  std::vector<Element> b_;
};

template <Field F>
LineParametrization<F> line_through(const ProjectivePoint<F>& y, const ProjectivePoint<F>& y2) {
  return LineParametrization<F>(y, y2);
}

// #P^N(F_q) = (q^{N+1} - 1) / (q - 1), or nullopt on 64-bit overflow.
std::optional<std::uint64_t> projective_point_count(std::uint64_t q, std::size_t n);

// Random-access enumeration of P^N(F_q). Points are ordered by pivot
// position (the index of the leading 1) and, within a pivot stratum,
// lexicographically in the free coordinates, most significant first.
template <FiniteField F>
class ProjectiveEnumerator {
 public:
  using Element = typename F::Element;

  ProjectiveEnumerator(F field, std::size_t n, std::uint64_t budget = kDefaultEnumerationBudget)
      : field_(std::move(field)), n_(n) {
    auto q = field_size();
    auto count = q ? projective_point_count(*q, n) : std::nullopt;
    if (!count || *count > budget)
      throw BudgetExceeded("P^" + std::to_string(n) + " over a field of degree " +
                           std::to_string(field_.degree()) + " exceeds enumeration budget " +
                           std::to_string(budget));
    q_ = *q;
    count_ = *count;
    // Stratum j holds q^{n-j} points.
    std::uint64_t start = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      stratum_start_.push_back(start);
      std::uint64_t size = 1;
      for (std::size_t i = j; i < n; ++i) size *= q_;
      start += size;
    }
  }

  const F& field() const { return field_; }
  std::size_t ambient_dimension() const { return n_; }
  std::uint64_t count() const { return count_; }

  // Writes the canonical coordinates of point `index` into out (size n+1).
  void coords_at(std::uint64_t index, std::vector<Element>& out) const {
    std::size_t j = n_;
    while (stratum_start_[j] > index) --j;
    std::uint64_t rest = index - stratum_start_[j];
    out.assign(n_ + 1, field_.zero());
    out[j] = field_.one();
    for (std::size_t i = n_; i > j; --i) {
      out[i] = field_.element_at(rest % q_);
      rest /= q_;
    }
  }

  // Steps coordinates of point i (as written by coords_at) to point i+1,
  // which must exist.
  void advance(std::vector<Element>& c) const {
    std::size_t j = 0;
    while (field_.is_zero(c[j])) ++j;
    for (std::size_t i = n_; i > j; --i) {
      const std::uint64_t d = field_.index_of(c[i]) + 1;
      if (d < q_) {
        c[i] = field_.element_at(d);
        return;
      }
      c[i] = field_.zero();
    }
    c[j] = field_.zero();
    c[j + 1] = field_.one();
  }

  ProjectivePoint<F> point_at(std::uint64_t index) const {
    std::vector<Element> c;
    coords_at(index, c);
    return ProjectivePoint<F>(field_, std::move(c));
  }

  std::uint64_t index_of(const ProjectivePoint<F>& y) const {
    const std::size_t j = y.pivot();
    std::uint64_t rest = 0;
    for (std::size_t i = j + 1; i <= n_; ++i) rest = rest * q_ + field_.index_of(y[i]);
    return stratum_start_[j] + rest;
  }

  // fn(index, coords) for every index in [begin, end).
  template <class Fn>
  void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    if (begin >= end) return;
    std::vector<Element> c;
    coords_at(begin, c);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (idx != begin) advance(c);
      fn(idx, static_cast<const std::vector<Element>&>(c));
    }
  }

 private:
  std::optional<std::uint64_t> field_size() const {
    if constexpr (requires { field_.size(); }) {
      return std::optional<std::uint64_t>(field_.size());
    } else {
      return std::nullopt;
    }
  }

  F field_;
  std::size_t n_;
  std::uint64_t q_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> stratum_start_;
};

}  // namespace fano
