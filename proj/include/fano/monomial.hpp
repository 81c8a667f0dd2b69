#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

#include "fano/errors.hpp"

namespace fano {

inline constexpr std::size_t kMaxVariables = 24;

// Exponent vector of fixed capacity. Monomials of different lengths never
// meet in one computation; comparing them is a logic error.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVariables) throw InvalidParameters("too many variables");
  }
  Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }
  explicit Monomial(std::span<const unsigned> exps) : Monomial(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned e = 1) {
    Monomial m(nvars);
    m.set(i, e);
    return m;
  }

  std::size_t nvars() const { return n_; }
  unsigned degree() const { return deg_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }

  void set(std::size_t i, unsigned e) {
    if (e > 0xFFFF) throw InvalidParameters("exponent overflow");
    deg_ = deg_ - e_[i] + e;
    e_[i] = static_cast<Exponent>(e);
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] && other.e_[i]) return false;
    return true;
  }

  // Requires other | *this.
  Monomial quotient(const Monomial& other) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, e_[i] - other.e_[i]);
    return r;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, unsigned{a.e_[i]} + b.e_[i]);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::max(a.e_[i], b.e_[i]));
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::min(a.e_[i], b.e_[i]));
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && std::equal(a.e_.begin(), a.e_.begin() + a.n_, b.e_.begin());
  }

  // Plain lexicographic comparison on the raw exponents; used for map keys
  // only, not as a term order.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.e_.begin(), a.e_.begin() + a.n_, b.e_.begin(),
                                        b.e_.begin() + b.n_);
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
    return h;
  }

 private:
  std::array<Exponent, kMaxVariables> e_{};
  std::uint8_t n_ = 0;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Term orders: graded reverse lexicographic (default), lexicographic with
// x0 > x1 > ..., and a block elimination order that first compares the
// grevlex position of the leading `block` variables.
class MonomialOrder {
 public:
  enum class Kind { kGrevlex, kLex, kElimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::kGrevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0); }
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::kElimination, block);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  // Negative when a < b, zero when equal, positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::kGrevlex:
        return grevlex_range(a, b, 0, a.nvars());
      case Kind::kLex:
        for (std::size_t i = 0; i < a.nvars(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::kElimination: {
        const std::size_t split = std::min(block_, a.nvars());
        if (int c = grevlex_range(a, b, 0, split); c != 0) return c;
        return grevlex_range(a, b, split, a.nvars());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  std::size_t block_;
};

}  // namespace fano
