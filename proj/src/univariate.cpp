#include "fano/univariate.hpp"

#include <algorithm>
#include <sstream>

namespace fano::upoly {

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly monomial(const PrimeField&, unsigned deg) {
  UPoly r(deg + 1, 0);
  r[deg] = 1;
  return r;
}

UPoly add(const PrimeField& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

UPoly sub(const PrimeField& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

UPoly mul(const PrimeField& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  const std::uint64_t p = F.characteristic();
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  UPoly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<PrimeField::Element>(acc[i]);
  trim(r);
  return r;
}

UPoly scale(const PrimeField& F, const UPoly& a, PrimeField::Element c) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const PrimeField& F, const UPoly& a, const UPoly& b) {
  if (b.empty()) throw ZeroInversion();
  UPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {UPoly{}, r};
  UPoly q(r.size() - b.size() + 1, 0);
  const auto lead_inv = F.inv(b.back());
  for (std::size_t i = r.size(); i-- >= b.size();) {
    auto c = F.mul(r[i], lead_inv);
    if (c == 0) continue;
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

UPoly rem(const PrimeField& F, const UPoly& a, const UPoly& b) { return divmod(F, a, b).second; }

UPoly monic(const PrimeField& F, const UPoly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

UPoly gcd(const PrimeField& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

UPoly derivative(const PrimeField& F, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_int(static_cast<std::int64_t>(i)));
  trim(r);
  return r;
}

PrimeField::Element eval(const PrimeField& F, const UPoly& a, PrimeField::Element x) {
  PrimeField::Element acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

UPoly mulmod(const PrimeField& F, const UPoly& a, const UPoly& b, const UPoly& m) {
  return rem(F, mul(F, a, b), m);
}

UPoly powmod(const PrimeField& F, UPoly base, const mpz_class& e, const UPoly& m) {
  UPoly result{1};
  result = rem(F, result, m);
  base = rem(F, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(F, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(F, result, base, m);
  }
  return result;
}

std::vector<UPoly> frobenius_powers(const PrimeField& F, const UPoly& m, unsigned count) {
  std::vector<UPoly> out;
  UPoly h{0, 1};
  const mpz_class p = F.characteristic();
  for (unsigned i = 0; i < count; ++i) {
    h = powmod(F, h, p, m);
    out.push_back(h);
  }
  return out;
}

UPoly invmod(const PrimeField& F, const UPoly& a, const UPoly& m) {
  // Extended Euclid tracking the coefficient of a.
  UPoly r0 = m, r1 = rem(F, a, m);
  UPoly s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(F, r0, r1);
    UPoly s = sub(F, s0, mul(F, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw ZeroInversion();
  return rem(F, scale(F, s0, F.inv(r0[0])), m);
}

bool is_irreducible(const PrimeField& F, const UPoly& m) {
  const int k = degree(m);
  if (k <= 0) return false;
  if (k == 1) return true;
  const UPoly t{0, 1};
  auto powers = frobenius_powers(F, m, static_cast<unsigned>(k / 2));
  for (const auto& h : powers) {
    if (degree(gcd(F, sub(F, h, t), m)) != 0) return false;
  }
  return true;
}

bool is_squarefree(const PrimeField& F, const UPoly& f) {
  if (degree(f) <= 0) return true;
  return degree(gcd(F, f, derivative(F, f))) == 0;
}

std::vector<std::pair<UPoly, unsigned>> distinct_degree_factorization(const PrimeField& F,
                                                                     const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  UPoly rest = monic(F, f);
  const UPoly t{0, 1};
  UPoly h = t;
  const mpz_class p = F.characteristic();
  for (unsigned i = 1; degree(rest) >= 2 * static_cast<int>(i); ++i) {
    h = powmod(F, h, p, rest);
    UPoly g = gcd(F, sub(F, h, t), rest);
    if (degree(g) > 0) {
      out.emplace_back(g, i);
      rest = divmod(F, rest, g).first;
      h = rem(F, h, rest);
    }
  }
  if (degree(rest) > 0) out.emplace_back(rest, static_cast<unsigned>(degree(rest)));
  return out;
}

std::vector<UPoly> equal_degree_factorization(const PrimeField& F, const UPoly& f, unsigned d,
                                              Rng& rng) {
  const int n = degree(f);
  if (n <= static_cast<int>(d)) return {monic(F, f)};
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), F.characteristic(), d);
  const mpz_class e = (q - 1) / 2;
  for (;;) {
    UPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = F.sample(rng);
    trim(a);
    if (degree(a) <= 0) continue;
    UPoly b = sub(F, powmod(F, a, e, f), UPoly{1});
    UPoly g = gcd(F, b, f);
    if (degree(g) > 0 && degree(g) < n) {
      auto left = equal_degree_factorization(F, g, d, rng);
      auto right = equal_degree_factorization(F, divmod(F, f, g).first, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<UPoly> factor_squarefree(const PrimeField& F, const UPoly& f, Rng& rng) {
  std::vector<UPoly> out;
  for (const auto& [block, d] : distinct_degree_factorization(F, f)) {
    for (auto& g : equal_degree_factorization(F, block, d, rng)) out.push_back(monic(F, g));
  }
  std::sort(out.begin(), out.end(), [](const UPoly& a, const UPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::string to_string(const PrimeField&, const UPoly& f, const std::string& var) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << f[i];
    } else {
      if (f[i] != 1) os << f[i] << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace fano::upoly
