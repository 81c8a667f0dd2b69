#include "fano/polynomial.hpp"

namespace fano {

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

namespace {

void fill_monomials(std::size_t nvars, std::size_t var, unsigned remaining, Monomial& cur,
                    std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.set(var, e);
    fill_monomials(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  fill_monomials(nvars, 0, d, cur, out);
  return out;
}

}  // namespace fano
