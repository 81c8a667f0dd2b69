#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fano/prime_field.hpp"

namespace fano {

// Dense univariate polynomial over F_p, coefficients from low to high
// degree. The zero polynomial is the empty vector; trailing zeros are never
// stored by the functions below.
using UPoly = std::vector<PrimeField::Element>;

namespace upoly {

void trim(UPoly& f);
int degree(const UPoly& f);
UPoly monomial(const PrimeField& F, unsigned deg);  // t^deg

UPoly add(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly sub(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly mul(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly scale(const PrimeField& F, const UPoly& a, PrimeField::Element c);
std::pair<UPoly, UPoly> divmod(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly rem(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly monic(const PrimeField& F, const UPoly& a);
UPoly gcd(const PrimeField& F, UPoly a, UPoly b);  // monic
UPoly derivative(const PrimeField& F, const UPoly& a);
PrimeField::Element eval(const PrimeField& F, const UPoly& a, PrimeField::Element x);

UPoly mulmod(const PrimeField& F, const UPoly& a, const UPoly& b, const UPoly& m);
UPoly powmod(const PrimeField& F, UPoly base, const mpz_class& e, const UPoly& m);

// x^(p^i) mod m for i = 1..count, by repeated p-th powering.
std::vector<UPoly> frobenius_powers(const PrimeField& F, const UPoly& m, unsigned count);

// Inverse of a modulo m (gcd(a, m) must be 1).
UPoly invmod(const PrimeField& F, const UPoly& a, const UPoly& m);

// Rabin-style test: m of degree k is irreducible iff gcd(t^(p^i) - t, m) = 1
// for every i <= k/2.
bool is_irreducible(const PrimeField& F, const UPoly& m);

bool is_squarefree(const PrimeField& F, const UPoly& f);

// Splits a monic squarefree f into products of all irreducible factors of
// each degree: result[j] = (product, degree).
std::vector<std::pair<UPoly, unsigned>> distinct_degree_factorization(const PrimeField& F,
                                                                     const UPoly& f);

// Cantor-Zassenhaus splitting of f, a product of irreducibles of degree d.
std::vector<UPoly> equal_degree_factorization(const PrimeField& F, const UPoly& f, unsigned d,
                                              Rng& rng);

// Monic irreducible factors of a squarefree polynomial, sorted by
// (degree, coefficients) so the output does not depend on rng.
std::vector<UPoly> factor_squarefree(const PrimeField& F, const UPoly& f, Rng& rng);

std::string to_string(const PrimeField& F, const UPoly& f, const std::string& var = "t");

}  // namespace upoly
}  // namespace fano
