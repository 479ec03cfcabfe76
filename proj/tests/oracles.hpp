#pragma once

#include <gmpxx.h>

#include "halfperm/poly/poly_c.hpp"

// Closed forms that do not go through the library's recursions or enumerators.
namespace oracle {

inline mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Marchenko-Pastur moment: sum_k (1/n) C(n,k) C(n,k-1) c^k, the Narayana polynomial.
inline halfperm::PolyC mp_moment(int n) {
  if (n == 0) return halfperm::PolyC(1);
  halfperm::PolyC out;
  for (int k = 1; k <= n; ++k)
    out += halfperm::PolyC::monomial(k, halfperm::Rational(binomial(n, k) * binomial(n, k - 1), n));
  return out;
}

inline mpz_class catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// Number of non-crossing annular (p,q)-permutations: 2pq/(p+q) C(2p-1,p) C(2q-1,q).
inline mpz_class annular_count(int p, int q) {
  mpz_class num = 2 * p * q * binomial(2 * p - 1, p) * binomial(2 * q - 1, q);
  return num / (p + q);
}

}  // namespace oracle
