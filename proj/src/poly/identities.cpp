#include "halfperm/poly/identities.hpp"

#include <string>

#include "halfperm/poly/families.hpp"
#include "halfperm/poly/series.hpp"
#include "halfperm/poly/transition_matrix.hpp"

namespace halfperm {

namespace {

std::string nk(int n, int k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }
std::string nn(int n) { return "n=" + std::to_string(n); }

Check exact(const std::string& id, const std::string& inst, const PolyC& lhs, const PolyC& rhs) {
  Check ch{id, inst, lhs == rhs, ""};
  if (!ch.pass) ch.detail = lhs.to_string() + " != " + rhs.to_string();
  return ch;
}

Check exact_x(const std::string& id, const std::string& inst, const PolyXC& lhs, const PolyXC& rhs) {
  Check ch{id, inst, lhs == rhs, ""};
  if (!ch.pass) ch.detail = lhs.to_string() + " != " + rhs.to_string();
  return ch;
}

Check exact_s(const std::string& id, const std::string& inst, const SeriesZ& lhs, const SeriesZ& rhs) {
  Check ch{id, inst, lhs == rhs, ""};
  if (ch.pass) return ch;
  for (int i = 0; i <= lhs.order(); ++i)
    if (lhs[i] != rhs[i]) {
      ch.detail = "first mismatch at z^" + std::to_string(i);
      break;
    }
  return ch;
}

// Entry with the zero convention outside 0 <= k <= n < size.
struct Entries {
  const TransitionMatrix& m;
  PolyC operator()(int n, int k) const {
    if (n < 0 || k < 0 || k > n || n >= m.size()) return {};
    return m(n, k);
  }
};

}  // namespace

std::vector<Check> check_polynomial_identities(int size) {
  std::vector<Check> out;
  const PolyC c = PolyC::c();
  const PolyC one_c = PolyC(1) + c;

  const TransitionMatrix gt = transition_matrix(Family::GammaTilde, size + 1);
  const TransitionMatrix gm = transition_matrix(Family::Gamma, size);
  const TransitionMatrix pm = transition_matrix(Family::Pi, size + 1);
  const TransitionMatrix gti = invert_unitriangular(gt);
  const TransitionMatrix gmi = invert_unitriangular(gm);
  const TransitionMatrix pmi = invert_unitriangular(pm);
  Entries gp{gt}, g{gti}, pp{pm}, p{pmi}, qp{gm};

  for (int n = 0; n + 1 <= size; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      if (n == 1) {
        out.push_back(exact("geq2", nk(n, k), gp(1, k - 1), gp(2, k) + one_c * gp(1, k) + 2L * c * gp(0, k)));
      } else {
        out.push_back(
            exact("geq1", nk(n, k), gp(n, k - 1), gp(n + 1, k) + one_c * gp(n, k) + c * gp(n - 1, k)));
      }
      if (n == 0) continue;
      PolyC rhs_pi = pp(n + 1, k) + one_c * pp(n, k) + c * pp(n - 1, k);
      out.push_back(exact("pi-recurrence", nk(n, k), pp(n, k - 1), rhs_pi));
    }
  }
  for (int n = 0; n + 1 < size; ++n) {
    out.push_back(exact("geq4", nn(n), g(n + 1, 0), one_c * g(n, 0) + 2L * c * g(n, 1)));
    out.push_back(exact("Prec2", nn(n), p(n + 1, 0), c * p(n, 0) + c * p(n, 1)));
    for (int k = 1; k <= n + 1; ++k) {
      out.push_back(exact("geq3", nk(n, k), g(n + 1, k), g(n, k - 1) + one_c * g(n, k) + c * g(n, k + 1)));
      out.push_back(exact("Prec1", nk(n, k), p(n + 1, k), p(n, k - 1) + one_c * p(n, k) + c * p(n, k + 1)));
    }
  }

  // The inverse of Gamma agrees with the inverse of the tilde family off column 0.
  for (int n = 0; n < size; ++n)
    for (int k = 1; k <= n; ++k) out.push_back(exact("q-equals-g", nk(n, k), gmi(n, k), gti(n, k)));

  auto gts = family_members(Family::GammaTilde, size);
  auto gms = family_members(Family::Gamma, size);
  auto pis = family_members(Family::Pi, size);
  for (int n = 2; n < size; ++n)
    out.push_back(exact_x("gamma-pi", nn(n), gts[n] + gts[n - 1], pis[n] - PolyXC::constant(c) * pis[n - 2]));
  // d_n + d_{n-1} vanishes only from n = 3 on.
  for (int n = 3; n < size; ++n)
    out.push_back(exact_x("firstsecond", nn(n), gms[n] + gms[n - 1], pis[n] - PolyXC::constant(c) * pis[n - 2]));
  for (int n = 3; n < size; ++n)
    out.push_back(exact("d-telescoping", nn(n), d_constant(n) + d_constant(n - 1), PolyC()));

  // Moments of the Marchenko-Pastur law are column 0 of the Pi inverse, up to degree 2(size-1).
  const TransitionMatrix big = invert_unitriangular(transition_matrix(Family::Pi, 2 * size));
  auto moment = [&](int j) { return big(j, 0); };
  for (int n = 1; n < size; ++n) {
    PolyC pi_mean, gamma_mean;
    for (int k = 0; k <= n; ++k) {
      pi_mean += pp(n, k) * moment(k);
      gamma_mean += qp(n, k) * moment(k);
    }
    out.push_back(exact("centering-pi", nn(n), pi_mean, PolyC()));
    out.push_back(exact("centering-gamma", nn(n), gamma_mean, PolyC()));
  }
  for (int n = 0; n < size; ++n) {
    PolyC norm;
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j) norm += pp(n, k) * pp(n, j) * moment(k + j);
    out.push_back(exact("norm-pi", nn(n), norm, c.pow(n)));
  }

  for (Family f : {Family::GammaTilde, Family::Gamma, Family::Pi}) {
    TransitionMatrix m = transition_matrix(f, size);
    TransitionMatrix inv = invert_unitriangular(m);
    out.push_back(Check{"double-inverse", family_name(f), invert_unitriangular(inv) == m, ""});
    out.push_back(Check{"product-identity", family_name(f), (m * inv).is_identity(), ""});
    out.push_back(Check{"integrality", family_name(f), m.is_integral() && inv.is_integral(), ""});
  }
  return out;
}

std::vector<Check> check_series_identities(int order) {
  std::vector<Check> out;
  const PolyC c = PolyC::c();
  const PolyC one_c = PolyC(1) + c;
  const SeriesZ one = SeriesZ::constant(order, PolyC(1));
  const SeriesZ z = SeriesZ::z(order);
  const SeriesZ shift = one - one_c * z;  // z (z^-1 - (1 + c))

  const int size = order + 1;
  const TransitionMatrix gti = invert_unitriangular(transition_matrix(Family::GammaTilde, size));
  const TransitionMatrix pmi = invert_unitriangular(transition_matrix(Family::Pi, size));

  const SeriesZ p0 = series_P0(order);
  out.push_back(exact_s("functional-equation", "P0", shift * (p0 - one), z * ((p0 - one) * (p0 - one)) + c * z));

  std::vector<SeriesZ> P, G;
  for (int k = 0; k <= order; ++k) {
    P.push_back(series_P(k, order));
    G.push_back(series_G(k, order));
  }
  for (int k = 0; k <= order; ++k) {
    SeriesZ col_p(order), col_g(order);
    for (int n = k; n <= order; ++n) {
      col_p[n] = pmi(n, k);
      col_g[n] = gti(n, k);
    }
    out.push_back(exact_s("P_k-power", "k=" + std::to_string(k), P[k], col_p));
    out.push_back(exact_s("power1", "n=" + std::to_string(k), G[k], col_g));
  }
  out.push_back(exact_s("Prec2-series", "k=0", p0 - one, c * (z * (P[0] + P[1]))));
  out.push_back(exact_s("Grec2", "k=0", 2L * c * (z * G[1]), shift * G[0] - one));
  for (int k = 1; k < order; ++k) {
    out.push_back(exact_s("Prec3", "k=" + std::to_string(k), c * (z * P[k + 1]), shift * P[k] - z * P[k - 1]));
    out.push_back(exact_s("Grec1", "k=" + std::to_string(k), c * (z * G[k + 1]), shift * G[k] - z * G[k - 1]));
  }
  return out;
}

}  // namespace halfperm
