#include "halfperm/wick/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "halfperm/diagrams/enumerate.hpp"
#include "halfperm/wick/convolution.hpp"
#include "halfperm/wick/wick.hpp"

namespace halfperm {

namespace {

Word random_word(const TracialAlgebra& alg, int n, std::mt19937_64& rng) {
  Word w;
  for (int i = 0; i < n; ++i) w.push_back(alg.random_element(rng));
  return w;
}

std::vector<LinearHalfPerm> all_ncl(int n) {
  std::vector<LinearHalfPerm> out;
  for (int k = 0; k <= n; ++k) {
    auto cell = enum_ncl(n, k, std::max(n, kDefaultEnumerationCap));
    out.insert(out.end(), cell.begin(), cell.end());
  }
  return out;
}

Check numeric(const std::string& identity, const std::string& instance, double residual) {
  std::ostringstream os;
  os << "max residual " << residual;
  return Check{identity, instance, residual < kWickTolerance, os.str(), residual};
}

std::string where(const FockSpace& space, const std::string& rest) { return space.algebra().name() + " " + rest; }

std::string blocks_string(const std::vector<LinearHalfPerm>& v) {
  std::string s;
  for (const auto& h : v) s += (s.empty() ? "" : "; ") + h.to_string();
  return s;
}

}  // namespace

double relative_residual(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const double scale = std::max({1.0, a.norm(), b.norm()});
  return (a - b).norm() / scale;
}

std::vector<Check> check_wick_basics(const FockSpace& space, const WickConfig& cfg) {
  std::vector<Check> out;
  std::mt19937_64 rng(cfg.seed);
  const TracialAlgebra& alg = space.algebra();
  const int L = space.depth();
  for (int n = 1; n <= L; ++n) {
    Word w = random_word(alg, n, rng);
    FockBatch got = apply_wick(space, w, space.vacuum());
    out.push_back(numeric("wick-vacuum", where(space, "n=" + std::to_string(n)),
                          relative_residual(got, space.tensor(w))));
  }
  Element d = alg.random_element(rng);
  FockBatch x = space.random_up_to(L - 1, cfg.random_vectors, rng);
  out.push_back(numeric("wick-degree-one", where(space, "W(d) = p(d) - psi(d)"),
                        relative_residual(apply_wick(space, {d}, x), space.p(d, x) - alg.psi(d) * x)));
  FockBatch basis = space.basis_up_to(L - 1);
  out.push_back(numeric("p-adjoint", where(space, "<p(d)x,y> = <x,p(d*)y>"),
                        relative_residual(space.inner(space.p(d, basis), basis),
                                          space.inner(basis, space.p(alg.star(d), basis)))));
  bool truncated = false;
  space.creation(d, space.random_up_to(L, 1, rng), &truncated);
  out.push_back(Check{"truncation-flag", where(space, "creation out of degree L"), truncated, ""});
  return out;
}

std::vector<Check> check_wick_adjoints(const FockSpace& space, const WickConfig& cfg) {
  std::vector<Check> out;
  std::mt19937_64 rng(cfg.seed + 1);
  const TracialAlgebra& alg = space.algebra();
  for (int n = 1; n <= std::min(cfg.max_word, space.depth()); ++n) {
    Word w = random_word(alg, n, rng);
    FockBatch basis = space.basis_up_to(space.depth() - n);
    FockBatch a = apply_wick(space, w, basis);
    FockBatch b = apply_wick(space, adjoint_word(alg, w), basis);
    out.push_back(numeric("wickadjoints", where(space, "n=" + std::to_string(n)),
                          relative_residual(space.inner(a, basis), space.inner(basis, b))));
  }
  return out;
}

std::vector<Check> check_wick_decomposition(const FockSpace& space, const WickConfig& cfg) {
  std::vector<Check> out;
  std::mt19937_64 rng(cfg.seed + 2);
  const TracialAlgebra& alg = space.algebra();
  const int L = space.depth();
  for (int n = 1; n <= L - 1; ++n) {
    Word w = random_word(alg, n, rng);
    FockBatch x = space.random_up_to(L - n, cfg.random_vectors, rng);
    FockBatch rhs = FockBatch::Zero(x.rows(), x.cols());
    for (const auto& pi : all_ncl(n)) rhs += apply_w_pi(space, pi, w, x);
    out.push_back(numeric("wickdecomposition-b", where(space, "n=" + std::to_string(n)),
                          relative_residual(apply_p_word(space, w, x), rhs)));
  }
  for (int n = 1; n <= L - 2; ++n) {
    Word w = random_word(alg, n, rng);
    Element d0 = alg.random_element(rng);
    Word w0 = w;
    w0.insert(w0.begin(), d0);
    FockBatch x = space.random_up_to(L - n - 1, cfg.random_vectors, rng);
    double worst = 0;
    for (const auto& pi : all_ncl(n)) {
      FockBatch lhs = space.p(d0, apply_w_pi(space, pi, w, x));
      FockBatch rhs = FockBatch::Zero(x.rows(), x.cols());
      for (const auto& ext : prepend_extensions(pi)) rhs += apply_w_pi(space, ext, w0, x);
      worst = std::max(worst, relative_residual(lhs, rhs));
    }
    out.push_back(numeric("wickdecomposition-a", where(space, "n=" + std::to_string(n)), worst));
  }
  return out;
}

std::vector<Check> check_wick_product(const FockSpace& space, const WickConfig& cfg) {
  std::vector<Check> out;
  std::mt19937_64 rng(cfg.seed + 3);
  const TracialAlgebra& alg = space.algebra();
  const int L = space.depth();
  for (int m = 1; m <= cfg.max_word; ++m)
    for (int n = 1; n <= cfg.max_word; ++n) {
      Word d = random_word(alg, m, rng), e = random_word(alg, n, rng);
      Word de = d;
      de.insert(de.end(), e.begin(), e.end());
      double worst = 0;
      bool sizes = true;
      long pairs = 0;
      for (const auto& pi : all_ncl(m))
        for (const auto& sigma : all_ncl(n)) {
          auto conv = convolution(pi, sigma);
          sizes &= conv.size() == static_cast<size_t>(2 * std::min(pi.open_count(), sigma.open_count()) + 1);
          const int raise = pi.open_count() + sigma.open_count();
          if (raise > L - 1) continue;
          ++pairs;
          FockBatch x = space.random_up_to(L - raise, cfg.random_vectors, rng);
          FockBatch lhs = apply_w_pi(space, pi, d, apply_w_pi(space, sigma, e, x));
          FockBatch rhs = FockBatch::Zero(x.rows(), x.cols());
          for (const auto& tau : conv) rhs += apply_w_pi(space, tau, de, x);
          worst = std::max(worst, relative_residual(lhs, rhs));
        }
      const std::string inst = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
      Check c = numeric("wicktheorem", where(space, inst + " (" + std::to_string(pairs) + " pairs)"), worst);
      out.push_back(c);
      out.push_back(Check{"convolution-size", where(space, inst), sizes, "2 min(j,k) + 1"});
    }
  return out;
}

std::vector<Check> check_wick_examples(const FockSpace& space, const WickConfig& cfg) {
  std::vector<Check> out;
  std::mt19937_64 rng(cfg.seed + 4);
  const TracialAlgebra& alg = space.algebra();
  {
    LinearHalfPerm pi(Perm::from_cycles(6, {{1, 2}, {5, 6}}), {1, 4});
    Word w = random_word(alg, 6, rng);
    FockBatch x = space.random_up_to(space.depth() - 2, cfg.random_vectors, rng);
    FockBatch expected = alg.psi(w[2]) * alg.psi(alg.multiply(w[4], w[5])) *
                         apply_wick(space, {alg.multiply(w[0], w[1]), w[3]}, x);
    out.push_back(numeric("w-pi-example", where(space, pi.to_string()),
                          relative_residual(apply_w_pi(space, pi, w, x), expected)));
  }
  {
    LinearHalfPerm pi(Perm::from_cycles(5, {{1, 2}, {3, 4}}), {1, 5});
    LinearHalfPerm sigma(Perm::from_cycles(6, {{1, 2}, {5, 6}}), {1, 4, 5});
    LinearHalfPerm expected(Perm::from_cycles(11, {{1, 2}, {3, 4}, {6, 7}, {10, 11}}), {1, 5, 6, 9, 10});
    auto conv = convolution(pi, sigma);
    out.push_back(Check{"concatenation-example", pi.to_string() + " v0 " + sigma.to_string(),
                        conv.front() == expected, conv.front().to_string()});
    out.push_back(Check{"convolution-size", "j=2,k=3", conv.size() == 5, blocks_string(conv)});
    LinearHalfPerm closed(Perm::from_cycles(2, {{1, 2}}), {});
    out.push_back(Check{"convolution-size", "k=0", convolution(pi, closed).size() == 1 &&
                                                        convolution(closed, sigma).size() == 1, ""});
  }
  {
    LinearHalfPerm two(Perm::identity(2), {1, 2});
    auto conv = convolution(two, two);
    Word d = random_word(alg, 2, rng), e = random_word(alg, 2, rng);
    Word de = d;
    de.insert(de.end(), e.begin(), e.end());
    FockBatch x = space.random_up_to(space.depth() - 4, cfg.random_vectors, rng);
    FockBatch rhs = FockBatch::Zero(x.rows(), x.cols());
    for (const auto& tau : conv) rhs += apply_w_pi(space, tau, de, x);
    Check c = numeric("five-term-convolution", where(space, blocks_string(conv)),
                      relative_residual(apply_w_pi(space, two, d, apply_w_pi(space, two, e, x)), rhs));
    c.pass = c.pass && conv.size() == 5;
    out.push_back(c);
  }
  return out;
}

std::vector<Check> check_split_bijection(int max_n) {
  std::vector<Check> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<LinearHalfPerm> images;
    for (const auto& pi : all_ncl(n)) {
      auto ext = prepend_extensions(pi);
      images.insert(images.end(), ext.begin(), ext.end());
    }
    std::sort(images.begin(), images.end());
    auto target = all_ncl(n + 1);
    std::sort(target.begin(), target.end());
    out.push_back(Check{"four-way-split", "NCL(" + std::to_string(n) + ") -> NCL(" + std::to_string(n + 1) + ")",
                        images == target, std::to_string(images.size()) + " vs " + std::to_string(target.size())});
  }
  return out;
}

std::vector<Check> wick_suite(const WickConfig& cfg) {
  std::vector<Check> out = check_split_bijection(6);
  for (auto alg : {TracialAlgebra::scalars(), TracialAlgebra::matrices(2), TracialAlgebra::diagonal({0.2, 0.3, 0.5})}) {
    FockSpace space(std::move(alg), cfg.depth);
    append(out, check_wick_basics(space, cfg));
    append(out, check_wick_adjoints(space, cfg));
    append(out, check_wick_decomposition(space, cfg));
    append(out, check_wick_product(space, cfg));
    append(out, check_wick_examples(space, cfg));
  }
  return out;
}

}  // namespace halfperm
