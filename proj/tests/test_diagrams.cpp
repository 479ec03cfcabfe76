#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "halfperm/diagrams/annular.hpp"
#include "halfperm/diagrams/contractions.hpp"
#include "halfperm/diagrams/dots.hpp"
#include "halfperm/diagrams/enumerate.hpp"
#include "halfperm/diagrams/figures.hpp"
#include "halfperm/diagrams/recursion_maps.hpp"
#include "halfperm/diagrams/serialize.hpp"
#include "halfperm/diagrams/verify.hpp"
#include "halfperm/poly/transition_matrix.hpp"
#include "oracles.hpp"

using namespace halfperm;

namespace {

void expect_all_pass(const std::vector<Check>& checks) {
  ASSERT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.identity << " " << c.instance << " " << c.detail;
}

// Every permutation of [n], by brute force.
std::vector<Perm> all_perms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST(NonCrossing, GenusConditionByBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    std::set<Perm> brute;
    const Perm gamma = Perm::long_cycle(n);
    for (const Perm& p : all_perms(n))
      if (p.cycle_count() + (gamma * p.inverse()).cycle_count() == n + 1) brute.insert(p);
    const auto listed = enum_nc(n);
    EXPECT_EQ(std::set<Perm>(listed.begin(), listed.end()), brute) << "n=" << n;
    EXPECT_EQ(mpz_class(static_cast<long>(listed.size())), oracle::catalan(n));
  }
}

TEST(NonCrossing, BlockWeightIsNarayana) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(weighted_count(enum_nc(n), Weight::AllBlocks), oracle::mp_moment(n));
}

TEST(NonCrossing, KrewerasExample) {
  const Perm p = Perm::from_cycles(5, {{1, 2, 3}, {4}, {5}});
  EXPECT_EQ(kreweras(p), Perm::from_cycles(5, {{1, 4, 5}, {2}, {3}}));
}

TEST(Annular, ConnectedGenusZeroByBruteForce) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; m + n <= 6; ++n) {
      std::set<Perm> brute;
      const Perm gamma = Perm::annular_long_cycle(m, n);
      for (const Perm& p : all_perms(m + n)) {
        if (p.cycle_count() + (gamma * p.inverse()).cycle_count() != m + n) continue;
        bool connects = false;
        for (const auto& cyc : p.cycles()) {
          const bool outer = std::any_of(cyc.begin(), cyc.end(), [&](int i) { return i <= m; });
          const bool inner = std::any_of(cyc.begin(), cyc.end(), [&](int i) { return i > m; });
          connects |= outer && inner;
        }
        if (connects) brute.insert(p);
      }
      std::set<Perm> listed;
      for (const auto& a : enum_snc(m, n)) listed.insert(a.perm());
      EXPECT_EQ(listed, brute) << "m=" << m << " n=" << n;
    }
}

TEST(Annular, CountsMatchClosedForm) {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; m + n <= 10; ++n)
      EXPECT_EQ(mpz_class(static_cast<long>(enum_snc(m, n).size())), oracle::annular_count(m, n)) << m << "," << n;
}

TEST(Annular, KnownWeights) {
  const PolyC c = PolyC::c();
  EXPECT_EQ(weighted_count(enum_snc(1, 1), Weight::AllBlocks), c);
  EXPECT_EQ(weighted_count(enum_snc(2, 1), Weight::AllBlocks), PolyC::from_ints({0, 2, 2}));
  EXPECT_EQ(weighted_count(enum_snc(2, 2), Weight::AllBlocks), PolyC::from_ints({0, 4, 10, 4}));
}

TEST(HalfPerms, CircularCountsFollowDotFormula) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      mpz_class expected = 0;
      for (int j = 0; j + k <= n; ++j) expected += oracle::binomial(n, j) * oracle::binomial(n, j + k);
      EXPECT_EQ(mpz_class(static_cast<long>(enum_ncc(n, k).size())), expected) << n << "," << k;
    }
}

TEST(HalfPerms, SpecExamples) {
  EXPECT_EQ(enum_ncc(2, 1).size(), 4u);
  EXPECT_EQ(weighted_count(enum_ncc(2, 1), Weight::ClosedBlocks), PolyC::from_ints({2, 2}));
  EXPECT_EQ(weighted_count(enum_ncl(2, 1), Weight::ClosedBlocks), PolyC::from_ints({1, 2}));
}

TEST(HalfPerms, WeightsReproduceInverseTables) {
  const TransitionMatrix gt = invert_unitriangular(transition_matrix(Family::GammaTilde, 7));
  const TransitionMatrix pi = invert_unitriangular(transition_matrix(Family::Pi, 7));
  for (int n = 1; n < 7; ++n)
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(weighted_count(enum_ncc(n, k), Weight::ClosedBlocks), gt(n, k)) << n << "," << k;
      EXPECT_EQ(weighted_count(enum_ncl(n, k), Weight::ClosedBlocks), pi(n, k)) << n << "," << k;
    }
}

TEST(Dots, RoundTrip) {
  for (int k = 1; k <= 4; ++k)
    for (const auto& h : enum_ncc(4, k)) {
      const DotStructure d = dot_encode(h);
      EXPECT_TRUE(d.well_formed());
      EXPECT_EQ(d.k(), k);
      EXPECT_EQ(dot_decode(d), h);
      EXPECT_EQ(DotStructure::parse(d.to_string()), d);
    }
}

TEST(CutReassemble, EveryAnnularPermRebuildsFromItsHalves) {
  for (const auto& a : enum_snc(3, 2)) {
    const auto [outer, inner] = cut(a);
    EXPECT_EQ(outer.open_count(), inner.open_count());
    int hits = 0;
    for (int s = 1; s <= outer.open_count(); ++s) hits += reassemble(outer, inner, s) == a;
    EXPECT_EQ(hits, 1) << a.to_string();
  }
}

TEST(Serialize, RoundTrips) {
  for (const auto& a : enum_snc(2, 2)) EXPECT_EQ(annular_from_json(to_json(a)), a);
  for (const auto& h : enum_ncc(4, 2)) EXPECT_EQ(circular_from_json(to_json(h)), h);
  for (const auto& h : enum_ncl(4, 1)) EXPECT_EQ(linear_from_json(to_json(h)), h);
  for (const auto& p : enum_nc(4)) EXPECT_EQ(perm_from_json(to_json(p)), p);
}

TEST(Caps, ExceedingTheCapThrows) {
  EXPECT_THROW(enum_nc(kDefaultEnumerationCap + 1), CapExceeded);
  EXPECT_THROW(enum_snc(8, 8), CapExceeded);
}

TEST(Spokes, DiagonalVariance) { expect_all_pass(check_spoke_weights(5)); }
TEST(Suites, Oracles) { expect_all_pass(check_oracles(7, 8)); }
TEST(Suites, Kreweras) { expect_all_pass(check_kreweras(8)); }
TEST(Suites, DotBijections) { expect_all_pass(check_dot_bijections(6)); }
TEST(Suites, CutReassemble) { expect_all_pass(check_cut_reassemble(7)); }
TEST(Suites, CircularRecursion) { expect_all_pass(check_circular_recursion(7)); }
TEST(Suites, LinearRecursion) { expect_all_pass(check_linear_recursion(7)); }
TEST(Suites, LinearDecomposition) { expect_all_pass(check_lineardecomp(10)); }
TEST(Suites, RestrictionDecomposition) { expect_all_pass(check_decomposition_theorem(6)); }
TEST(Suites, Contractions) {
  expect_all_pass(check_lemma17(3, 2));
  expect_all_pass(check_lemma18());
  expect_all_pass(check_covariance_contractions());
}
TEST(Suites, Figures) { expect_all_pass(check_figure_fixtures()); }
