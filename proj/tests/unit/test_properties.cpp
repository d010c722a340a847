#include <gtest/gtest.h>

#include "chowkit/error.hpp"
#include "f4_rings.hpp"
#include "properties.hpp"

using namespace chowkit;
using namespace chowkit::testing;

namespace {

std::vector<std::vector<int>> cartan_rows(const CartanMatrix& c) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(c.rank()));
  for (int i = 0; i < c.rank(); ++i) {
    for (int j = 0; j < c.rank(); ++j) out[static_cast<std::size_t>(i)].push_back(c(i, j));
  }
  return out;
}

std::vector<std::vector<int>> transposed(std::vector<std::vector<int>> m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) std::swap(m[i][j], m[j][i]);
  }
  return m;
}

void expect_passed(const PropertyResult& r) {
  EXPECT_TRUE(r.passed()) << r.name << ": " << r.failures << " of " << r.cases << " failed, first: "
                          << r.first_failure;
}

}  // namespace

TEST(Properties, FullSuiteAtTheFixedSeed) {
  const auto results = run_property_suite(f4_rings());
  int cases = 0;
  for (const auto& r : results) {
    expect_passed(r);
    cases += r.cases;
  }
  EXPECT_GE(cases, 1000);
}

TEST(Properties, SuiteAtAnotherSeed) {
  for (const auto& r : run_property_suite(f4_rings(), kSeed ^ 0x5eedULL)) expect_passed(r);
}

TEST(Properties, DividedDifferencesOnOtherTypes) {
  for (const char* type : {"B3", "C3", "G2", "D4"}) {
    const auto sys = named_root_system(type);
    const WeylGroup group(sys);
    const DividedDifferenceEngine engine(sys);
    Rng rng(kSeed);
    expect_passed(prop_reduced_word_invariance(rng, group, engine, 5));
    expect_passed(prop_length_vs_word(rng, group, 200));
  }
}

TEST(Oracle, SmallRankFlagVarieties) {
  for (const char* type : {"A2", "B2", "G2", "A3", "B3", "C3"}) expect_passed(prop_small_rank_oracle(type));
}

TEST(Oracle, PartialFlagRingsEmbedInTheFullFlag) {
  // Pulling back along G/B -> G/P is a ring map sending [X_w] to [X_w].
  const auto group = std::make_shared<const WeylGroup>(named_root_system("B3"));
  const ChowRing full(group, ParabolicSubset{});
  for (const auto& theta : {ParabolicSubset({1, 2}), ParabolicSubset({0, 2}), ParabolicSubset({0})}) {
    const ChowRing part(group, theta);
    for (int a = 0; a < part.size(); ++a) {
      for (int b = 0; b < part.size(); ++b) {
        if (part.codim(a) + part.codim(b) > part.dimension()) continue;
        const ChowElement small = part.multiply_basis(a, b);
        ChowElement lifted;
        for (const auto& [k, c] : small.terms()) lifted.add(full.index_of(part.schubert_class(k).rep), c);
        const int fa = full.index_of(part.schubert_class(a).rep);
        const int fb = full.index_of(part.schubert_class(b).rep);
        EXPECT_EQ(full.multiply_basis(fa, fb), lifted) << theta.to_string();
      }
    }
  }
}

// The checks must notice deliberately broken inputs.
TEST(Mutation, OracleNoticesATransposedCartanMatrix) {
  for (const char* type : {"B3", "G2"}) {
    const auto group = std::make_shared<const WeylGroup>(named_root_system(type));
    const ChowRing ring(group, ParabolicSubset{});
    expect_passed(prop_oracle_agreement(ring, cartan_rows(group->system()->cartan())));
    EXPECT_FALSE(prop_oracle_agreement(ring, transposed(cartan_rows(group->system()->cartan()))).passed()) << type;
  }
}

TEST(Mutation, PerturbedProjectorIsRejected) {
  const auto& r = f4_rings();
  const auto shown = f4::displayed_idempotents(r);
  Correspondence p = shown.p[1];
  ASSERT_TRUE(is_idempotent(p));
  p.add(r.x1->find("h1^4"), r.x1->find("h2^11"), 1);
  EXPECT_FALSE(is_idempotent(p));
  EXPECT_FALSE(is_idempotent(p, 3));
  Correspondence q = shown.q[2];
  ASSERT_TRUE(are_orthogonal(q, shown.q[3]));
  EXPECT_FALSE(are_orthogonal(q + shown.q[3], shown.q[3]));
}

TEST(Mutation, FlippedSignBreaksTheIsomorphism) {
  const auto& r = f4_rings();
  for (int eps : {1, -1}) {
    const Correspondence J = f4::build_J(r, eps);
    ASSERT_TRUE(congruent(compose(transpose(J), J), diagonal(r.x1), 3));
    for (const auto& [key, c] : J.terms()) {
      Correspondence broken = J;
      broken.add(key.first, key.second, -2 * c);
      const bool still_inverse = congruent(compose(transpose(broken), broken), diagonal(r.x1), 3) &&
                                 congruent(compose(broken, transpose(broken)), diagonal(r.x4), 3);
      EXPECT_FALSE(still_inverse) << "sign flip at " << r.x1->label(key.first);
    }
  }
}

TEST(Mutation, CompositionOrderMatters) {
  const auto& r = f4_rings();
  const Correspondence a = parse_correspondence(r.x1, r.x1, "h1^4 x h1^11");
  const Correspondence b = parse_correspondence(r.x1, r.x1, "h2^4 x h1^11");
  // One of h1^4, h2^4 is dual to h1^11, so at least one side is nonzero and
  // the two sides sit on different basis terms.
  EXPECT_NE(compose(a, b), compose(b, a));
  EXPECT_FALSE(compose(a, b).is_zero() && compose(b, a).is_zero());
}

TEST(Mutation, ComposedIdempotentsMatchOnlyTheirOwnIndex) {
  const auto& r = f4_rings();
  const auto shown = f4::displayed_idempotents(r);
  const auto composed = f4::composed_idempotents(r, 1);
  for (int i = 0; i < 4; ++i) {
    EXPECT_TRUE(congruent(composed.p[static_cast<std::size_t>(i)], shown.p[static_cast<std::size_t>(i)], 3));
    EXPECT_FALSE(congruent(composed.p[static_cast<std::size_t>(i)], shown.p[static_cast<std::size_t>((i + 1) % 4)], 3));
  }
}
