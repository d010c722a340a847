#include <gtest/gtest.h>

#include "chowkit/error.hpp"
#include "chowkit/fixtures.hpp"
#include "chowkit/labels.hpp"
#include "f4_rings.hpp"
#include "generators.hpp"

using namespace chowkit;
namespace gen = chowkit::testing;
using chowkit::testing::el;
using chowkit::testing::f4_rings;

TEST(ChowRing, RanksAndDimension) {
  const std::vector<int> ranks{1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1};
  for (const auto& ring : {f4_rings().x1, f4_rings().x4}) {
    EXPECT_EQ(ring->dimension(), 15);
    EXPECT_EQ(ring->size(), 24);
    EXPECT_EQ(ring->ranks(), ranks);
    EXPECT_EQ(ring->codim(ring->unit()), 0);
    EXPECT_EQ(ring->codim(ring->point()), 15);
    EXPECT_THROW(ring->basis(16), DomainError);
    EXPECT_THROW(ring->basis(-1), DomainError);
  }
}

TEST(ChowRing, FullFlagVarietyOfA2) {
  const auto group = std::make_shared<const WeylGroup>(named_root_system("A2"));
  const ChowRing ring(group, ParabolicSubset{});
  EXPECT_EQ(ring.ranks(), (std::vector<int>{1, 2, 2, 1}));
  EXPECT_EQ(ring.divisors().size(), 2u);
  // x1^2 is a single Schubert class on the flag variety of C^3, and x1^3 = 0.
  const ChowElement h = ChowElement::basis(ring.divisor_index(0));
  const ChowElement product = ring.multiply(h, h);
  EXPECT_EQ(ring.codim_of(product), 2);
  EXPECT_EQ(product.terms().size(), 1u);
  EXPECT_EQ(ring.degree(ring.power(h, 3)), 0);
  const ChowElement k = ChowElement::basis(ring.divisor_index(1));
  EXPECT_EQ(ring.degree(ring.multiply(ring.multiply(h, k), h + k)), 2);
}

TEST(ChowRing, LabelsMatchTheStoredFixture) {
  const auto& r = f4_rings();
  EXPECT_EQ(r.x1->label(r.x1->unit()), "1");
  EXPECT_EQ(r.x1->label(r.x1->point()), "h1^15");
  EXPECT_EQ(r.x4->label(r.x4->point()), "g1^15");
  EXPECT_EQ(r.x1->codim(r.x1->find("h2^4")), 4);
  EXPECT_NE(r.x1->find("h2^4"), r.x1->find("h1^4"));
  EXPECT_THROW(r.x1->find("h2^3"), ParseError);
  EXPECT_THROW(r.x1->find("g1^1"), ParseError);
  for (int k = 0; k < r.x1->size(); ++k) {
    EXPECT_EQ(r.x1->find("[" + r.x1->word(k) + "]"), k);
    EXPECT_EQ(r.x1->find(r.x1->label(k)), k);
  }
  EXPECT_NO_THROW(check_label_fixture(*r.x1, "X1", fixtures::get("f4_labels.txt")));
  EXPECT_NO_THROW(check_label_fixture(*r.x4, "X4", fixtures::get("f4_labels.txt")));
}

TEST(ChowRing, GiambelliLiftRoundTrips) {
  for (const auto& ring : {f4_rings().x1, f4_rings().x4}) {
    for (int k = 0; k < ring->size(); ++k) {
      const Polynomial lift = ring->giambelli_lift(k);
      EXPECT_EQ(lift.degree(), ring->codim(k)) << ring->label(k);
      EXPECT_TRUE(lift.is_homogeneous());
      EXPECT_EQ(ring->c_map(lift), ChowElement::basis(k)) << ring->label(k);
      EXPECT_EQ(ring->c_map(lift, CMapMode::Full), ChowElement::basis(k)) << ring->label(k);
    }
    EXPECT_EQ(ring->giambelli_lift(ring->unit()), Polynomial::constant(4, 1));
  }
}

TEST(ChowRing, DivisorLiftsAreFundamentalWeights) {
  const auto& r = f4_rings();
  EXPECT_EQ(r.x1->giambelli_lift(r.x1->find("h1^1")), Polynomial::variable(4, 0));
  EXPECT_EQ(r.x4->giambelli_lift(r.x4->find("g1^1")), Polynomial::variable(4, 3));
}

TEST(ChowRing, CMapRejectsNonIntegralInput) {
  const auto& x1 = *f4_rings().x1;
  EXPECT_THROW(x1.c_map(Polynomial::variable(4, 0) * Rational(1, 2)), LatticeError);
  EXPECT_THROW(x1.c_map(parse_polynomial("w1 + w1^2", 4)), DomainError);
  EXPECT_THROW(x1.c_map(Polynomial::variable(3, 0)), DomainError);
  // omega_2 restricts to zero on G/P1.
  EXPECT_TRUE(x1.c_map(Polynomial::variable(4, 1)).is_zero());
}

TEST(ChowRing, KnownProducts) {
  const auto& x1 = *f4_rings().x1;
  const auto& x4 = *f4_rings().x4;
  EXPECT_EQ(x4.multiply(el(x4, "g1^1"), el(x4, "g2^8")), el(x4, "g2^9"));
  EXPECT_EQ(x1.multiply(el(x1, "h1^4"), el(x1, "h1^11 + h2^11")), el(x1, "h1^15"));
  EXPECT_EQ(x1.degree(x1.multiply(el(x1, "h1^8"), el(x1, "h1^7 + h2^7"))), 1);
  EXPECT_EQ(x1.multiply(el(x1, "h1^1"), el(x1, "h1^3")), el(x1, "h1^4 + 2h2^4"));
  EXPECT_EQ(x1.power(el(x1, "h1^1"), 16), ChowElement{});
  EXPECT_EQ(x1.power(el(x1, "h1^1"), 0), ChowElement::basis(x1.unit()));
  EXPECT_THROW(x1.power(el(x1, "h1^1"), -1), DomainError);
}

TEST(ChowRing, ProductsAgreeWithTheStoredTables) {
  const auto& r = f4_rings();
  for (const auto& [ring, name] : {std::pair{r.x1, "f4_p1_pieri.txt"}, std::pair{r.x4, "f4_p4_pieri.txt"}}) {
    const auto rows = parse_table(*ring, fixtures::get(name));
    ASSERT_EQ(rows.size(), 22u) << name;
    for (const auto& row : rows) {
      EXPECT_EQ(ring->multiply_basis(row.lhs, row.rhs), row.product) << ring->label(row.rhs);
      EXPECT_EQ(ring->chevalley_mult(ring->divisors().front().first, ChowElement::basis(row.rhs)), row.product);
    }
  }
}

TEST(ChowRing, PoincareDuality) {
  for (const auto& ring : {f4_rings().x1, f4_rings().x4}) {
    for (int a = 0; a < ring->size(); ++a) {
      const int d = ring->dual(a);
      EXPECT_EQ(ring->dual(d), a);
      EXPECT_EQ(ring->codim(a) + ring->codim(d), 15);
      for (int b : ring->basis(15 - ring->codim(a))) {
        const Coeff expected = b == d ? 1 : 0;
        EXPECT_EQ(ring->duality_pair(ChowElement::basis(a), ChowElement::basis(b)), expected);
        EXPECT_EQ(ring->degree(ring->multiply_basis(a, b)), expected);
      }
    }
    EXPECT_THROW(ring->duality_pair(ChowElement::basis(0), ChowElement::basis(1)), DomainError);
  }
}

TEST(ChowRing, HomogeneityChecks) {
  const auto& x1 = *f4_rings().x1;
  EXPECT_THROW(x1.codim_of(el(x1, "h1^1 + h1^2")), DomainError);
  EXPECT_EQ(x1.codim_of(ChowElement{}), -1);
  EXPECT_THROW(x1.chevalley_mult(1, el(x1, "h1^1")), DomainError);
  EXPECT_THROW(x1.divisor_index(2), DomainError);
  EXPECT_THROW(x1.multiply_basis(0, 24), DomainError);
}

TEST(ChowRing, FormatAndParse) {
  const auto& x1 = *f4_rings().x1;
  EXPECT_EQ(x1.format(el(x1, "h2^4 + 2 h1^4")), "2h1^4 + h2^4");
  EXPECT_EQ(x1.format(el(x1, "-h2^8 + 0h1^8")), "-h2^8");
  EXPECT_EQ(x1.format(ChowElement{}), "0");
  EXPECT_EQ(el(x1, "3"), 3 * ChowElement::basis(x1.unit()));
  EXPECT_THROW(el(x1, "h1^4 +"), ParseError);
  EXPECT_THROW(el(x1, "h1^4 h1^5"), ParseError);
  gen::Rng rng(gen::kSeed);
  for (int t = 0; t < 100; ++t) {
    const ChowElement x = gen::random_chow(rng, x1, 9);
    EXPECT_EQ(el(x1, x1.format(x).c_str()), x) << x1.format(x);
  }
}

TEST(ChowRing, ElementArithmetic) {
  ChowElement x = ChowElement::basis(3, 2);
  x.add(3, -2);
  EXPECT_TRUE(x.is_zero());
  x.add(1, 5);
  EXPECT_EQ(x.coefficient(1), 5);
  EXPECT_EQ(x.coefficient(2), 0);
  EXPECT_EQ(-x + x, ChowElement{});
  EXPECT_EQ(x - ChowElement::basis(1, 5), ChowElement{});
  EXPECT_EQ((0 * x).terms().size(), 0u);
}

TEST(ChowRing, TableFormats) {
  const auto& x1 = *f4_rings().x1;
  const auto rows = pieri_table(x1);
  ASSERT_EQ(rows.size(), 22u);
  const std::string text = table_text(x1, rows);
  EXPECT_NE(text.find("h1^1 * h1^3  = h1^4 + 2h2^4"), std::string::npos);
  const auto reparsed = parse_table(x1, text);
  ASSERT_EQ(reparsed.size(), rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) EXPECT_EQ(reparsed[k].product, rows[k].product);
  const std::string json = table_json(x1, rows);
  EXPECT_NE(json.find("\"lhs\""), std::string::npos);
  EXPECT_THROW(parse_table(x1, "h1^1 h1^3 = h1^4\n"), ParseError);
}

TEST(ChowRing, TwoDivisorNodes) {
  const auto group = f4_rings().group;
  const ChowRing ring(group, ParabolicSubset({1, 2}));
  EXPECT_EQ(ring.divisors().size(), 2u);
  EXPECT_EQ(ring.dimension(), 24 - 4);
  // Products of divisors commute and match Chevalley for both nodes.
  for (const auto& [node, idx] : ring.divisors()) {
    for (int k : ring.basis(2)) {
      EXPECT_EQ(ring.multiply(ChowElement::basis(idx), ChowElement::basis(k)),
                ring.chevalley_mult(node, ChowElement::basis(k)));
    }
  }
}
