#include "properties.hpp"

#include "pieri_oracle.hpp"

namespace chowkit::testing {

namespace {

int braid_order(const CartanMatrix& c, int i, int j) {
  switch (c(i, j) * c(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

const RingPtr& pick(Rng& rng, const std::vector<RingPtr>& rings) {
  return rings[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rings.size()) - 1))];
}

int pick_codim(Rng& rng, const RingPtr& x, const RingPtr& y) {
  // Mostly morphism degree, where compositions are rarely zero.
  return uniform(rng, 0, 3) == 0 ? uniform(rng, 0, x->dimension() + y->dimension()) : y->dimension();
}

}  // namespace

PropertyResult prop_delta_nil(Rng& rng, const DividedDifferenceEngine& engine, int cases) {
  PropertyResult r{"divided differences square to zero"};
  const int n = engine.system()->rank();
  for (int t = 0; t < cases; ++t) {
    const Polynomial u = random_polynomial(rng, n, 6, 6);
    const int i = uniform(rng, 0, n - 1);
    r.check(engine.apply(i, engine.apply(i, u)).is_zero(), "i=" + std::to_string(i + 1) + " u=" + to_string(u));
  }
  return r;
}

PropertyResult prop_twisted_leibniz(Rng& rng, const DividedDifferenceEngine& engine, int cases) {
  PropertyResult r{"twisted Leibniz rule"};
  const RootSystem& sys = *engine.system();
  const int n = sys.rank();
  for (int t = 0; t < cases; ++t) {
    const Polynomial u = random_polynomial(rng, n, 4, 4);
    const Polynomial v = random_polynomial(rng, n, 4, 4);
    const int i = uniform(rng, 0, n - 1);
    const Polynomial lhs = engine.apply(i, u * v);
    const Polynomial rhs = engine.apply(i, u) * v + simple_reflect(sys, i, u) * engine.apply(i, v);
    r.check(lhs == rhs, "i=" + std::to_string(i + 1) + " u=" + to_string(u) + " v=" + to_string(v));
  }
  return r;
}

PropertyResult prop_braid_relations(Rng& rng, const DividedDifferenceEngine& engine, int cases) {
  PropertyResult r{"braid relations"};
  const RootSystem& sys = *engine.system();
  const int n = sys.rank();
  for (int t = 0; t < cases; ++t) {
    const int i = uniform(rng, 0, n - 1);
    int j = uniform(rng, 0, n - 2);
    if (j >= i) ++j;
    const int m = braid_order(sys.cartan(), i, j);
    std::vector<int> a, b;
    for (int k = 0; k < m; ++k) {
      a.push_back(k % 2 ? j : i);
      b.push_back(k % 2 ? i : j);
    }
    const Polynomial u = random_polynomial(rng, n, m + 2, 5);
    r.check(engine.apply_word(a, u) == engine.apply_word(b, u),
            "pair " + std::to_string(i + 1) + "," + std::to_string(j + 1) + " u=" + to_string(u));
  }
  return r;
}

PropertyResult prop_reduced_word_invariance(Rng& rng, const WeylGroup& group, const DividedDifferenceEngine& engine,
                                            int max_length) {
  PropertyResult r{"reduced-word invariance"};
  for (ElementId w = 0; w < group.order() && group.length(w) <= max_length; ++w) {
    const auto a = random_reduced_word(rng, group, w);
    const auto b = random_reduced_word(rng, group, w);
    const Polynomial u = random_polynomial(rng, group.rank(), group.length(w) + 1, 5);
    r.check(engine.apply_word(a, u) == engine.apply_word(b, u) && engine.apply_word(a, u) == engine.apply_word(group.word(w), u),
            format_word(a) + " vs " + format_word(b));
  }
  return r;
}

PropertyResult prop_length_vs_word(Rng& rng, const WeylGroup& group, int cases) {
  PropertyResult r{"inversion count equals word length"};
  for (int t = 0; t < cases; ++t) {
    const ElementId w = random_element(rng, group);
    const auto word = random_reduced_word(rng, group, w);
    const WeylElement rebuilt = from_word(group.system(), word);
    r.check(rebuilt == group.element(w) && rebuilt.length() == static_cast<int>(word.size()), format_word(word));
  }
  return r;
}

PropertyResult prop_ring_axioms(Rng& rng, const ChowRing& ring, int cases) {
  PropertyResult r{"ring axioms"};
  for (int t = 0; t < cases; ++t) {
    const ChowElement x = random_chow(rng, ring);
    const ChowElement y = random_chow(rng, ring);
    const ChowElement z = random_chow(rng, ring);
    const std::string what = ring.format(x) + " | " + ring.format(y) + " | " + ring.format(z);
    r.check(ring.multiply(ring.multiply(x, y), z) == ring.multiply(x, ring.multiply(y, z)), "associativity " + what);
    r.check(ring.multiply(x, y) == ring.multiply(y, x), "commutativity " + what);
    r.check(ring.multiply(x, y + z) == ring.multiply(x, y) + ring.multiply(x, z), "distributivity " + what);
  }
  return r;
}

PropertyResult prop_poincare_pairing(const ChowRing& ring) {
  PropertyResult r{"Poincare pairing is a permutation"};
  for (int c = 0; c <= ring.dimension(); ++c) {
    const auto& rows = ring.basis(c);
    const auto& cols = ring.basis(ring.dimension() - c);
    bool ok = rows.size() == cols.size();
    std::vector<int> row_ones(rows.size()), col_ones(cols.size());
    for (std::size_t a = 0; a < rows.size() && ok; ++a) {
      for (std::size_t b = 0; b < cols.size(); ++b) {
        const Coeff p = ring.duality_pair(ChowElement::basis(rows[a]), ChowElement::basis(cols[b]));
        const Coeff g = ring.degree(ring.multiply_basis(rows[a], cols[b]));
        ok = ok && (p == 0 || p == 1) && p == g;
        row_ones[a] += static_cast<int>(p);
        col_ones[b] += static_cast<int>(p);
      }
    }
    for (int v : row_ones) ok = ok && v == 1;
    for (int v : col_ones) ok = ok && v == 1;
    r.check(ok, "codim " + std::to_string(c));
  }
  return r;
}

PropertyResult prop_chevalley_giambelli(const ChowRing& ring) {
  PropertyResult r{"Chevalley agrees with Giambelli"};
  for (const auto& [node, h] : ring.divisors()) {
    for (int k = 0; k < ring.size(); ++k) {
      if (ring.codim(k) == ring.dimension()) continue;
      r.check(ring.multiply_basis(h, k) == ring.chevalley_mult(node, ChowElement::basis(k)), ring.label(k));
    }
  }
  return r;
}

PropertyResult prop_composition_units(const RingPtr& x, const RingPtr& y) {
  PropertyResult r{"diagonal is a two-sided unit"};
  const Correspondence dx = diagonal(x);
  const Correspondence dy = diagonal(y);
  for (int f = 0; f < x->size(); ++f) {
    for (int g = 0; g < y->size(); ++g) {
      Correspondence a(x, y);
      a.add(f, g, 1);
      r.check(compose(dy, a) == a && compose(a, dx) == a, x->label(f) + " x " + y->label(g));
    }
  }
  return r;
}

PropertyResult prop_composition_associativity(Rng& rng, const std::vector<RingPtr>& rings, int cases) {
  PropertyResult r{"composition is associative"};
  for (int t = 0; t < cases; ++t) {
    const RingPtr& X = pick(rng, rings);
    const RingPtr& Y = pick(rng, rings);
    const RingPtr& Z = pick(rng, rings);
    const RingPtr& W = pick(rng, rings);
    const Correspondence a = random_correspondence(rng, X, Y, pick_codim(rng, X, Y));
    const Correspondence b = random_correspondence(rng, Y, Z, pick_codim(rng, Y, Z));
    const Correspondence c = random_correspondence(rng, Z, W, pick_codim(rng, Z, W));
    r.check(compose(c, compose(b, a)) == compose(compose(c, b), a), format(a) + " | " + format(b) + " | " + format(c));
  }
  return r;
}

PropertyResult prop_transpose_contravariant(Rng& rng, const std::vector<RingPtr>& rings, int cases) {
  PropertyResult r{"transpose reverses composition"};
  for (int t = 0; t < cases; ++t) {
    const RingPtr& X = pick(rng, rings);
    const RingPtr& Y = pick(rng, rings);
    const RingPtr& Z = pick(rng, rings);
    const Correspondence a = random_correspondence(rng, X, Y, pick_codim(rng, X, Y));
    const Correspondence b = random_correspondence(rng, Y, Z, pick_codim(rng, Y, Z));
    r.check(transpose(compose(b, a)) == compose(transpose(a), transpose(b)), format(a) + " | " + format(b));
  }
  return r;
}

PropertyResult prop_small_rank_oracle(const std::string& type) {
  const auto group = std::make_shared<WeylGroup>(named_root_system(type));
  const ChowRing ring(group, ParabolicSubset{});
  const CartanMatrix& c = group->system()->cartan();
  std::vector<std::vector<int>> cartan(static_cast<std::size_t>(c.rank()));
  for (int i = 0; i < c.rank(); ++i) {
    for (int j = 0; j < c.rank(); ++j) cartan[static_cast<std::size_t>(i)].push_back(c(i, j));
  }
  PropertyResult r = prop_oracle_agreement(ring, cartan);
  r.name = "oracle agreement for " + type;
  return r;
}

PropertyResult prop_oracle_agreement(const ChowRing& ring, const std::vector<std::vector<int>>& oracle_cartan) {
  PropertyResult r{"oracle agreement"};
  const WeylGroup* group = &ring.group();
  const PieriClosureOracle oracle(oracle_cartan);
  r.check(oracle.size() == ring.size(), "group orders differ");

  // Library basis index -> oracle element, matched through the images of the simple roots.
  std::vector<int> to_oracle;
  for (int k = 0; k < ring.size(); ++k) {
    PieriClosureOracle::Images images;
    for (const Root& root : group->element(ring.schubert_class(k).rep).images()) images.push_back(root.coords);
    to_oracle.push_back(oracle.index_of(images));
    r.check(to_oracle.back() >= 0, "no oracle element for " + ring.label(k));
  }
  if (!r.passed()) return r;
  std::map<int, int> from_oracle;
  for (int k = 0; k < ring.size(); ++k) from_oracle[to_oracle[static_cast<std::size_t>(k)]] = k;

  for (int a = 0; a < ring.size(); ++a) {
    for (int b = 0; b < ring.size(); ++b) {
      if (ring.codim(a) + ring.codim(b) > ring.dimension()) continue;
      const ChowElement got = ring.multiply_basis(a, b);
      ChowElement expected;
      bool integral = true;
      for (const auto& [w, coeff] : oracle.multiply(to_oracle[static_cast<std::size_t>(a)], to_oracle[static_cast<std::size_t>(b)])) {
        integral = integral && coeff.get_den() == 1;
        expected.add(from_oracle.at(w), coeff.get_num().get_si());
      }
      r.check(integral && got == expected, ring.label(a) + " * " + ring.label(b) + " = " + ring.format(got) +
                                                ", oracle " + ring.format(expected));
    }
  }
  return r;
}

std::vector<PropertyResult> run_property_suite(const f4::Rings& rings, std::uint64_t seed) {
  Rng rng(seed);
  const DividedDifferenceEngine& engine = rings.x1->engine();
  const std::vector<RingPtr> both{rings.x1, rings.x4};
  std::vector<PropertyResult> out;
  out.push_back(prop_delta_nil(rng, engine, 200));
  out.push_back(prop_braid_relations(rng, engine, 100));
  out.push_back(prop_twisted_leibniz(rng, engine, 200));
  out.push_back(prop_reduced_word_invariance(rng, *rings.group, engine, 6));
  out.push_back(prop_length_vs_word(rng, *rings.group, 1000));
  for (const auto& ring : both) {
    const std::string on = " on G/P(" + ring->theta().to_string() + ")";
    out.push_back(prop_ring_axioms(rng, *ring, 200));
    out.push_back(prop_poincare_pairing(*ring));
    out.push_back(prop_chevalley_giambelli(*ring));
    out.push_back(prop_composition_units(ring, ring));
    for (std::size_t k = out.size() - 4; k < out.size(); ++k) out[k].name += on;
  }
  out.push_back(prop_composition_units(rings.x1, rings.x4));
  out.back().name += " between the two rings";
  out.push_back(prop_composition_associativity(rng, both, 300));
  out.push_back(prop_transpose_contravariant(rng, both, 300));
  return out;
}

}  // namespace chowkit::testing
