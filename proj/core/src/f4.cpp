#include "chowkit/f4.hpp"

#include <map>
#include <sstream>

#include "chowkit/error.hpp"
#include "chowkit/fixtures.hpp"
#include "chowkit/labels.hpp"
#include "chowkit/linalg.hpp"

namespace chowkit::f4 {

namespace {

constexpr int kDim = 15;

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

// "name = text" lines of a fixture.
std::map<std::string, std::string> named_entries(std::string_view fixture) {
  std::map<std::string, std::string> out;
  for (const auto& line : content_lines(fixture)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw FixtureError("expected 'name = value': " + line);
    std::istringstream key(line.substr(0, eq));
    std::string name;
    key >> name;
    out[name] = line.substr(eq + 1);
  }
  return out;
}

const std::string& entry(const std::map<std::string, std::string>& entries, const std::string& name) {
  auto it = entries.find(name);
  if (it == entries.end()) throw FixtureError("fixture entry '" + name + "' is missing");
  return it->second;
}

std::shared_ptr<ChowRing> make_ring(const std::shared_ptr<const WeylGroup>& group, int omitted, int jobs) {
  auto ring = std::make_shared<ChowRing>(group, ParabolicSubset::omitting(4, omitted));
  ring->precompute(jobs);
  return ring;
}

void label_ring(ChowRing& ring, const char* letter, const char* table, const char* tag) {
  ring.set_labels(solve_labels(ring, letter, parse_symbolic_table(fixtures::get(table))));
  check_label_fixture(ring, tag, fixtures::get("f4_labels.txt"));
}

// Leading digit after the letter: 1 for "h1^4" and for the unit.
int subscript(const std::string& label) { return label.size() > 1 ? label[1] - '0' : 1; }

std::string eps_tag(int eps) { return eps > 0 ? "eps=+1" : "eps=-1"; }

std::string list(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + "}";
}

std::vector<Integer> coordinates(const Correspondence& c) {
  const int m = c.source()->size();
  const int n = c.target()->size();
  std::vector<Integer> row(static_cast<std::size_t>(m * n));
  for (const auto& [key, v] : c.terms()) row[static_cast<std::size_t>(key.first * n + key.second)] = static_cast<long>(v);
  return row;
}

// Codimensions where realize(p, .) has rank one; fails the check on any
// rank other than zero or one.
std::vector<int> realization_support(const Correspondence& p, Check& check, const std::string& name) {
  std::vector<int> support;
  for (int c = 0; c <= p.target()->dimension(); ++c) {
    const int r = realization_rank(p, c);
    if (r == 1) support.push_back(c);
    if (r > 1) check.fail(name + " has rank " + std::to_string(r) + " in codim " + std::to_string(c));
  }
  return support;
}

}  // namespace

Rings build_labeled_rings(int jobs) {
  Rings rings;
  rings.group = std::make_shared<WeylGroup>(named_root_system("F4"));
  auto x1 = make_ring(rings.group, 0, jobs);
  auto x4 = make_ring(rings.group, 3, jobs);
  label_ring(*x1, "h", "f4_p1_pieri.txt", "X1");
  label_ring(*x4, "g", "f4_p4_pieri.txt", "X4");
  rings.x1 = std::move(x1);
  rings.x4 = std::move(x4);
  return rings;
}

bool apply_known_labels(ChowRing& ring) {
  if (ring.system().cartan() != named_cartan("F4")) return false;
  const std::string theta = ring.theta().to_string();
  if (theta == "2,3,4") {
    label_ring(ring, "h", "f4_p1_pieri.txt", "X1");
  } else if (theta == "1,2,3") {
    label_ring(ring, "g", "f4_p4_pieri.txt", "X4");
  } else {
    return false;
  }
  return true;
}

Correspondence build_r(const Rings& rings, int eps) {
  if (eps != 1 && eps != -1) throw DomainError("eps must be +1 or -1");
  const ChowRing& X = *rings.x1;
  const ChowRing& Y = *rings.x4;
  Correspondence r(rings.x1, rings.x4);
  r.add(X.find("h1^4"), Y.unit(), 1);
  r.add(X.unit(), Y.find("g1^4"), eps);
  return r;
}

Correspondence build_rho(const Rings& rings, int i, int eps) {
  if (i < 0 || i > 7) throw DomainError("rho index must lie in 0..7");
  const Correspondence r = build_r(rings, eps);
  const ChowElement h = rings.x1->power(ChowElement::basis(rings.x1->find("h1^1")), i);
  const ChowElement g = rings.x4->power(ChowElement::basis(rings.x4->find("g1^1")), 7 - i);
  return intersect(intersect(r, r), Correspondence::product(rings.x1, rings.x4, h, g));
}

Idempotents displayed_idempotents(const Rings& rings) {
  const auto entries = named_entries(fixtures::get("f4_idempotents.txt"));
  Idempotents out;
  for (int i = 0; i < 4; ++i) {
    const std::string k = std::to_string(i);
    out.p.push_back(parse_correspondence(rings.x1, rings.x1, entry(entries, "p" + k)));
    out.q.push_back(parse_correspondence(rings.x4, rings.x4, entry(entries, "q" + k)));
  }
  return out;
}

Idempotents composed_idempotents(const Rings& rings, int eps) {
  std::vector<Correspondence> rho;
  for (int i = 0; i < 8; ++i) rho.push_back(build_rho(rings, i, eps));
  Idempotents out;
  for (int i = 0; i < 4; ++i) {
    const Correspondence back = transpose(rho[static_cast<std::size_t>(7 - i)]);
    out.p.push_back(mod_reduce(compose(back, rho[static_cast<std::size_t>(i)]), 3));
    out.q.push_back(mod_reduce(compose(rho[static_cast<std::size_t>(i)], back), 3));
  }
  return out;
}

Correspondence build_J(const Rings& rings, int eps) {
  Correspondence j(rings.x1, rings.x4);
  for (int i = 0; i < 8; ++i) {
    const Coeff c = (i >= 2 && i <= 5) ? eps : 1;
    j += c * build_rho(rings, i, eps);
  }
  return mod_reduce(j, 3);
}

void verify_structure(const Rings& rings, VerificationReport& report) {
  report.run("structure", "root system", [&](Check& c) {
    const auto& sys = rings.group->system();
    const std::size_t roots = sys->positive_roots().size();
    c.detail = std::to_string(roots) + " positive roots, |W| = " + std::to_string(rings.group->order()) +
               ", l(w0) = " + std::to_string(rings.group->max_length());
    if (roots != 24) c.fail("expected 24 positive roots");
    if (rings.group->order() != 1152) c.fail("expected |W| = 1152");
    if (rings.group->max_length() != 24) c.fail("expected l(w0) = 24");
  });
  const std::vector<int> expected{1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1};
  for (const auto& [tag, ring] : {std::pair{"X1", rings.x1}, std::pair{"X4", rings.x4}}) {
    report.run("structure", std::string(tag) + " ranks", [&](Check& c) {
      c.detail = "theta " + ring->theta().to_string() + ", " + std::to_string(ring->size()) + " classes, dim " +
                 std::to_string(ring->dimension()) + ", ranks " + list(ring->ranks());
      if (ring->size() != 24) c.fail("expected 24 classes");
      if (ring->dimension() != kDim) c.fail("expected dimension 15");
      if (ring->ranks() != expected) c.fail("expected ranks " + list(expected));
    });
  }
}

void verify_pieri_tables(const Rings& rings, VerificationReport& report) {
  for (const auto& [tag, ring, file] : {std::tuple{"X1", rings.x1, "f4_p1_pieri.txt"},
                                        std::tuple{"X4", rings.x4, "f4_p4_pieri.txt"}}) {
    report.run("pieri", std::string(tag) + " table", [&](Check& c) {
      const auto rows = parse_table(*ring, fixtures::get(file));
      int matched = 0;
      for (const auto& row : rows) {
        int node = -1;
        for (const auto& [n, idx] : ring->divisors()) {
          if (idx == row.lhs) node = n;
        }
        const std::string what = ring->label(row.lhs) + " * " + ring->label(row.rhs);
        if (node < 0) {
          c.fail(what + ": left factor is not a divisor class");
          continue;
        }
        const ChowElement chevalley = ring->chevalley_mult(node, ChowElement::basis(row.rhs));
        const ChowElement giambelli = ring->multiply_basis(row.lhs, row.rhs);
        bool ok = true;
        if (chevalley != row.product) {
          ok = false;
          c.fail(what + " by Chevalley = " + ring->format(chevalley));
        }
        if (giambelli != row.product) {
          ok = false;
          c.fail(what + " by Giambelli = " + ring->format(giambelli));
        }
        if (!ok) c.witness(what, ring->format(row.product));
        matched += ok ? 1 : 0;
      }
      const std::string summary = std::to_string(matched) + "/" + std::to_string(rows.size()) + " products match";
      c.detail = c.detail.empty() ? summary : summary + "; " + c.detail;
      if (rows.size() != 22) c.fail("expected 22 rows");
    });
  }
}

void verify_giambelli_squares(const Rings& rings, VerificationReport& report) {
  const SymbolicTable table = parse_symbolic_table(fixtures::get("f4_giambelli_squares.txt"));
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const auto& row = table.rows[k];
    const RingPtr& ring = table.tags[k] == "X4" ? rings.x4 : rings.x1;
    report.run("squares", table.tags[k] + " " + row.lhs + " * " + row.rhs, [&](Check& c) {
      ChowElement expected;
      for (const auto& [coeff, name] : row.product) expected.add(ring->find(name), coeff);
      const ChowElement got = ring->c_map(ring->giambelli_lift(ring->find(row.lhs)) * ring->giambelli_lift(ring->find(row.rhs)));
      c.detail = ring->format(got);
      if (got != expected) c.fail("expected " + ring->format(expected));
    });
  }
}

void verify_degree4_polynomials(const Rings& rings, VerificationReport& report) {
  const SymbolicTable squares = parse_symbolic_table(fixtures::get("f4_giambelli_squares.txt"));
  for (const auto& [tag, ring, file, name] :
       {std::tuple{"X1", rings.x1, "f4_h14_lift.poly", "h1^4"}, std::tuple{"X4", rings.x4, "f4_g14_lift.poly", "g1^4"}}) {
    std::string body;
    for (const auto& line : content_lines(fixtures::get(file))) body += line + " ";
    const Polynomial u = parse_polynomial(body, 4);
    report.run("degree4", std::string(tag) + " polynomial for " + name, [&](Check& c) {
      const ChowElement got = ring->c_map(u, CMapMode::Full);
      c.detail = "c(u) = " + ring->format(got);
      if (got != ChowElement::basis(ring->find(name))) c.fail(std::string("expected ") + name);
    });
    report.run("degree4", std::string(tag) + " square of the polynomial for " + name, [&](Check& c) {
      ChowElement expected;
      bool found = false;
      for (std::size_t k = 0; k < squares.rows.size(); ++k) {
        if (squares.tags[k] != tag || squares.rows[k].lhs != name || squares.rows[k].rhs != name) continue;
        for (const auto& [coeff, cls] : squares.rows[k].product) expected.add(ring->find(cls), coeff);
        found = true;
      }
      if (!found) throw FixtureError(std::string("no stored square for ") + name);
      const ChowElement got = ring->c_map(u * u, CMapMode::Full);
      c.detail = "c(u^2) = " + ring->format(got);
      if (got != expected) c.fail("expected " + ring->format(expected));
    });
  }
}

void verify_rho_congruences(const Rings& rings, int eps, VerificationReport& report) {
  const auto entries = named_entries(fixtures::get("f4_rho_congruences.txt"));
  const std::string tag = eps_tag(eps);
  auto compare = [&](const std::string& name, const Correspondence& computed) {
    report.run("congruences", name + " " + tag, [&](Check& c) {
      const Correspondence expected = parse_correspondence(rings.x1, rings.x4, entry(entries, name), eps);
      const Correspondence reduced = mod_reduce(computed, 3);
      c.detail = std::to_string(computed.size()) + " integral terms";
      if (!congruent(reduced, expected, 3)) {
        c.fail("not congruent mod 3");
        c.witness("computed mod 3", format(reduced));
        c.witness("expected", format(expected));
      }
    });
  };
  const Correspondence r = build_r(rings, eps);
  compare("r2", intersect(r, r));
  for (int i = 0; i < 8; ++i) compare("rho" + std::to_string(i), build_rho(rings, i, eps));
}

void verify_composed_idempotents(const Rings& rings, const std::vector<int>& eps_values, VerificationReport& report) {
  const Idempotents shown = displayed_idempotents(rings);
  std::vector<Idempotents> composed;
  for (int eps : eps_values) {
    composed.push_back(composed_idempotents(rings, eps));
    const Idempotents& got = composed.back();
    for (int i = 0; i < 4; ++i) {
      const auto k = static_cast<std::size_t>(i);
      for (const auto& [name, have, want] : {std::tuple{"p", &got.p[k], &shown.p[k]}, std::tuple{"q", &got.q[k], &shown.q[k]}}) {
        report.run("idempotents", std::string(name) + std::to_string(i) + " from rho " + eps_tag(eps), [&](Check& c) {
          c.witness("composed mod 3", format(*have));
          if (!congruent(*have, *want, 3)) {
            c.fail("composition differs from the stored projector mod 3");
            c.witness("stored", format(*want));
          }
        });
      }
    }
  }
  if (composed.size() > 1) {
    report.run("idempotents", "independent of eps", [&](Check& c) {
      for (std::size_t e = 1; e < composed.size(); ++e) {
        for (std::size_t k = 0; k < 4; ++k) {
          if (!(composed[e].p[k] == composed[0].p[k])) c.fail("p" + std::to_string(k) + " depends on eps");
          if (!(composed[e].q[k] == composed[0].q[k])) c.fail("q" + std::to_string(k) + " depends on eps");
        }
      }
    });
  }
}

void verify_exact_idempotents(const Rings& rings, VerificationReport& report) {
  const Idempotents shown = displayed_idempotents(rings);
  for (const auto& [tag, set, letter] : {std::tuple{"X1", &shown.p, "p"}, std::tuple{"X4", &shown.q, "q"}}) {
    std::vector<std::pair<std::string, Correspondence>> all;
    for (std::size_t k = 0; k < 4; ++k) all.emplace_back(letter + std::to_string(k), (*set)[k]);
    for (std::size_t k = 0; k < 4; ++k) all.emplace_back(letter + std::to_string(k) + "^t", transpose((*set)[k]));
    report.run("idempotents", std::string(tag) + " exact idempotents", [&](Check& c) {
      for (const auto& [name, e] : all) {
        if (!is_idempotent(e, 0)) {
          c.fail(name + " is not idempotent");
          c.witness(name + " o " + name, format(compose(e, e)));
        }
      }
      c.detail = std::to_string(all.size()) + " projectors";
    });
    report.run("idempotents", std::string(tag) + " orthogonality", [&](Check& c) {
      int pairs = 0;
      for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = 0; b < all.size(); ++b) {
          if (a == b) continue;
          ++pairs;
          const Correspondence prod = compose(all[a].second, all[b].second);
          if (!prod.is_zero()) {
            c.fail(all[a].first + " o " + all[b].first + " is not zero");
            c.witness(all[a].first + " o " + all[b].first, format(prod));
          }
        }
      }
      c.detail = std::to_string(pairs) + " ordered pairs";
    });
  }
}

void verify_completeness(const Rings& rings, VerificationReport& report) {
  const Idempotents shown = displayed_idempotents(rings);
  for (const auto& [tag, ring, set] : {std::tuple{"X1", rings.x1, &shown.p}, std::tuple{"X4", rings.x4, &shown.q}}) {
    report.run("completeness", std::string(tag) + " sum equals diagonal", [&](Check& c) {
      Correspondence sum(ring, ring);
      for (const auto& e : *set) sum += e + transpose(e);
      const Correspondence diff = sum - diagonal(ring);
      if (!diff.is_zero()) {
        c.fail("sum minus diagonal is not zero");
        c.witness("difference", format(diff));
      }
    });
  }
}

void verify_twist_structure(const Rings& rings, VerificationReport& report) {
  const Idempotents shown = displayed_idempotents(rings);
  for (const auto& [tag, set, letter] : {std::tuple{"X1", &shown.p, "p"}, std::tuple{"X4", &shown.q, "q"}}) {
    report.run("twists", std::string(tag) + " realization supports", [&](Check& c) {
      int total = 0;
      for (int i = 0; i < 4; ++i) {
        const Correspondence& e = (*set)[static_cast<std::size_t>(i)];
        const std::string name = letter + std::to_string(i);
        for (bool t : {false, true}) {
          const std::string label = t ? name + "^t" : name;
          const std::vector<int> support = realization_support(t ? transpose(e) : e, c, label);
          const std::vector<int> expected =
              t ? std::vector<int>{7 - i, 11 - i, 15 - i} : std::vector<int>{i, i + 4, i + 8};
          c.witness(label, list(support));
          if (support != expected) c.fail(label + " supported in " + list(support) + ", expected " + list(expected));
          total += static_cast<int>(support.size());
        }
      }
      c.detail = "total rank " + std::to_string(total);
      if (total != 24) c.fail("ranks do not add up to 24");
    });
  }
}

void verify_end_basis(const Rings& rings, VerificationReport& report) {
  const RingPtr& X = rings.x1;
  const Correspondence p0 = displayed_idempotents(rings).p[0];
  const std::vector<std::string> shown_text{"1 x h1^15", "h1^4 x (h1^11 + h2^11)", "h1^8 x (h1^7 + h2^7)"};
  std::vector<Correspondence> shown;
  for (const auto& t : shown_text) shown.push_back(parse_correspondence(X, X, t));

  report.run("end", "End(X1, p0) basis", [&](Check& c) {
    IntegerMatrix image;
    for (int a = 0; a < X->size(); ++a) {
      for (int b = 0; b < X->size(); ++b) {
        if (X->codim(a) + X->codim(b) != kDim) continue;
        Correspondence basis(X, X);
        basis.add(a, b, 1);
        const Correspondence e = compose(p0, compose(basis, p0));
        if (!e.is_zero()) image.push_back(coordinates(e));
      }
    }
    IntegerMatrix expected;
    for (const auto& s : shown) expected.push_back(coordinates(s));
    const int rank = matrix_rank(image);
    c.detail = "rank " + std::to_string(rank) + " from " + std::to_string(image.size()) + " nonzero sandwiches";
    if (rank != 3) c.fail("expected rank 3");
    if (!same_lattice(image, expected)) c.fail("image lattice differs from the span of the stored basis");
  });
  report.run("end", "p0 is the sum of the basis", [&](Check& c) {
    Correspondence sum(X, X);
    for (const auto& s : shown) sum += s;
    if (!(sum == p0)) c.fail("p0 differs from the sum");
  });
  report.run("end", "outer basis elements compose to zero", [&](Check& c) {
    const Correspondence prod = compose(shown[0], shown[2]);
    if (!prod.is_zero()) {
      c.fail("(1 x h1^15) o (h1^8 x (h1^7 + h2^7)) is not zero");
      c.witness("product", format(prod));
    }
  });
}

void verify_isomorphism(const Rings& rings, int eps, VerificationReport& report) {
  const Correspondence J = build_J(rings, eps);
  const std::string tag = eps_tag(eps);
  report.run("isomorphism", "J shape " + tag, [&](Check& c) {
    c.witness("J", format(J));
    std::vector<int> signs;
    const ChowRing& X = *rings.x1;
    const ChowRing& Y = *rings.x4;
    for (int f : X.display_order()) {
      for (int g : Y.display_order()) {
        const Coeff v = J.coefficient(f, g);
        if (v == 0) continue;
        signs.push_back(static_cast<int>(v));
        const std::string term = X.label(f) + " x " + Y.label(g);
        if (v != 1 && v != -1) c.fail(term + " has coefficient " + std::to_string(v));
        if (X.codim(f) + Y.codim(g) != kDim || subscript(X.label(f)) != subscript(Y.label(g))) {
          c.fail(term + " does not pair matching classes");
        }
      }
    }
    std::string pattern;
    for (int s : signs) pattern += s > 0 ? '+' : '-';
    c.witness("signs", pattern);
    c.detail = std::to_string(J.size()) + " terms";
    if (J.size() != 24) c.fail("expected 24 terms");
  });
  report.run("isomorphism", "J^t o J = diagonal of X1 " + tag, [&](Check& c) {
    const Correspondence prod = mod_reduce(compose(transpose(J), J), 3);
    if (!congruent(prod, diagonal(rings.x1), 3)) {
      c.fail("not the diagonal mod 3");
      c.witness("J^t o J mod 3", format(prod));
    }
  });
  report.run("isomorphism", "J o J^t = diagonal of X4 " + tag, [&](Check& c) {
    const Correspondence prod = mod_reduce(compose(J, transpose(J)), 3);
    if (!congruent(prod, diagonal(rings.x4), 3)) {
      c.fail("not the diagonal mod 3");
      c.witness("J o J^t mod 3", format(prod));
    }
  });
}

VerificationReport run_pipeline(const PipelineOptions& options) {
  VerificationReport report;
  for (int eps : options.eps) {
    if (eps != 1 && eps != -1) throw DomainError("eps must be +1 or -1");
  }
  Rings rings;
  report.run("labels", "recover class names from the Pieri tables", [&](Check& c) {
    rings = build_labeled_rings(options.jobs);
    c.detail = "labels agree with the stored label file";
  });
  if (!rings.x1) return report;

  verify_structure(rings, report);
  verify_pieri_tables(rings, report);
  verify_giambelli_squares(rings, report);
  verify_degree4_polynomials(rings, report);
  for (int eps : options.eps) verify_rho_congruences(rings, eps, report);
  verify_composed_idempotents(rings, options.eps, report);
  verify_exact_idempotents(rings, report);
  verify_completeness(rings, report);
  verify_twist_structure(rings, report);
  verify_end_basis(rings, report);
  for (int eps : options.eps) verify_isomorphism(rings, eps, report);
  return report;
}

}  // namespace chowkit::f4
