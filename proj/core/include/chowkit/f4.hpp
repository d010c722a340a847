#pragma once

#include <memory>
#include <vector>

#include "chowkit/correspondence.hpp"
#include "chowkit/report.hpp"

// The two F4 homogeneous varieties G/P1 and G/P4 (both of dimension 15),
// the correspondences between them built from r = h1^4 x 1 + eps (1 x g1^4),
// and the checks that split their motives into three-term Lefschetz pieces.
namespace chowkit::f4 {

struct Rings {
  std::shared_ptr<const WeylGroup> group;
  RingPtr x1;  // G/P1, Theta = {2,3,4}, classes h1^s, h2^s
  RingPtr x4;  // G/P4, Theta = {1,2,3}, classes g1^s, g2^s
};

/// Builds both rings, fills their product caches with `jobs` threads, and
/// names the classes by matching the stored Pieri tables. Throws
/// FixtureError if the labels cannot be recovered or disagree with the
/// stored label file.
Rings build_labeled_rings(int jobs = 1);
/// Names the classes of `ring` if it is one of the two F4 rings above;
/// returns false and leaves it alone otherwise.
bool apply_known_labels(ChowRing& ring);

Correspondence build_r(const Rings& rings, int eps);
/// r^2 . ((h1^1)^i x (g1^1)^(7-i)), 0 <= i <= 7.
Correspondence build_rho(const Rings& rings, int i, int eps);

struct Idempotents {
  std::vector<Correspondence> p;  // p0..p3 on X1 x X1
  std::vector<Correspondence> q;  // q0..q3 on X4 x X4
};
/// The stored integral projectors.
Idempotents displayed_idempotents(const Rings& rings);
/// rho_{7-i}^t o rho_i and rho_i o rho_{7-i}^t, reduced mod 3.
Idempotents composed_idempotents(const Rings& rings, int eps);

/// rho_0 + rho_1 + eps(rho_2 + ... + rho_5) + rho_6 + rho_7, reduced mod 3.
Correspondence build_J(const Rings& rings, int eps);

// Each stage appends its checks to `report`.
void verify_structure(const Rings& rings, VerificationReport& report);
void verify_pieri_tables(const Rings& rings, VerificationReport& report);
void verify_giambelli_squares(const Rings& rings, VerificationReport& report);
void verify_degree4_polynomials(const Rings& rings, VerificationReport& report);
void verify_rho_congruences(const Rings& rings, int eps, VerificationReport& report);
void verify_composed_idempotents(const Rings& rings, const std::vector<int>& eps_values, VerificationReport& report);
void verify_exact_idempotents(const Rings& rings, VerificationReport& report);
void verify_completeness(const Rings& rings, VerificationReport& report);
void verify_twist_structure(const Rings& rings, VerificationReport& report);
void verify_end_basis(const Rings& rings, VerificationReport& report);
void verify_isomorphism(const Rings& rings, int eps, VerificationReport& report);

struct PipelineOptions {
  std::vector<int> eps{1, -1};
  int jobs = 1;
};
/// Every stage in order. Label recovery failure ends the run early with a
/// failed check.
VerificationReport run_pipeline(const PipelineOptions& options = {});

}  // namespace chowkit::f4
