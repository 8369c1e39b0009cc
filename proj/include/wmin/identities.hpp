#pragma once

// Catalog and exact verification of the denominator identities attached to
// the minimal W-algebras: the classical specializations (Euler, Gauss,
// Ramanujan), the N=2 identities, the per-algebra Neveu-Schwarz and Ramond
// identities, the generic two-sided denominator formulas, and the identity
// for the Deligne-series Lie algebras D4/E6/E7/E8.
//
// Identities whose sides carry q^0 binomial factors (1 + e^m) do not have a
// well-defined Laurent expansion per q-level.  Both sides are therefore
// multiplied by the same product of all such binomials occurring on either
// side ("cleared form"); this is an invertible operation on formal series, so
// equality of the cleared forms is equivalent to the identity.  build_lhs and
// build_rhs return the cleared forms.  Identities whose lattice sums have a
// degenerate quadratic q-exponent (ramanujan, spo23_ramond) are additionally
// compared inside a finite exponent window per variable; all coefficients
// inside the window are exact.

#include "wmin/qseries.hpp"
#include "wmin/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wmin {

// --- building blocks ----------------------------------------------------------

// theta0(x) = prod_{j>=1} (1 - x q^{j-1})(1 - x^{-1} q^j), as an arity-1
// series in x on the half-integer q-grid.  theta1(x) = theta0(-x q^{1/2}).
QSeries theta0(const Rat& order);
QSeries theta1(const Rat& order);
// phi = prod (1-q^j); phi1 = prod (1+q^{j-1/2}); phi2 = prod (1+q^j).
QSeries phi(const Rat& order);
QSeries phi1(const Rat& order);
QSeries phi2(const Rat& order);

// --- identity catalog ----------------------------------------------------------

enum class IdentityKind {
  euler_partition,
  gauss_triangular,
  gauss_square,
  n2_ns,
  n2_ramond,
  ramanujan,
  psl22_ns,
  psl22_ramond,
  spo23_ns,
  spo23_ramond,
  d211_ns,
  d211_ramond,
  spo_even_ns,    // parameter r >= 3
  spo_even_ramond,
  spo_odd_ns,     // parameter r >= 2
  spo_odd_ramond,
  f4_ns,
  f4_ramond,
  g3_ns,
  g3_ramond,
  generic_detNS,  // parameter: algebra name
  generic_detR,   // parameters: algebra name, eta choice
  deligne,        // parameter: D4 | E6 | E7 | E8
};

struct IdentityId {
  IdentityKind kind = IdentityKind::euler_partition;
  long r = 0;              // rank parameter of the spo families
  std::string algebra;     // generic_detNS / generic_detR
  std::size_t choice = 0;  // generic_detR
  std::string deligne_type;

  std::string name() const;
};

// Parses "euler_partition", "spo_even_ns:4", "generic_detNS:psl(2|2)",
// "generic_detR:spo(2|5):0", "deligne:D4", ...; throws on unknown ids.
IdentityId parse_identity(const std::string& s);

// Canonical instances reported by `identity list`.
std::vector<std::string> identity_list();

// Cleared (and, where necessary, windowed) sides; see the header comment.
QSeries build_lhs(const IdentityId& id, const Rat& order);
QSeries build_rhs(const IdentityId& id, const Rat& order);

// --- verification --------------------------------------------------------------

struct Mismatch {
  Rat qexp;
  ExpVec monomial;
  Rat lhs, rhs;
};

struct VerifyReport {
  std::string id;
  Rat order;
  long lhs_terms = 0;  // nonzero monomials across all q-levels
  long rhs_terms = 0;
  bool equal = false;
  std::optional<Mismatch> first_mismatch;
  double wall_time_s = 0.0;

  std::string to_json() const;
};

struct VerifyOptions {
  bool allow_big = false;   // unlock deligne:E7 / deligne:E8
  bool perturb_rhs = false; // add q to the RHS (negative control)
};

VerifyReport verify(const IdentityId& id, const Rat& order,
                    const VerifyOptions& opt = {});

}  // namespace wmin
