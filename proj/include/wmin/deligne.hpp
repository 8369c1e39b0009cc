#pragma once

// Denominator identity for the minimal W-algebras attached to the
// exceptional-series Lie algebras D4, E6, E7, E8 ("Deligne series").
//
// Root systems are realized in Euclidean coordinates (dimension 4 for D4,
// 8 for E6/E7/E8, with E6 and E7 generated as subsystems of E8).  The left
// side is the W-algebra denominator; the right side is a coset-decomposed
// Weyl/translation sum over the root lattice at the collapse level k0 = -a,
// a = h_dual/6 + 1.  Both sides have finite Laurent coefficients at every
// q-level, so the comparison is exact and needs no exponent window.

#include "wmin/catalog.hpp"  // Weight
#include "wmin/qseries.hpp"

#include <string>
#include <vector>

namespace wmin {

struct DeligneData {
  std::string type;  // "D4" | "E6" | "E7" | "E8"
  int dim = 0;       // ambient Euclidean dimension
  int rank = 0;
  long h_dual = 0;
  long a = 0;  // h_dual/6 + 1
  long b = 0;  // k0 + h_dual = h_dual - a
  std::vector<Weight> simple_roots;
  std::vector<Weight> delta_plus;
  Weight theta, rho, alpha;  // alpha = theta - alpha_1 - ... - alpha_{a-1}
  std::vector<Weight> nat_plus;    // positive roots orthogonal to theta
  std::vector<Weight> nat_simple;  // its simple roots; exponent-variable basis
  std::vector<Weight> half_plus;   // roots with (beta|theta) = 1
};

// Builds and validates the root-system data; throws on unknown type.
DeligneData deligne_data(const std::string& type);

// The denominator product, with exponential variables indexed by nat_simple
// (a weight mu is encoded as the vector of products (mu|beta_i)).
QSeries deligne_lhs(const DeligneData& d, const Rat& order);

// The coset-decomposed lattice sum.  With plus_one the lattice coefficient
// (gamma|alpha) is replaced by (gamma|alpha) + 1; the extra contribution
// cancels, so both variants give the same series.
QSeries deligne_rhs(const DeligneData& d, const Rat& order, bool plus_one = false);

}  // namespace wmin
