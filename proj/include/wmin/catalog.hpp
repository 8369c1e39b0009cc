#pragma once

// Static catalog of the minimal W-algebra families handled by this library:
//   psl(2|2), spo(2|m) for m >= 3, D(2,1;m/n), F(4), G(3).
//
// Every entry carries the root/weight data of the small conformal subalgebra
// g^natural, the bilinear form on a convenient model of h*, the level
// functions M_i(k), and the scalar constants used by the unitarity bounds and
// denominator identities.  All rational data is exact and validated by
// internal consistency checks at construction time.

#include "wmin/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wmin {

using Weight = std::vector<Rat>;  // dense coordinates over AlgebraData::coord_names

enum class Family { Psl22, Spo2m, D21, F4, G3 };

struct Ideal {
  Weight theta_i;       // highest root of the ideal of g^natural
  Rat hbar;             // dual Coxeter number of the ideal, rescaled (hbar_i)
  Rat M_slope, M_shift; // M_i(k) = M_slope * k + M_shift
  long chi;             // chi_i
  Rat u;                // (theta_i | theta_i)
};

struct AlgebraData {
  std::string name;
  Family family = Family::Psl22;
  long spo_m = 0;          // m for spo(2|m)
  long d21_m = 0, d21_n = 0;  // (m, n) for D(2,1;m/n)

  std::vector<std::string> coord_names;
  int dim = 0;                    // number of h* coordinates in this model
  std::vector<int> hnat_coords;   // coordinate indices spanning h^natural
  std::vector<std::vector<Rat>> gram;  // symmetric bilinear form
  Weight theta;                   // highest root, (theta|theta) = 2
  Rat h_dual;                     // h^vee
  std::vector<Ideal> ideals;

  std::vector<Weight> delta_nat_plus;  // positive roots of g^natural
  std::vector<Weight> simple_nat;      // simple roots of g^natural
  std::vector<Weight> delta_half_bar;  // nonzero h^natural-weights of g_{1/2}
  Weight xi;
  int eps_R = 0;        // 1 iff theta/2 is a root (0 is then also a weight)
  int dim_g_half = 0;   // dim g_{1/2}
  int dim_h = 0;        // multiplicity of the bosonic (1-q^n) factor

  // One or two admissible minimal-weight choices, with the matching positive
  // half-weight systems and rho_R values (same index).
  std::vector<Weight> eta_min_options;
  std::vector<std::vector<Weight>> delta_half_pos_options;
  std::vector<Weight> rho_R_options;
  Weight rho_nat;

  bool has_k0 = false;
  Rat k0;        // collapse level (only when has_k0)
  Rat k_crit;    // critical level -h^vee
  Rat u_norm;    // the normalization "u" of the identity tables
  Rat b_const;   // (h^vee + hbar^vee)/u
  Rat p1, p0;    // p(k) = k^2 + p1 k + p0

  std::vector<Weight> mnat_basis;  // Z-basis of the long-root lattice M^natural
  std::vector<Weight> ns_pi1bar;   // odd isotropic simple roots (full coordinates)

  // --- basic evaluations -------------------------------------------------

  Rat form(const Weight& a, const Weight& b) const;
  Rat M_of(std::size_t ideal, const Rat& k) const { return ideals[ideal].M_slope * k + ideals[ideal].M_shift; }
  Rat p_of(const Rat& k) const { return k * k + p1 * k + p0; }
  // nu(alpha^vee) = 2 (nu|alpha)/(alpha|alpha)
  Rat pair_covee(const Weight& nu, const Weight& alpha) const;
  Weight restrict_hnat(const Weight& w) const;  // zero the non-h^natural coords
  bool theta_half_is_root() const { return eps_R == 1; }

  std::string dump_json() const;
};

// Parses "psl(2|2)", "spo(2|m)" (m>=3), "D(2,1;m/n)" (coprime, != (1,1)),
// "F(4)", "G(3)"; also accepts the compact aliases psl22, spo5, d21_2_3, f4, g3.
AlgebraData lookup(const std::string& id);

// The fixed entries used by the test suites.
std::vector<std::string> list_algebras();

// rho = rho_nat + (1/2 - dim g_{1/2}/4) theta; satisfies (rho|theta)=h_dual-1.
Weight rho_g(const AlgebraData& d);

// p(k) derived from the weight data; must agree with (p1, p0).
// p(k) = (k+1)^2 + 2(rho_R|2 rho_nat - rho_R) - (k+h_dual) dim g_{1/2}/4
//        - 4 (rho_nat - rho_R | eta_min)^2 [theta/2 not a root]
void derive_p_poly(const AlgebraData& d, std::size_t choice, Rat& out_p1, Rat& out_p0);

// Throws on any violated catalog invariant (called by lookup()).
void validate(const AlgebraData& d);

// Weight vector helpers.
Weight wadd(const Weight& a, const Weight& b);
Weight wsub(const Weight& a, const Weight& b);
Weight wscale(const Rat& c, const Weight& a);
bool wis_zero(const Weight& a);
Weight wzero(int dim);

}  // namespace wmin
