#pragma once

// Scalar bounds A and B, the Ramond-extremality test, and the unitarity
// classification for sigma_R-twisted highest weight modules L^W(nu, ell).

#include "wmin/catalog.hpp"
#include "wmin/rat.hpp"

#include <string>
#include <utility>

namespace wmin {

enum class Sector { NS, Ramond };

enum class Status {
  NotLevelAdmissible,
  NotDominant,
  Unitary,
  UnitaryConditionalOnConjecture,
  ExtremalBoundaryOpen,
  FailsNecessary,
};

std::string status_str(Status s);

struct UnitarityVerdict {
  Status status = Status::FailsNecessary;
  Rat A, B;
  bool is_ramond_extremal = false;
  Weight eta_min_used;
  bool conjecture_assumed = false;
  std::string note;
};

// nu in P^+_k: dominant integral for g^natural and nu(theta_i^vee) <= M_i(k).
bool in_Pk_plus(const AlgebraData& d, const Rat& k, const Weight& nu);

// All M_i(k) are nonnegative integers.
bool level_admissible(const AlgebraData& d, const Rat& k);

// c_{gamma,eta}: for eta != 0, (gamma|eta) when <= 0 and 0 otherwise; for
// eta = 0, -1/2 when gamma has minimal length in Delta^natural and 0 otherwise.
Rat c_gamma_eta(const AlgebraData& d, const Weight& gamma, const Weight& eta);

// F_nu(eta) = 2(eta|nu)^2 + sum over positive gamma of (c_{gamma,eta} +
// c_{gamma,-eta})(nu|gamma).  For eta = 0 (theta/2 a root) this reduces to
// -2(nu|rho_R).
Rat F_of(const AlgebraData& d, const Weight& nu, const Weight& eta);

const Weight& eta_min(const AlgebraData& d, std::size_t choice);

// Brute-force minimum of F_nu over the positive half-weights (plus 0 when
// theta/2 is a root); returns the value and a minimizing eta.
std::pair<Rat, Weight> min_F(const AlgebraData& d, const Weight& nu);

// Necessary bound: ell >= A(k, nu) for unitarity.
Rat A_bound(const AlgebraData& d, const Rat& k, const Weight& nu);

// Sufficient bound for non-extremal nu.
Rat B_bound(const AlgebraData& d, const Rat& k, const Weight& nu, std::size_t choice);

// nu - rho_R outside P^+_k, or inside it but extremal
// ((nu-rho_R)(theta_i^vee) > M_i(k) + chi_i for some i).
bool ramond_extremal(const AlgebraData& d, const Rat& k, const Weight& nu,
                     std::size_t choice);

UnitarityVerdict verdict(const AlgebraData& d, const Rat& k, const Weight& nu,
                         const Rat& ell, Sector sector, bool assume_conjecture,
                         std::size_t choice);

// ell(s) for nu_hat_s = k Lambda_0 + s theta + nu + rho_R, and
// d(s) = ell(s) - B(k, nu, rho_R) = (s - ((k+1)/2 - eps/4))^2 / (k + h_dual).
Rat ell_of_s(const AlgebraData& d, const Rat& k, const Weight& nu, const Rat& s,
             std::size_t choice);
Rat d_of_s(const AlgebraData& d, const Rat& k, const Weight& nu, const Rat& s,
           std::size_t choice);

// Normalized squared norm of G_0 applied to the highest weight vector, for a
// g_{-1/2}-weight eta (eta = 0 allowed only when theta/2 is a root).
Rat g0_norm(const AlgebraData& d, const Rat& k, const Weight& nu, const Rat& ell,
            const Weight& eta);

// Massless: ell = A(k,nu), and additionally nu Ramond extremal when theta/2 is
// a root.
bool massless_predicate(const AlgebraData& d, const Rat& k, const Weight& nu,
                        const Rat& ell, std::size_t choice);

}  // namespace wmin
