#include "wmin/unitarity.hpp"

#include <algorithm>
#include <stdexcept>

namespace wmin {

namespace {

bool is_nonneg_int(const Rat& r) { return r.get_den() == 1 && r >= 0; }

Rat rabs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

void require_not_critical(const AlgebraData& d, const Rat& k) {
  if (k == -d.h_dual) throw std::invalid_argument(d.name + ": k equals the critical level");
}

bool valid_half_weight(const AlgebraData& d, const Weight& eta) {
  if (wis_zero(eta)) return d.eps_R == 1;
  return std::find(d.delta_half_bar.begin(), d.delta_half_bar.end(), eta) !=
         d.delta_half_bar.end();
}

// Smallest |(gamma|gamma)| over Delta^natural (the form is negative definite
// on h^natural, so lengths are compared by absolute value).
Rat min_root_norm(const AlgebraData& d) {
  Rat best;
  bool first = true;
  for (const auto& g : d.delta_nat_plus) {
    Rat n = rabs(d.form(g, g));
    if (first || n < best) best = n, first = false;
  }
  return best;
}

}  // namespace

std::string status_str(Status s) {
  switch (s) {
    case Status::NotLevelAdmissible: return "NotLevelAdmissible";
    case Status::NotDominant: return "NotDominant";
    case Status::Unitary: return "Unitary";
    case Status::UnitaryConditionalOnConjecture: return "UnitaryConditionalOnConjecture";
    case Status::ExtremalBoundaryOpen: return "ExtremalBoundaryOpen";
    case Status::FailsNecessary: return "FailsNecessary";
  }
  return "?";
}

bool level_admissible(const AlgebraData& d, const Rat& k) {
  for (std::size_t i = 0; i < d.ideals.size(); ++i)
    if (!is_nonneg_int(d.M_of(i, k))) return false;
  return true;
}

bool in_Pk_plus(const AlgebraData& d, const Rat& k, const Weight& nu) {
  if (d.restrict_hnat(nu) != nu) return false;  // must vanish on the theta line
  for (const auto& a : d.simple_nat)
    if (!is_nonneg_int(d.pair_covee(nu, a))) return false;
  for (std::size_t i = 0; i < d.ideals.size(); ++i)
    if (d.pair_covee(nu, d.ideals[i].theta_i) > d.M_of(i, k)) return false;
  return true;
}

Rat c_gamma_eta(const AlgebraData& d, const Weight& gamma, const Weight& eta) {
  bool is_root = false;
  for (const auto& g : d.delta_nat_plus)
    if (g == gamma || wscale(Rat(-1), g) == gamma) { is_root = true; break; }
  if (!is_root) throw std::invalid_argument("c_gamma_eta: gamma is not a root of g^natural");
  if (!valid_half_weight(d, eta))
    throw std::invalid_argument("c_gamma_eta: eta is not a weight of g_{-1/2}");
  if (wis_zero(eta))
    return rabs(d.form(gamma, gamma)) == min_root_norm(d) ? rat(-1, 2) : Rat(0);
  Rat p = d.form(gamma, eta);
  return p <= 0 ? p : Rat(0);
}

Rat F_of(const AlgebraData& d, const Weight& nu, const Weight& eta) {
  if (!valid_half_weight(d, eta))
    throw std::invalid_argument("F_of: eta is not a weight of g_{-1/2}");
  Rat p = d.form(eta, nu);
  Rat F = 2 * p * p;
  Weight meta = wscale(Rat(-1), eta);
  for (const auto& g : d.delta_nat_plus)
    F += (c_gamma_eta(d, g, eta) + c_gamma_eta(d, g, meta)) * d.form(nu, g);
  return F;
}

const Weight& eta_min(const AlgebraData& d, std::size_t choice) {
  if (choice >= d.eta_min_options.size())
    throw std::invalid_argument(d.name + ": invalid eta_min choice");
  return d.eta_min_options[choice];
}

std::pair<Rat, Weight> min_F(const AlgebraData& d, const Weight& nu) {
  // F is even in eta, so scanning all nonzero weights of g_{1/2} covers the
  // positive system of either choice; eta_min candidates are tried first so a
  // tie resolves to the distinguished minimizer.
  std::vector<Weight> cands = d.eta_min_options;
  for (const auto& e : d.delta_half_bar) cands.push_back(e);
  Rat best;
  Weight arg;
  bool first = true;
  for (const auto& e : cands) {
    Rat v = F_of(d, nu, e);
    if (first || v < best) best = v, arg = e, first = false;
  }
  return {best, arg};
}

Rat A_bound(const AlgebraData& d, const Rat& k, const Weight& nu) {
  require_not_critical(d, k);
  const Rat h = k + d.h_dual;
  if (d.theta_half_is_root()) {
    Weight shift = wadd(nu, wscale(Rat(2), wsub(d.rho_nat, d.rho_R_options[0])));
    return (d.form(nu, shift) - d.p_of(k) / 2) / (2 * h);
  }
  Weight shift = wadd(nu, wscale(Rat(2), d.rho_nat));
  return (d.form(nu, shift) - d.p_of(k) / 2 + min_F(d, nu).first) / (2 * h);
}

Rat B_bound(const AlgebraData& d, const Rat& k, const Weight& nu, std::size_t choice) {
  require_not_critical(d, k);
  if (choice >= d.rho_R_options.size())
    throw std::invalid_argument(d.name + ": invalid rho_R choice");
  const Rat h = k + d.h_dual;
  Weight mu = wsub(nu, d.rho_R_options[choice]);
  Weight shift = wadd(mu, wscale(Rat(2), d.rho_nat));
  return -(k + 1) * (k + 1) / (4 * h) + d.form(mu, shift) / (2 * h) +
         rat(d.dim_g_half, 16);
}

bool ramond_extremal(const AlgebraData& d, const Rat& k, const Weight& nu,
                     std::size_t choice) {
  if (choice >= d.rho_R_options.size())
    throw std::invalid_argument(d.name + ": invalid rho_R choice");
  Weight mu = wsub(nu, d.rho_R_options[choice]);
  if (!in_Pk_plus(d, k, mu)) return true;
  for (std::size_t i = 0; i < d.ideals.size(); ++i)
    if (d.pair_covee(mu, d.ideals[i].theta_i) > d.M_of(i, k) + d.ideals[i].chi)
      return true;
  return false;
}

UnitarityVerdict verdict(const AlgebraData& d, const Rat& k, const Weight& nu,
                         const Rat& ell, Sector sector, bool assume_conjecture,
                         std::size_t choice) {
  UnitarityVerdict v;
  v.eta_min_used = eta_min(d, choice);
  if (!level_admissible(d, k)) {
    v.status = Status::NotLevelAdmissible;
    v.note = "some M_i(k) is not a nonnegative integer";
    return v;
  }
  if (!in_Pk_plus(d, k, nu)) {
    v.status = Status::NotDominant;
    v.note = "nu is not in P^+_k";
    return v;
  }
  v.A = A_bound(d, k, nu);
  v.B = B_bound(d, k, nu, choice);
  v.is_ramond_extremal = ramond_extremal(d, k, nu, choice);
  if (sector == Sector::NS) {
    v.status = Status::ExtremalBoundaryOpen;
    v.note = "NS classification is limited to admissibility and extremality reporting";
    return v;
  }
  if (ell < v.A || (v.is_ramond_extremal && ell != v.A)) {
    v.status = Status::FailsNecessary;
    v.note = v.is_ramond_extremal ? "extremal weights require ell = A" : "ell < A";
    return v;
  }
  if (v.is_ramond_extremal) {  // ell == A on the extremal boundary
    bool proved = (d.family == Family::Spo2m && d.spo_m == 3) ||
                  (d.family == Family::Psl22 && wis_zero(nu));
    v.status = proved ? Status::Unitary : Status::ExtremalBoundaryOpen;
    if (proved) v.note = "proved extremal case";
    return v;
  }
  if (d.theta_half_is_root() || ell >= v.B) {
    v.status = Status::Unitary;
    return v;
  }
  v.status = Status::UnitaryConditionalOnConjecture;
  v.conjecture_assumed = assume_conjecture;
  v.note = "A <= ell < B: sufficiency rests on the simple-quotient conjecture";
  return v;
}

Rat ell_of_s(const AlgebraData& d, const Rat& k, const Weight& nu, const Rat& s,
             std::size_t choice) {
  require_not_critical(d, k);
  const Rat h = k + d.h_dual;
  const Rat eps = rat(d.eps_R, 1);
  const Weight& rhoR = d.rho_R_options.at(choice);
  Weight mu = wsub(nu, rhoR);
  Weight shift = wadd(mu, wscale(Rat(2), d.rho_nat));
  return d.form(mu, shift) / (2 * h) + s * (s - k - 1 + eps / 2) / h +
         2 * d.form(rhoR, wsub(d.rho_nat, rhoR)) / h +
         k * (d.dim_g_half - 2 * d.eps_R) / (8 * h) - rat(d.dim_g_half, 16);
}

Rat d_of_s(const AlgebraData& d, const Rat& k, const Weight& nu, const Rat& s,
           std::size_t choice) {
  return ell_of_s(d, k, nu, s, choice) - B_bound(d, k, nu, choice);
}

Rat g0_norm(const AlgebraData& d, const Rat& k, const Weight& nu, const Rat& ell,
            const Weight& eta) {
  require_not_critical(d, k);
  if (!valid_half_weight(d, eta))
    throw std::invalid_argument("g0_norm: eta is not a weight of g_{-1/2}");
  const Rat h = k + d.h_dual;
  if (wis_zero(eta)) {
    Weight shift = wadd(nu, wscale(Rat(2), wsub(d.rho_nat, d.rho_R_options[0])));
    return 2 * (-2 * h * ell + d.form(nu, shift) - d.p_of(k) / 2);
  }
  Weight shift = wadd(nu, wscale(Rat(2), d.rho_nat));
  return -2 * h * ell + d.form(nu, shift) - d.p_of(k) / 2 + F_of(d, nu, eta);
}

bool massless_predicate(const AlgebraData& d, const Rat& k, const Weight& nu,
                        const Rat& ell, std::size_t choice) {
  if (ell != A_bound(d, k, nu)) return false;
  if (!d.theta_half_is_root()) return true;
  return ramond_extremal(d, k, nu, choice);
}

}  // namespace wmin
