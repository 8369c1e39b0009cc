#pragma once

// Twisted (Ramond) and untwisted (NS) denominators, affine highest weights,
// the conformal weight function ell(Lambda_hat), and truncated character
// formulas for highest weight modules of the minimal W-algebras, all as exact
// QSeries.
//
// Exponential variables of every series produced here are indexed by the
// simple coroots of g^natural: a finite weight mu is encoded as the integer
// vector (mu(alpha_i^vee))_i over AlgebraData::simple_nat.  This encoding is
// faithful on h^natural-functionals (for psl(2|2) it collapses the central
// direction, as required for the character identities to close).

#include "wmin/qseries.hpp"
#include "wmin/weights.hpp"

#include <cstddef>
#include <vector>

namespace wmin {

// Twist contributions to the Weyl vector and the vacuum anomaly.
struct TwistData {
  Weight gamma_prime;   // 2 rho_R - rho - (eps/4) theta
  Weight gamma_half;    // rho_R - (eps/8) theta
  AffineWeight rho_tw;  // -gamma_prime + h_dual * Lambda_0
  Rat s_gh;             // -dim g_{1/2} / 16
};

TwistData twist_data(const AlgebraData& d, std::size_t choice);

// s_fg(k) = k (dim g_{1/2} - 2 eps) / (8 (k + h_dual)).
Rat s_fg(const AlgebraData& d, const Rat& k);
// a(k) = s_fg(k) + s_gh.
Rat a_of_k(const AlgebraData& d, const Rat& k);

// rho_hat = rho + h_dual Lambda_0 (NS Weyl vector).
AffineWeight rho_hat_ns(const AlgebraData& d);

// nu_hat_s = k Lambda_0 + s theta + nu + rho_R(choice)   (Ramond sector).
AffineWeight nu_hat_s(const AlgebraData& d, const Rat& k, const Weight& nu,
                      const Rat& s, std::size_t choice);
// nu_hat_t = k Lambda_0 + t theta + nu   (NS sector).
AffineWeight nu_hat_t_ns(const AlgebraData& d, const Rat& k, const Weight& nu,
                         const Rat& t);

// ell(Lambda_hat) = (L|L+2 rho_tw)/(2(k+h_dual)) - L(x+D) + a(k).
// Throws if lamhat.a0 != k.
Rat ell_of_affine(const AlgebraData& d, const Rat& k, const AffineWeight& lamhat,
                  std::size_t choice);
// Equivalent closed form written through the finite part of the weight (for
// weights without a delta-component); kept as an independent oracle for
// ell_of_affine.
Rat ell_of_affine_direct(const AlgebraData& d, const Rat& k,
                         const AffineWeight& lamhat, std::size_t choice);

// A weight is degenerate when its pairing with (delta - theta)^vee is a
// nonnegative integer; degenerate weights are annihilated by the reduction
// functor.
bool is_degenerate(const AlgebraData& d, const AffineWeight& lamhat);

// Typicality of nu_hat_s checked through the explicit inequalities:
//  - theta/2 a root: nu not Ramond extremal and s = (2k+1)/4;
//  - otherwise: nu not Ramond extremal and one of s, k+1-s lies in
//    [ (k+1)/2, (k+1)/2 + |(nu - rho_R + rho_nat | eta_min)| ).
bool nu_hat_s_typical(const AlgebraData& d, const Rat& k, const Weight& nu,
                      const Rat& s, std::size_t choice);

// The massless parameter: ell(s0) = A(k, nu).
Rat s0_of(const AlgebraData& d, const Rat& k, const Weight& nu, std::size_t choice);
// NS candidates t0 with ell_NS(t0) = A(k, nu): { (nu|xi), k+1-(nu|xi) }.
std::vector<Rat> t0_options(const AlgebraData& d, const Rat& k, const Weight& nu);

// Simple odd isotropic roots orthogonal to nu_hat_{s0} + rho_tw (Ramond) and
// the odd simple roots of g (NS), as affine weights.
std::vector<AffineWeight> pi1bar_nu(const AlgebraData& d, const Rat& k,
                                    const Weight& nu, std::size_t choice);
std::vector<AffineWeight> pi1bar_ns(const AlgebraData& d);

// --- exponential-variable encoding ------------------------------------------

int char_arity(const AlgebraData& d);                       // rank of g^natural
ExpVec enc_weight(const AlgebraData& d, const Weight& w);   // coroot coordinates

// Pluggable encoding of finite weights into integer exponent vectors; the
// character functions use coroot_encoder, the denominator-identity module
// substitutes its own display-variable encoders.
struct Encoder {
  int arity = 0;
  std::function<ExpVec(const Weight&)> map;
};
Encoder coroot_encoder(const AlgebraData& d);

// --- Weyl-translation sums ---------------------------------------------------

// sum over w in W^natural and alpha in M^natural of
//   det(w) q^{pref_q} e^{ev(w t_alpha (lam + rho_like) - rho_like)}
//     / prod_{beta in pi1} (1 + e^{-ev(w t_alpha (beta))}),
// truncated at q^{lead + rel_order} where lead = pref_q + ev(lam).qexp.
// Inverse factors whose q-shift vanishes cannot be expanded as series; every
// term is instead multiplied by the q^0 binomials it does not carry, so that
// `series` equals the sum times the product of the binomials in `q0_cleared`
// (with multiplicities), which the caller divides back out (or cross-multiplies
// against, for identity checking).
struct WeylSum {
  QSeries series;
  std::vector<std::pair<ExpVec, int>> q0_cleared;
};

WeylSum weyl_translation_sum(const AlgebraData& d, const Encoder& enc,
                             const AffineWeight& lam, const AffineWeight& rho_like,
                             const std::vector<AffineWeight>& pi1,
                             const Rat& pref_q, const Rat& rel_order);

// --- characters (exact; finite Laurent coefficient at every q-level) --------

// RHS of the typical character formula: the Weyl-translation sum with the
// global q-prefactor and e^{-rho_R}, including the 1/2 prefactor when theta/2
// is a root and ell = A (and nothing else).  `ell` must satisfy ell >= A; the
// sum depends on ell only through the overall power q^{ell}.
QSeries char_numerator_typical(const AlgebraData& d, const Rat& k, const Weight& nu,
                               const Rat& ell, std::size_t choice, const Rat& order);

// ch L^W(nu, ell) for typical (non-extremal) highest weights, obtained from
// char_numerator_typical by exact division by the Ramond denominator.
QSeries char_ramond_typical(const AlgebraData& d, const Rat& k, const Weight& nu,
                            const Rat& ell, std::size_t choice, const Rat& order);

// ch L^W(nu, A(k,nu)) via the massless formula (Weyl-translation sum with the
// Pi^nu_1bar inverse factors, divided by (1+eps) and the Ramond denominator).
QSeries char_ramond_massless(const AlgebraData& d, const Rat& k, const Weight& nu,
                             std::size_t choice, const Rat& order);

// NS analogue at ell = A(k,nu); t0 is chosen as the first non-degenerate
// entry of t0_options (throws if both are degenerate).
QSeries char_ns_massless(const AlgebraData& d, const Rat& k, const Weight& nu,
                         std::size_t choice, const Rat& order);

// --- denominators and Verma characters (windowed expansions) ----------------
//
// The Ramond denominator and its inverse have infinite Laurent coefficients
// at each q-level; they are returned truncated to the exponent window
// [-window, window] per variable.  Coefficients inside the window are exact
// provided the window dominates the exponent drift at the requested order;
// the test-suite checks stability under window enlargement.

QSeries denominator_R(const AlgebraData& d, std::size_t choice, const Rat& order,
                      long window);
QSeries denominator_NS(const AlgebraData& d, const Rat& order, long window);
QSeries inv_denominator_R(const AlgebraData& d, std::size_t choice, const Rat& order,
                          long window);
QSeries inv_denominator_NS(const AlgebraData& d, const Rat& order, long window);

// ch M^W(nu, ell) = q^ell e^nu / F^R: the Verma character.
QSeries char_verma_R(const AlgebraData& d, const Rat& k, const Weight& nu,
                     const Rat& ell, std::size_t choice, const Rat& order,
                     long window);

// Worker threads (WMIN_THREADS override, else hardware concurrency).
unsigned thread_count();

}  // namespace wmin
