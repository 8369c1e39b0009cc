#pragma once

// Affine weights, the bilinear form, the finite Weyl group W^natural of
// g^natural, translations t_alpha for alpha in the long-root lattice
// M^natural, and exact lattice enumeration for truncated Weyl sums.

#include "wmin/catalog.hpp"
#include "wmin/rat.hpp"

#include <functional>
#include <vector>

namespace wmin {

// a0 * Lambda_0 + dcoef * delta + fin (finite part in catalog coordinates).
struct AffineWeight {
  Rat a0;
  Rat dcoef;
  Weight fin;
};

// Image under ev: e^{ev(L)} = q^{qexp} e^{fin}, fin supported on h^natural.
struct EvWeight {
  Rat qexp;
  Weight fin;
};

// Affine extension of the form: (Lambda_0|delta)=1, (Lambda_0|Lambda_0)=(delta|delta)=0,
// finite part orthogonal to both.
Rat aform(const AlgebraData& d, const AffineWeight& a, const AffineWeight& b);

// lam(x) where x is dual to theta/2:  lam(x) = (fin|theta/2).
Rat pairing_x(const AlgebraData& d, const AffineWeight& lam);
// lam(x + D) = lam(x) + dcoef.
Rat pairing_xD(const AlgebraData& d, const AffineWeight& lam);

// ev(L) with qexp = -L(x+D) and fin = restriction of the finite part to h^natural.
EvWeight ev(const AlgebraData& d, const AffineWeight& lam);

// --- finite Weyl group ------------------------------------------------------

struct WeylElt {
  std::vector<int> word;               // indices into AlgebraData::simple_nat
  int det = 1;                         // (-1)^{length}
  std::vector<Weight> action;          // images of the coordinate unit vectors
};

// Reflection in the i-th simple root of Delta^nat_+ (acts on full coordinates).
Weight reflect_simple(const AlgebraData& d, int i, const Weight& w);

// Apply a word (leftmost letter acts last, i.e. word = s_{w[0]} s_{w[1]} ...).
Weight weyl_act(const AlgebraData& d, const std::vector<int>& word, const Weight& w);

// Full enumeration of W^natural (cached per algebra name).
const std::vector<WeylElt>& weyl_group(const AlgebraData& d);

Weight apply_action(const std::vector<Weight>& action, const Weight& w);

// Acts on the finite part only (delta/Lambda_0 coefficients are W-fixed).
AffineWeight weyl_act_affine(const AlgebraData& d, const std::vector<Weight>& action,
                             const AffineWeight& lam);

// --- translations -----------------------------------------------------------

// Integer coordinates of alpha in mnat_basis; throws if alpha is not in the
// Z-span.
std::vector<Int> mnat_coords(const AlgebraData& d, const Weight& alpha);

// t_alpha(lam) = lam + (2/v) lam(K) alpha_i - (2/v)((lam|alpha_i) + (1/v)(alpha_i|alpha_i)
// lam(K)) delta, applied per ideal with v = u_i after orthogonal decomposition
// of alpha into ideal components.  lam(K) is the Lambda_0-coefficient.
AffineWeight translate(const AlgebraData& d, const Weight& alpha, const AffineWeight& lam);

// --- small exact linear algebra --------------------------------------------

// Solves M x = rhs for square M by Gaussian elimination; throws if singular.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs);

// Fundamental weights of g^natural (dual basis to the simple coroots),
// supported on h^natural.
std::vector<Weight> fundamental_weights(const AlgebraData& d);

// --- lattice enumeration ----------------------------------------------------

// All integer combinations x of `basis` with Q(x) <= bound, where Q is an
// inhomogeneous quadratic whose quadratic part is positive definite.  Q is
// probed by exact finite differences; its quadratic character is verified on
// sample points and positive definiteness is checked via leading minors.
// Returned weights are in full catalog coordinates.
std::vector<Weight> enumerate_lattice_leq(const std::vector<Weight>& basis,
                                          const std::function<Rat(const Weight&)>& Q,
                                          const Rat& bound);

}  // namespace wmin
