#ifndef SFWG_NORMS_HPP
#define SFWG_NORMS_HPP

#include "sfwg/space.hpp"

namespace sfwg {

/// ||v||_{0,h}: sqrt of (v0,v0) + sum_T h_T <v0-v_b, v0-v_b>_dT. Coincides
/// with sqrt(a(v,v)); follows the space's penalty exponent.
double norm_0h(const WeakSpace& space, const WeakFunction& v);

/// |||v|||: sqrt of (grad_w v, grad_w v). Zero exactly on global constants.
double triple_norm(const WeakSpace& space, const WeakFunction& v);

/// ||v||_{1,h}: sqrt of sum_T ||grad v0||^2 + h_T^{-1} ||v0-v_b||^2_dT.
double norm_1h(const WeakSpace& space, const WeakFunction& v);

/// |||psi|||_1 for psi in V_h^0, built from Q_0 of the weak-gradient
/// divergence and Q_b of the weak-gradient normal jumps ("h" is the global
/// mesh size).
double triple_norm_1(const WeakSpace& space, const WeakFunction& psi);

/// The inf-sup test function v* = {-Q_0(div grad_w psi), h^-1 Q_b[grad_w psi]};
/// satisfies b(v*, psi) = |||psi|||_1^2.
WeakFunction vstar(const WeakSpace& space, const WeakFunction& psi);

enum class ErrorNorm { Energy, L2 };

/// |||Q_h exact - vh||| or ||Q_0 exact - v_0|| (the table norms).
double error_vs_projection(const WeakSpace& space, const ScalarFn& exact, const WeakFunction& vh,
                           ErrorNorm which);

/// log2(e_coarse / e_fine); throws std::invalid_argument on nonpositive input.
double observed_rate(double e_coarse, double e_fine);

}  // namespace sfwg

#endif
