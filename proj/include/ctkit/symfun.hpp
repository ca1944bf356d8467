#pragma once

// Schur and complete homogeneous functions on the principally specialised
// alphabet x^(a) = (x_1, x_1 q, ..., x_1 q^{a_1-1}, ..., x_n q^{a_n-1}),
// divided differences, key polynomials and the constant-term scalar
// product.

#include "ctkit/combi.hpp"
#include "ctkit/mpoly.hpp"

namespace ctkit {

/// h_m(x^(a)) over `table` (which must have at least a.size() x-variables),
/// by convolving the truncated geometric series of each letter.
MPoly complete_h(int m, const TablePtr& table, std::span<const int> a);
/// The same value as sum over |c| = m of prod x_i^{c_i} qbinom(a_i+c_i-1, c_i).
MPoly complete_h_oracle(int m, const TablePtr& table, std::span<const int> a);

/// s_lambda(x^(a)) from the Jacobi-Trudi determinant det(h_{lambda_i-i+j}).
MPoly schur_principal(const Composition& lambda, const TablePtr& table, std::span<const int> a);
MPoly schur_principal(const Composition& lambda, std::span<const int> a);
/// s_lambda(x_1, ..., x_n) as the bialternant a_{lambda+delta}/a_delta,
/// computed as the longest divided difference applied to x^{lambda+delta}.
MPoly schur_bialternant(const Composition& lambda, const TablePtr& table, int n);

/// q^{n(lambda)} prod_{s in lambda} (1 - q^{a+c(s)}) / (1 - q^{h(s)}) with
/// n(lambda) = sum_i (i-1) lambda_i.
IntPoly hook_content(const Composition& lambda, int a);

/// (f - s_i f) / (x_i - x_{i+1}).
MPoly divided_difference(int i, const MPoly& f);
/// pi_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}).
MPoly isobaric_pi(int i, const MPoly& f);
/// pihat_i = pi_i - id.
MPoly isobaric_pihat(int i, const MPoly& f);
/// s_i acting on the x-variables.
MPoly swap_x(int i, const MPoly& f);

enum class SwapOrder { rightmost, leftmost };
/// Key polynomial K_v: x^v for dominant v, else pi_i K_{s_i v} for an ascent
/// v_i < v_{i+1} (the rightmost one unless told otherwise).
MPoly key_poly(const Composition& v, const TablePtr& table, SwapOrder order = SwapOrder::rightmost);
MPoly keyhat_poly(const Composition& v, const TablePtr& table, SwapOrder order = SwapOrder::rightmost);

/// g(x_n^{-1}, ..., x_1^{-1}).
MPoly reverse_invert(const MPoly& g);
/// CT[f(x) g(x_n^{-1}, ..., x_1^{-1}) prod_{i<j} (1 - x_i/x_j)]; f and g may
/// only involve q and x.
IntPoly scalar_product(const MPoly& f, const MPoly& g);

/// x^v as an MPoly.
MPoly x_monomial(const TablePtr& table, const Composition& v);

}  // namespace ctkit
