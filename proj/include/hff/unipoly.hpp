#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hff/poly.hpp"
#include "hff/rational.hpp"

namespace hff {

/// Element of Q[t]; t is the affine coordinate on the parameter line.
/// Dense representation with exact rational coefficients.
using UniPoly = FPoly<BigRat>;

/// Integer polynomial, used internally by gcd/root-finding kernels.
using IntPoly = std::vector<BigInt>;

/// Kronecker-substitution product for Q[t]; routed through operator* of
/// FPoly<BigRat> so every caller gets it. Falls back to schoolbook for
/// small operands.
UniPoly poly_mul_impl(const UniPoly& a, const UniPoly& b);

/// Monic gcd computed with the subresultant pseudo-remainder sequence on a
/// primitive integer model, which keeps intermediate coefficients small.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

UniPoly squarefree_part(const UniPoly& a);

/// (primitive integer polynomial, positive content) with
/// a = (content / denominator-scale) * primitive; the BigRat factor returned
/// satisfies a = factor * primitive.
std::pair<IntPoly, BigRat> to_integer_primitive(const UniPoly& a);
UniPoly from_integer(const IntPoly& a);

int ipoly_degree(const IntPoly& a);  // kZeroPolyDegree for zero
IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b);
IntPoly ipoly_primitive(const IntPoly& a);
IntPoly ipoly_gcd_subresultant(IntPoly a, IntPoly b);

std::complex<double> eval_c(const UniPoly& p, std::complex<double> x);
double eval_d(const UniPoly& p, double x);

/// Renders in the expression grammar: "2*t^3 - t + 1/2". var defaults to t.
std::string to_string(const UniPoly& p, const std::string& var = "t");

}  // namespace hff
