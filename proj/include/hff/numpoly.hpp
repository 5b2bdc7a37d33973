#pragma once

#include <complex>
#include <vector>

#include "hff/unipoly.hpp"

namespace hff {

/// All complex roots of a polynomial given by coefficients (ascending
/// powers), by Durand-Kerner iteration with Newton polish. Intended for the
/// modest degrees this project meets; leading zeros are stripped.
std::vector<std::complex<double>> complex_roots(std::vector<std::complex<double>> coeffs);

std::vector<std::complex<double>> complex_roots(const UniPoly& p);

}  // namespace hff
