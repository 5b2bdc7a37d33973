#include "hff/numpoly.hpp"

#include <cmath>

namespace hff {

using cd = std::complex<double>;

static cd horner(const std::vector<cd>& c, cd x) {
    cd acc(0.0, 0.0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

std::vector<cd> complex_roots(std::vector<cd> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    size_t n = coeffs.size() - 1;
    cd lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;

    double radius = 0.0;
    for (size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(coeffs[i]));
    radius = 1.0 + radius;

    std::vector<cd> r(n);
    for (size_t k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * (static_cast<double>(k) + 0.25) / static_cast<double>(n);
        r[k] = radius * cd(std::cos(ang), std::sin(ang));
    }
    for (int iter = 0; iter < 600; ++iter) {
        double delta = 0.0;
        for (size_t k = 0; k < n; ++k) {
            cd denom(1.0, 0.0);
            for (size_t j = 0; j < n; ++j)
                if (j != k) denom *= (r[k] - r[j]);
            cd step = horner(coeffs, r[k]) / denom;
            r[k] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-14 * (1.0 + radius)) break;
    }
    // Newton polish
    std::vector<cd> dcoef(n);
    for (size_t i = 1; i <= n; ++i) dcoef[i - 1] = coeffs[i] * static_cast<double>(i);
    for (auto& root : r)
        for (int it = 0; it < 4; ++it) {
            cd d = horner(dcoef, root);
            if (std::abs(d) < 1e-300) break;
            root -= horner(coeffs, root) / d;
        }
    return r;
}

std::vector<cd> complex_roots(const UniPoly& p) {
    std::vector<cd> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(to_complex(q));
    return complex_roots(std::move(c));
}

}  // namespace hff
