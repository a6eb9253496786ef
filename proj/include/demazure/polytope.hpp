#pragma once

#include <array>
#include <map>
#include <string>

#include "demazure/poly.hpp"

namespace demazure {

using LatticePoint = std::array<int, 3>;

// Monomials of a nonnegative 3-variable polynomial, viewed as weighted
// lattice points on a degree plane.
struct LatticeCloud {
    std::map<LatticePoint, Coeff> points;

    bool empty() const { return points.empty(); }
    Coeff max_multiplicity() const;
};

// Throws NegativeCoefficient for signed polynomials: only nonnegative
// clouds have a drawing.
LatticeCloud cloud_of(const Polynomial& f);

// All Coxeter sectors R1..R6 whose inequality chain the point satisfies
// (boundary points carry every satisfied tag).
std::vector<int> region_of(const LatticePoint& p);

// Integer drawing coordinates: u = a1 - a2, v = a1 + a2 - 2*a3;
// injective on each degree plane.
std::pair<int, int> project(const LatticePoint& p);

std::string render_csv(const LatticeCloud& cloud);
std::string render_svg(const LatticeCloud& cloud, int canvas = 600);

// Writes CSV or SVG depending on the path extension.
void emit(const LatticeCloud& cloud, const std::string& path);

} // namespace demazure
