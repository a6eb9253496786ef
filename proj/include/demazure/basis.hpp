#pragma once

#include <map>
#include <string>

#include "demazure/poly.hpp"
#include "demazure/shape.hpp"

namespace demazure {

// Deterministic order for expansion indices: higher degree first, then
// lexicographically larger composition first.
struct CompositionGreater {
    bool operator()(const WeakComposition& a, const WeakComposition& b) const;
};

// Coefficients of an exact expansion f = sum coeffs[beta] * A_beta.
// Indices are compositions padded to nvars parts.
struct AtomExpansion {
    std::map<WeakComposition, Coeff, CompositionGreater> coeffs;
    int nvars = 0;

    Coeff min_coeff() const;
    bool positive() const { return min_coeff() >= 0; }
    std::string to_string() const; // "A(1,0,3) - 2*A(2,1,0)"
};

// Same for keys: f = sum coeffs[gamma] * kappa_gamma.
struct KeyExpansion {
    std::map<WeakComposition, Coeff, CompositionGreater> coeffs;
    int nvars = 0;

    Coeff min_coeff() const;
    bool positive() const { return min_coeff() >= 0; }
    std::string to_string() const;
};

// lambda dominates mu: equal sizes and all prefix sums of lambda are >=
// those of mu.
bool dominates(const Partition& lambda, const Partition& mu);

// Memoized atom/key polynomials (operator route).
Polynomial atom_polynomial(const WeakComposition& beta);
Polynomial key_polynomial(const WeakComposition& gamma);

// Exact atom expansion by greedy peeling: repeatedly subtract the atom
// of a maximal remaining monomial (graded, then dominance of sorted
// shape, then shortest omega, then lexicographic). Falls back to the
// stratum linear solve if peeling stalls.
AtomExpansion expand_atoms(const Polynomial& f, int nvars);

// The fallback route: unitriangular back-substitution against the full
// atom matrix of each (degree, nvars) stratum.
AtomExpansion expand_atoms_by_solve(const Polynomial& f, int nvars);

// {beta : sort(beta) = sort(gamma), omega_beta <= omega_gamma}; satisfies
// kappa_gamma = sum of A_beta over the support.
std::vector<WeakComposition> key_atom_support(const WeakComposition& gamma);

// Inverts the class-local unitriangular support matrix over the integers.
KeyExpansion atoms_to_keys(const AtomExpansion& e);

KeyExpansion expand_keys(const Polynomial& f, int nvars);

bool is_atom_positive(const Polynomial& f, int nvars);
bool is_key_positive(const Polynomial& f, int nvars);

// Reconstruction, for round-trip checks.
Polynomial atom_sum(const AtomExpansion& e);
Polynomial key_sum(const KeyExpansion& e);

} // namespace demazure
