#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "demazure/basis.hpp"
#include "demazure/poly.hpp"
#include "demazure/shape.hpp"

namespace demazure {

// Parameters of the two-variable key products: m >= n >= 0, k >= l >= 0.
struct ClosedFormParams {
    int m = 0, n = 0, k = 0, l = 0;
};

// f = sum over I of theta_I(component[I]) with I ranging over the six
// reduced words of S_3; every component is supported on partitions.
struct ThetaDecomposition {
    static const std::vector<std::string>& words(); // "", "1", "2", "12", "21", "121"

    std::map<std::string, Polynomial> components;

    const Polynomial& component(const std::string& word) const;
    Polynomial reconstruct() const;
};

// Regroups the atom expansion of a 3-variable polynomial: the atom A_beta
// whose omega_beta^{-1} has reduced word I contributes x^{sort(beta)} to
// component I.
ThetaDecomposition theta_decompose(const Polynomial& f);

AtomExpansion product_expand_atoms(const Polynomial& f, const Polynomial& g, int nvars);
KeyExpansion product_expand_keys(const Polynomial& f, const Polynomial& g, int nvars);

// s_lambda(x_1..x_nvars) as the key of the reversed padded shape.
Polynomial schur(const Partition& lambda, int nvars);

// Expands kappa_gamma * s_lambda in the key basis.
KeyExpansion key_times_schur(const WeakComposition& gamma, const Partition& lambda,
                             int nvars);

// pi_1(x1^m x2^n) * pi_2(x1^k x2^l) assembled from the closed form.
Polynomial closed_form_71(const ClosedFormParams& p);
// pi_1(x1^m x2^n) * pi_21(x1^k x2^l)
Polynomial closed_form_72(const ClosedFormParams& p);
// pi_2(x1^m x2^n) * pi_12(x1^k x2^l)
Polynomial closed_form_73(const ClosedFormParams& p);
// pi_12(x1^m x2^n) * pi_21(x1^k x2^l)
Polynomial closed_form_74(const ClosedFormParams& p);

// The direct operator product each closed form must reproduce.
Polynomial closed_form_oracle(int form, const ClosedFormParams& p);

// Strips r copies of the full row (x1 x2 x3): r is the smallest part,
// reduced = alpha - (r,r,r).
std::pair<int, WeakComposition> reduce_common_rows(const WeakComposition& alpha3);

struct SweepRecord {
    std::vector<std::pair<std::string, std::string>> params;
    std::string basis;
    Coeff min_coeff = 0;
    bool ok = true;
};

struct SweepReport {
    std::string kind;
    std::vector<SweepRecord> records;

    int counterexamples() const;
    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;
};

// x^lambda * A_alpha atom-positive (lambda, alpha over <=`parts` parts,
// weight <= max_weight).
SweepReport sweep_thm413(int max_weight, int parts, int jobs);
// x^lambda * kappa_gamma key-positive on the same grid.
SweepReport sweep_thm415(int max_weight, int parts, int jobs);
// kappa_gamma * s_lambda key-positive, nvars = 3.
SweepReport sweep_thm418(int max_gamma, int max_lambda, int jobs);
// All pairs of length-3 keys with entries <= max_part, row-reduced, then
// expanded in atoms.
SweepReport sweep_conjecture(int max_part, int jobs);
// Closed forms 7.1-7.4 against the direct operator product on the
// ordered grid 0 <= n <= m <= max, 0 <= l <= k <= max.
SweepReport sweep_closed_forms(int max, int jobs);

} // namespace demazure
