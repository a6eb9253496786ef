#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "demazure/perm.hpp"
#include "demazure/shape.hpp"

namespace demazure {

using Coeff = long long;
// Exponent vectors are stored with trailing zeros trimmed.
using Exponents = std::vector<int>;

// Graded lexicographic, larger terms first: higher total degree wins,
// ties broken lexicographically with x1 heaviest.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// A sparse multivariate polynomial over the integers. No zero
// coefficients are stored. nvars() reports the ambient variable count,
// which operators extend on demand.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Coeff, GradedLexGreater>;

    Polynomial() = default;
    explicit Polynomial(Coeff constant);

    static Polynomial monomial(const Exponents& exps, Coeff coeff = 1);
    static Polynomial monomial(const WeakComposition& alpha, Coeff coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    int nvars() const;
    void declare_nvars(int n);
    int degree() const; // max total degree; 0 for the zero polynomial

    Coeff coeff(const Exponents& exps) const;
    const TermMap& terms() const { return terms_; }
    Coeff min_coeff() const; // 0 for the zero polynomial

    void add_term(Exponents exps, Coeff c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

    std::string to_string() const;

private:
    TermMap terms_;
    int declared_nvars_ = 0;
};

Polynomial scale(Coeff c, const Polynomial& f);

enum class OperatorKind { partial, pi, theta, swap };

// Exchanges the exponents of x_i and x_{i+1} in every term (i >= 1).
Polynomial swap_vars(int i, const Polynomial& f);

// The divided difference (1 - s_i)/(x_i - x_{i+1}), computed termwise by
// the closed form so everything stays in integer arithmetic.
Polynomial partial(int i, const Polynomial& f);

// pi_i = partial_i . x_i
Polynomial pi(int i, const Polynomial& f);

// theta_i = x_{i+1} . partial_i
Polynomial theta(int i, const Polynomial& f);

Polynomial apply_operator(OperatorKind kind, int i, const Polynomial& f);

// Applies the operator letters of `word` as a product read left to
// right, so the rightmost letter acts first: word {2,1} applied with
// theta computes theta_2(theta_1(f)).
Polynomial apply_word_letters(OperatorKind kind, const std::vector<int>& word,
                              const Polynomial& f);

// Same, with the word taken to be a reduced word of p; the result does
// not depend on which reduced word is chosen.
Polynomial apply_word(OperatorKind kind, const Permutation& p, const Polynomial& f);

// Parses the deterministic text form produced by to_string, e.g.
// "x1^2*x2 - 3*x3".
Polynomial parse_polynomial(const std::string& text);

} // namespace demazure
