#include "demazure/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "demazure/errors.hpp"

namespace demazure {

namespace {

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

void trim(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

} // namespace

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int ai = i < a.size() ? a[i] : 0;
        const int bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai > bi;
    }
    return false;
}

Polynomial::Polynomial(Coeff constant) {
    if (constant != 0) terms_[{}] = constant;
}

Polynomial Polynomial::monomial(const Exponents& exps, Coeff coeff) {
    Polynomial p;
    p.declared_nvars_ = static_cast<int>(exps.size());
    Exponents e = exps;
    trim(e);
    if (coeff != 0) p.terms_[std::move(e)] = coeff;
    return p;
}

Polynomial Polynomial::monomial(const WeakComposition& alpha, Coeff coeff) {
    return monomial(alpha.parts, coeff);
}

int Polynomial::nvars() const {
    std::size_t n = static_cast<std::size_t>(declared_nvars_);
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return static_cast<int>(n);
}

void Polynomial::declare_nvars(int n) {
    declared_nvars_ = std::max(declared_nvars_, n);
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Coeff Polynomial::coeff(const Exponents& exps) const {
    Exponents e = exps;
    trim(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

Coeff Polynomial::min_coeff() const {
    Coeff m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || c < m) m = c;
        first = false;
    }
    return m;
}

void Polynomial::add_term(Exponents exps, Coeff c) {
    if (c == 0) return;
    trim(exps);
    auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const { return scale(-1, *this); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    declared_nvars_ = std::max(declared_nvars_, o.declared_nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    declared_nvars_ = std::max(declared_nvars_, o.declared_nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    r.declared_nvars_ = std::max(declared_nvars_, o.declared_nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

Polynomial scale(Coeff c, const Polynomial& f) {
    Polynomial r;
    r.declare_nvars(f.nvars());
    if (c == 0) return r;
    for (const auto& [e, fc] : f.terms()) r.add_term(e, c * fc);
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Coeff mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) mono << '*';
            mono << 'x' << (i + 1);
            if (e[i] > 1) mono << '^' << e[i];
            any = true;
        }
        if (!any) {
            out << mag;
        } else if (mag == 1) {
            out << mono.str();
        } else {
            out << mag << '*' << mono.str();
        }
    }
    return out.str();
}

Polynomial swap_vars(int i, const Polynomial& f) {
    if (i < 1) throw ParseError("operator index must be >= 1");
    Polynomial r;
    r.declare_nvars(std::max(f.nvars(), i + 1));
    for (const auto& [e, c] : f.terms()) {
        Exponents ex = e;
        if (static_cast<int>(ex.size()) < i + 1) ex.resize(static_cast<std::size_t>(i) + 1, 0);
        std::swap(ex[static_cast<std::size_t>(i - 1)], ex[static_cast<std::size_t>(i)]);
        r.add_term(std::move(ex), c);
    }
    return r;
}

Polynomial partial(int i, const Polynomial& f) {
    if (i < 1) throw ParseError("operator index must be >= 1");
    Polynomial r;
    r.declare_nvars(std::max(f.nvars(), i + 1));
    for (const auto& [e, c] : f.terms()) {
        Exponents ex = e;
        if (static_cast<int>(ex.size()) < i + 1) ex.resize(static_cast<std::size_t>(i) + 1, 0);
        const int a = ex[static_cast<std::size_t>(i - 1)];
        const int b = ex[static_cast<std::size_t>(i)];
        if (a == b) continue;
        // x_i^a x_{i+1}^b with a > b maps to sum_{t=0}^{a-b-1}
        // x_i^{a-1-t} x_{i+1}^{b+t}; the a < b case is minus the mirror.
        if (a > b) {
            for (int t = 0; t < a - b; ++t) {
                Exponents g = ex;
                g[static_cast<std::size_t>(i - 1)] = a - 1 - t;
                g[static_cast<std::size_t>(i)] = b + t;
                r.add_term(std::move(g), c);
            }
        } else {
            for (int t = 0; t < b - a; ++t) {
                Exponents g = ex;
                g[static_cast<std::size_t>(i - 1)] = b - 1 - t;
                g[static_cast<std::size_t>(i)] = a + t;
                r.add_term(std::move(g), -c);
            }
        }
    }
    return r;
}

Polynomial pi(int i, const Polynomial& f) {
    Exponents xi(static_cast<std::size_t>(i), 0);
    xi[static_cast<std::size_t>(i - 1)] = 1;
    return partial(i, Polynomial::monomial(xi) * f);
}

Polynomial theta(int i, const Polynomial& f) {
    Exponents xi1(static_cast<std::size_t>(i) + 1, 0);
    xi1[static_cast<std::size_t>(i)] = 1;
    return Polynomial::monomial(xi1) * partial(i, f);
}

Polynomial apply_operator(OperatorKind kind, int i, const Polynomial& f) {
    switch (kind) {
        case OperatorKind::partial: return partial(i, f);
        case OperatorKind::pi: return pi(i, f);
        case OperatorKind::theta: return theta(i, f);
        case OperatorKind::swap: return swap_vars(i, f);
    }
    throw ParseError("unknown operator kind");
}

Polynomial apply_word_letters(OperatorKind kind, const std::vector<int>& word,
                              const Polynomial& f) {
    Polynomial r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = apply_operator(kind, *it, r);
    return r;
}

Polynomial apply_word(OperatorKind kind, const Permutation& p, const Polynomial& f) {
    return apply_word_letters(kind, some_reduced_word(p), f);
}

Polynomial parse_polynomial(const std::string& text) {
    // signed sum of "c*x1^a1*x2^a2" pieces; whitespace is free
    Polynomial result;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        Coeff sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' in polynomial: " + text);
        }
        first = false;
        Coeff coeff = 1;
        bool saw_number = false, saw_var = false;
        Exponents exps;
        while (pos < text.size()) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) && !saw_var) {
                Coeff v = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    v = v * 10 + (text[pos++] - '0');
                coeff *= v;
                saw_number = true;
            } else if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw ParseError("variable index expected: " + text);
                int idx = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    idx = idx * 10 + (text[pos++] - '0');
                int exp = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                        throw ParseError("exponent expected: " + text);
                    exp = 0;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                        exp = exp * 10 + (text[pos++] - '0');
                }
                if (idx < 1) throw ParseError("variable index must be >= 1: " + text);
                if (static_cast<int>(exps.size()) < idx) exps.resize(static_cast<std::size_t>(idx), 0);
                exps[static_cast<std::size_t>(idx - 1)] += exp;
                saw_var = true;
            } else {
                break;
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!saw_number && !saw_var)
            throw ParseError("expected term in polynomial: " + text);
        result.add_term(std::move(exps), sign * coeff);
        skip_ws();
    }
    return result;
}

} // namespace demazure
