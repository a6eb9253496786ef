#include "demazure/basis.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "demazure/errors.hpp"
#include "demazure/ssaf.hpp"

namespace demazure {

bool CompositionGreater::operator()(const WeakComposition& a,
                                    const WeakComposition& b) const {
    return GradedLexGreater{}(a.parts, b.parts);
}

namespace {

template <typename Map>
Coeff map_min_coeff(const Map& coeffs) {
    Coeff m = 0;
    bool first = true;
    for (const auto& [idx, c] : coeffs) {
        if (first || c < m) m = c;
        first = false;
    }
    return m;
}

template <typename Map>
std::string expansion_string(const Map& coeffs, char symbol) {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : coeffs) {
        const Coeff mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1) out << mag << '*';
        out << symbol << idx.to_string();
    }
    return out.str();
}

} // namespace

Coeff AtomExpansion::min_coeff() const { return map_min_coeff(coeffs); }
Coeff KeyExpansion::min_coeff() const { return map_min_coeff(coeffs); }

std::string AtomExpansion::to_string() const { return expansion_string(coeffs, 'A'); }
std::string KeyExpansion::to_string() const { return expansion_string(coeffs, 'K'); }

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum()) return false;
    const int n = std::max(lambda.size(), mu.size());
    int sl = 0, sm = 0;
    for (int i = 0; i < n; ++i) {
        sl += i < lambda.size() ? lambda[i] : 0;
        sm += i < mu.size() ? mu[i] : 0;
        if (sl < sm) return false;
    }
    return true;
}

namespace {

std::mutex cache_mutex;
std::map<WeakComposition, Polynomial>& atom_cache() {
    static std::map<WeakComposition, Polynomial> cache;
    return cache;
}
std::map<WeakComposition, Polynomial>& key_cache() {
    static std::map<WeakComposition, Polynomial> cache;
    return cache;
}

} // namespace

Polynomial atom_polynomial(const WeakComposition& beta) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = atom_cache().find(beta);
        if (it != atom_cache().end()) return it->second;
    }
    Polynomial p = atom_by_operators(beta);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return atom_cache().emplace(beta, std::move(p)).first->second;
}

Polynomial key_polynomial(const WeakComposition& gamma) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = key_cache().find(gamma);
        if (it != key_cache().end()) return it->second;
    }
    Polynomial p = key_by_operators(gamma);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return key_cache().emplace(gamma, std::move(p)).first->second;
}

namespace {

Partition sorted_shape(const Exponents& e, int nvars) {
    return sort_desc(WeakComposition(e).padded(nvars));
}

// One peeling choice: a maximal-degree monomial whose sorted shape is
// dominance-maximal among the remainder, ties broken by shortest omega
// then by lexicographically largest exponent vector.
WeakComposition pick_peel_index(const Polynomial& remainder, int nvars) {
    const int d = remainder.degree();
    std::vector<std::pair<WeakComposition, Partition>> candidates;
    for (const auto& [e, c] : remainder.terms()) {
        const WeakComposition beta = WeakComposition(e).padded(nvars);
        if (beta.sum() != d) continue;
        candidates.emplace_back(beta, sorted_shape(e, nvars));
    }
    std::vector<std::size_t> maximal;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
            if (i == j) continue;
            if (!(candidates[j].second == candidates[i].second) &&
                dominates(candidates[j].second, candidates[i].second))
                dominated = true;
        }
        if (!dominated) maximal.push_back(i);
    }
    Partition best_shape;
    for (std::size_t i : maximal)
        if (best_shape.parts.empty() || best_shape.parts < candidates[i].second.parts)
            best_shape = candidates[i].second;
    const WeakComposition* best = nullptr;
    int best_len = 0;
    for (std::size_t i : maximal) {
        if (!(candidates[i].second == best_shape)) continue;
        const int len = length(omega(candidates[i].first));
        if (best == nullptr || len < best_len ||
            (len == best_len && best->parts < candidates[i].first.parts)) {
            best = &candidates[i].first;
            best_len = len;
        }
    }
    return *best;
}

} // namespace

AtomExpansion expand_atoms(const Polynomial& f, int nvars) {
    nvars = std::max(nvars, f.nvars());
    AtomExpansion result;
    result.nvars = nvars;
    Polynomial remainder = f;
    // Each peel removes one atom from the implicit decomposition, so the
    // loop count is bounded by the number of distinct atom indices.
    std::size_t guard = 16;
    for (const auto& [e, c] : f.terms()) guard += compositions_of(WeakComposition(e).sum(), nvars).size();
    while (!remainder.is_zero()) {
        if (guard-- == 0) return expand_atoms_by_solve(f, nvars);
        const WeakComposition beta = pick_peel_index(remainder, nvars);
        const Coeff c = remainder.coeff(beta.parts);
        remainder -= scale(c, atom_polynomial(beta));
        result.coeffs[beta] += c;
        if (result.coeffs[beta] == 0) result.coeffs.erase(beta);
    }
    return result;
}

AtomExpansion expand_atoms_by_solve(const Polynomial& f, int nvars) {
    nvars = std::max(nvars, f.nvars());
    AtomExpansion result;
    result.nvars = nvars;
    std::vector<int> degrees;
    for (const auto& [e, c] : f.terms()) {
        const int d = WeakComposition(e).sum();
        if (std::find(degrees.begin(), degrees.end(), d) == degrees.end())
            degrees.push_back(d);
    }
    for (int d : degrees) {
        Polynomial stratum;
        for (const auto& [e, c] : f.terms())
            if (WeakComposition(e).sum() == d) stratum.add_term(e, c);
        // Back substitution: descending lexicographic order of the sorted
        // shape is a linear extension of dominance, which makes the atom
        // matrix of the stratum unitriangular.
        std::vector<WeakComposition> comps = compositions_of(d, nvars);
        std::stable_sort(comps.begin(), comps.end(),
                         [&](const WeakComposition& a, const WeakComposition& b) {
                             return sort_desc(a).parts > sort_desc(b).parts;
                         });
        for (const WeakComposition& beta : comps) {
            const Coeff c = stratum.coeff(beta.parts);
            if (c == 0) continue;
            stratum -= scale(c, atom_polynomial(beta));
            result.coeffs[beta] += c;
        }
        if (!stratum.is_zero())
            throw std::logic_error("atom expansion left a nonzero remainder");
    }
    return result;
}

std::vector<WeakComposition> key_atom_support(const WeakComposition& gamma) {
    const Permutation w_gamma = omega(gamma);
    std::vector<WeakComposition> support;
    for (const WeakComposition& beta : rearrangement_class(gamma))
        if (bruhat_leq(omega(beta), w_gamma)) support.push_back(beta);
    return support;
}

KeyExpansion atoms_to_keys(const AtomExpansion& e) {
    KeyExpansion result;
    result.nvars = e.nvars;
    // Group atom indices by rearrangement class and invert the 0/1
    // support matrix by decreasing omega length (strict Bruhat order
    // raises length, so every needed value is already final).
    std::map<Partition, std::map<WeakComposition, Coeff>> classes;
    for (const auto& [beta, c] : e.coeffs)
        classes[sort_desc(beta)][beta] = c;
    for (auto& [shape, atom_coeffs] : classes) {
        std::vector<WeakComposition> members =
            rearrangement_class(shape.as_composition().padded(e.nvars));
        std::vector<Permutation> omegas;
        omegas.reserve(members.size());
        for (const WeakComposition& m : members) omegas.push_back(omega(m));
        std::vector<std::size_t> order(members.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const int la = length(omegas[a]), lb = length(omegas[b]);
            return la != lb ? la > lb : members[a] < members[b];
        });
        std::vector<Coeff> d(members.size(), 0);
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            const std::size_t i = order[pos];
            auto it = atom_coeffs.find(members[i]);
            Coeff value = it == atom_coeffs.end() ? 0 : it->second;
            for (std::size_t prev = 0; prev < pos; ++prev) {
                const std::size_t j = order[prev];
                if (d[j] != 0 && bruhat_leq(omegas[i], omegas[j])) value -= d[j];
            }
            d[i] = value;
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            if (d[i] != 0) result.coeffs[members[i]] += d[i];
    }
    return result;
}

KeyExpansion expand_keys(const Polynomial& f, int nvars) {
    return atoms_to_keys(expand_atoms(f, nvars));
}

bool is_atom_positive(const Polynomial& f, int nvars) {
    return expand_atoms(f, nvars).positive();
}

bool is_key_positive(const Polynomial& f, int nvars) {
    return expand_keys(f, nvars).positive();
}

Polynomial atom_sum(const AtomExpansion& e) {
    Polynomial sum;
    for (const auto& [beta, c] : e.coeffs) sum += scale(c, atom_polynomial(beta));
    return sum;
}

Polynomial key_sum(const KeyExpansion& e) {
    Polynomial sum;
    for (const auto& [gamma, c] : e.coeffs) sum += scale(c, key_polynomial(gamma));
    return sum;
}

} // namespace demazure
