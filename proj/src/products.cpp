#include "demazure/products.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "demazure/errors.hpp"
#include "demazure/ssaf.hpp"

namespace demazure {

namespace {

Polynomial mono2(int a, int b) {
    return Polynomial::monomial(Exponents{a, b});
}

Polynomial mono3(int a, int b, int c) {
    return Polynomial::monomial(Exponents{a, b, c});
}

std::vector<int> word_letters(const std::string& word) {
    std::vector<int> letters;
    for (char ch : word) letters.push_back(ch - '0');
    return letters;
}

Polynomial theta_word(const std::string& word, const Polynomial& f) {
    return apply_word_letters(OperatorKind::theta, word_letters(word), f);
}

// The closed-form sums feed theta words with dominating monomials
// only; parameter corners where the index bounds stray outside
// contribute nothing.
bool dominating3(int a, int b, int c) { return a >= b && b >= c && c >= 0; }

Polynomial pi_word(const std::string& word, const Polynomial& f) {
    return apply_word_letters(OperatorKind::pi, word_letters(word), f);
}

// Canonical reduced words of S_3, the component labels of theta
// decompositions.
std::string s3_word(const Permutation& p) {
    const Permutation q = p.extended(3);
    const int a = q(1), b = q(2), c = q(3);
    if (a == 1 && b == 2 && c == 3) return "";
    if (a == 2 && b == 1) return "1";
    if (a == 1 && b == 3) return "2";
    if (a == 2 && b == 3) return "12"; // 231 = s_1 s_2
    if (a == 3 && b == 1) return "21"; // 312 = s_2 s_1
    return "121";                      // 321
}

} // namespace

const std::vector<std::string>& ThetaDecomposition::words() {
    static const std::vector<std::string> all = {"", "1", "2", "12", "21", "121"};
    return all;
}

const Polynomial& ThetaDecomposition::component(const std::string& word) const {
    static const Polynomial zero;
    auto it = components.find(word);
    return it == components.end() ? zero : it->second;
}

Polynomial ThetaDecomposition::reconstruct() const {
    Polynomial sum;
    for (const auto& [word, comp] : components) sum += theta_word(word, comp);
    return sum;
}

ThetaDecomposition theta_decompose(const Polynomial& f) {
    if (f.nvars() > 3)
        throw std::invalid_argument("theta decomposition is defined for 3 variables");
    ThetaDecomposition d;
    for (const auto& [beta, c] : expand_atoms(f, 3).coeffs) {
        const std::string word = s3_word(omega(beta).inverse());
        d.components[word] += Polynomial::monomial(sort_desc(beta).as_composition(), c);
    }
    return d;
}

AtomExpansion product_expand_atoms(const Polynomial& f, const Polynomial& g, int nvars) {
    return expand_atoms(f * g, nvars);
}

KeyExpansion product_expand_keys(const Polynomial& f, const Polynomial& g, int nvars) {
    return expand_keys(f * g, nvars);
}

Polynomial schur(const Partition& lambda, int nvars) {
    return key_polynomial(reverse(lambda.as_composition().padded(nvars)));
}

KeyExpansion key_times_schur(const WeakComposition& gamma, const Partition& lambda,
                             int nvars) {
    return product_expand_keys(key_polynomial(gamma.padded(nvars)), schur(lambda, nvars),
                               nvars);
}

Polynomial closed_form_71(const ClosedFormParams& p) {
    const auto [m, n, k, l] = p;
    Polynomial result;
    for (int s = 0; s <= std::min(m - n, k); ++s)
        for (int t = std::max(0, s - (k - l)); t <= std::min(l, s + n); ++t)
            result += mono3(m + k - s, n + l + s - t, t);
    if (m - n > k - l)
        for (int t = 0; t <= std::min(l, (m - n) - (k - l)); ++t)
            result += theta_word("1", mono3(m + l - t, k + n, t));
    if (l > n)
        for (int s = 0; s <= std::min(l - n, m - n); ++s)
            result += theta_word("2", mono3(m + k - s, l, n + s));
    return result;
}

Polynomial closed_form_72(const ClosedFormParams& p) {
    const auto [m, n, k, l] = p;
    const ThetaDecomposition d = theta_decompose(mono2(m, n) * pi_word("121", mono2(k, l)));
    Polynomial result = d.component("");
    for (int r = 0; r <= std::min(m, k); ++r)
        for (int s = std::max(0, r - (n + l)); s <= std::min({r, m - n, k - l}); ++s)
            if (dominating3(m + k - r, n + l + s, r - s))
                result += theta_word("1", mono3(m + k - r, n + l + s, r - s));
    result += theta_word("2", d.component("2"));
    if (std::min(m, k) >= n + l)
        for (int r = n + l + 1; r <= std::min(m, k); ++r)
            if (dominating3(m + k - r, r, n + l))
                result += theta_word("12", mono3(m + k - r, r, n + l));
    result += theta_word("21", d.component("21"));
    if (k > m && m > n + l) result += theta_word("121", mono3(k, m, n + l));
    return result;
}

Polynomial closed_form_73(const ClosedFormParams& p) {
    const auto [m, n, k, l] = p;
    const ThetaDecomposition d = theta_decompose(mono2(m, n) * pi_word("121", mono2(k, l)));
    Polynomial result = d.component("");
    result += theta_word("1", d.component("1"));
    for (int r = 0; r <= std::min(m, k); ++r)
        for (int s = std::max({l, n, r, (n + l) - r}); s <= std::min(n + l, m + k - r); ++s)
            result += theta_word("2", mono3(m + k + n + l - s - r, s, r));
    result += theta_word("12", d.component("12"));
    if (n + l >= std::max(m, k))
        for (int r = std::max(0, m + k - n - l); r <= std::min(m, k); ++r)
            result += theta_word("21", mono3(n + l, m + k - r, r));
    if (n + l > k && k > m) result += theta_word("121", mono3(n + l, k, m));
    return result;
}

// Assembles pi_12(x1^m x2^n) * pi_21(x1^k x2^l). The theta_12
// component comes from the decomposition of (x1^k x2^l) times the full
// key of (m, n); the 1, theta_1, theta_2, theta_21 components from the
// decomposition with the roles reversed. Gated terms vanish on their
// own outside their parameter range.
Polynomial closed_form_74(const ClosedFormParams& p) {
    const auto [m, n, k, l] = p;
    const ThetaDecomposition d = theta_decompose(mono2(m, n) * pi_word("121", mono2(k, l)));
    const ThetaDecomposition swapped =
        theta_decompose(mono2(k, l) * pi_word("121", mono2(m, n)));
    Polynomial result = d.component("");
    result += theta_word("1", d.component(""));
    result += theta_word("2", d.component(""));
    result += theta_word("21", d.component("1"));
    result += theta_word("12", swapped.component("2"));
    for (int t = 0; t <= std::min(k - l, n); ++t)
        if (dominating3(k + n - t, m, l + t))
            result += theta_word("121", mono3(k + n - t, m, l + t));
    return result;
}

Polynomial closed_form_oracle(int form, const ClosedFormParams& p) {
    const auto [m, n, k, l] = p;
    switch (form) {
        case 71: return pi_word("1", mono2(m, n)) * pi_word("2", mono2(k, l));
        case 72: return pi_word("1", mono2(m, n)) * pi_word("21", mono2(k, l));
        case 73: return pi_word("2", mono2(m, n)) * pi_word("12", mono2(k, l));
        case 74: return pi_word("12", mono2(m, n)) * pi_word("21", mono2(k, l));
    }
    throw std::invalid_argument("unknown closed form " + std::to_string(form));
}

std::pair<int, WeakComposition> reduce_common_rows(const WeakComposition& alpha3) {
    if (alpha3.size() != 3)
        throw std::invalid_argument("row reduction expects a length-3 composition");
    const int r = std::min({alpha3[0], alpha3[1], alpha3[2]});
    return {r, WeakComposition({alpha3[0] - r, alpha3[1] - r, alpha3[2] - r})};
}

int SweepReport::counterexamples() const {
    int count = 0;
    for (const SweepRecord& rec : records)
        if (!rec.ok) ++count;
    return count;
}

void SweepReport::write_csv(std::ostream& out) const {
    if (records.empty()) {
        out << "basis,min_coeff,verdict\n";
        return;
    }
    for (const auto& [name, value] : records.front().params) out << name << ',';
    out << "basis,min_coeff,verdict\n";
    for (const SweepRecord& rec : records) {
        for (const auto& [name, value] : rec.params) out << value << ',';
        out << rec.basis << ',' << rec.min_coeff << ','
            << (rec.ok ? "ok" : "counterexample") << '\n';
    }
}

void SweepReport::write_json(std::ostream& out) const {
    nlohmann::json summary;
    summary["sweep"] = kind;
    summary["total_cases"] = records.size();
    nlohmann::json counterexamples = nlohmann::json::array();
    for (const SweepRecord& rec : records) {
        if (rec.ok) continue;
        nlohmann::json item;
        for (const auto& [name, value] : rec.params) item[name] = value;
        item["basis"] = rec.basis;
        item["min_coeff"] = rec.min_coeff;
        counterexamples.push_back(std::move(item));
    }
    summary["counterexamples"] = std::move(counterexamples);
    out << summary.dump(2) << '\n';
}

namespace {

// Runs one pure task per index across `jobs` threads; results land at
// their index, so the report order is deterministic.
template <typename Task>
std::vector<SweepRecord> run_cases(std::size_t count, int jobs, Task task) {
    std::vector<SweepRecord> records(count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) records[i] = task(i);
        return records;
    }
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                records[i] = task(i);
        });
    }
    for (std::thread& w : workers) w.join();
    return records;
}

std::vector<WeakComposition> grid_compositions(int max_weight, int parts) {
    std::vector<WeakComposition> out;
    for (int w = 0; w <= max_weight; ++w)
        for (const WeakComposition& alpha : compositions_of(w, parts))
            out.push_back(alpha);
    return out;
}

std::vector<Partition> grid_partitions(int max_weight, int max_parts) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w)
        for (const Partition& lambda : partitions_of(w, max_parts))
            out.push_back(lambda);
    return out;
}

} // namespace

SweepReport sweep_thm413(int max_weight, int parts, int jobs) {
    const std::vector<Partition> lambdas = grid_partitions(max_weight, parts);
    const std::vector<WeakComposition> alphas = grid_compositions(max_weight, parts);
    SweepReport report{"thm413", {}};
    report.records = run_cases(lambdas.size() * alphas.size(), jobs, [&](std::size_t i) {
        const Partition& lambda = lambdas[i / alphas.size()];
        const WeakComposition& alpha = alphas[i % alphas.size()];
        const Polynomial product =
            Polynomial::monomial(lambda.as_composition().padded(parts)) *
            atom_polynomial(alpha);
        const AtomExpansion e = expand_atoms(product, parts);
        SweepRecord rec;
        rec.params = {{"lambda", lambda.to_string()}, {"alpha", alpha.to_string()}};
        rec.basis = "atom";
        rec.min_coeff = e.min_coeff();
        rec.ok = e.positive();
        return rec;
    });
    return report;
}

SweepReport sweep_thm415(int max_weight, int parts, int jobs) {
    const std::vector<Partition> lambdas = grid_partitions(max_weight, parts);
    const std::vector<WeakComposition> gammas = grid_compositions(max_weight, parts);
    SweepReport report{"thm415", {}};
    report.records = run_cases(lambdas.size() * gammas.size(), jobs, [&](std::size_t i) {
        const Partition& lambda = lambdas[i / gammas.size()];
        const WeakComposition& gamma = gammas[i % gammas.size()];
        const Polynomial product =
            Polynomial::monomial(lambda.as_composition().padded(parts)) *
            key_polynomial(gamma);
        const KeyExpansion e = expand_keys(product, parts);
        SweepRecord rec;
        rec.params = {{"lambda", lambda.to_string()}, {"gamma", gamma.to_string()}};
        rec.basis = "key";
        rec.min_coeff = e.min_coeff();
        rec.ok = e.positive();
        return rec;
    });
    return report;
}

SweepReport sweep_thm418(int max_gamma, int max_lambda, int jobs) {
    const std::vector<WeakComposition> gammas = grid_compositions(max_gamma, 3);
    const std::vector<Partition> lambdas = grid_partitions(max_lambda, 3);
    SweepReport report{"thm418", {}};
    report.records = run_cases(gammas.size() * lambdas.size(), jobs, [&](std::size_t i) {
        const WeakComposition& gamma = gammas[i / lambdas.size()];
        const Partition& lambda = lambdas[i % lambdas.size()];
        const KeyExpansion e = key_times_schur(gamma, lambda, 3);
        SweepRecord rec;
        rec.params = {{"gamma", gamma.to_string()}, {"lambda", lambda.to_string()}};
        rec.basis = "key";
        rec.min_coeff = e.min_coeff();
        rec.ok = e.positive();
        return rec;
    });
    return report;
}

SweepReport sweep_conjecture(int max_part, int jobs) {
    std::vector<WeakComposition> shapes;
    for (int a = 0; a <= max_part; ++a)
        for (int b = 0; b <= max_part; ++b)
            for (int c = 0; c <= max_part; ++c)
                shapes.push_back(WeakComposition({a, b, c}));
    SweepReport report{"conjecture", {}};
    report.records = run_cases(shapes.size() * shapes.size(), jobs, [&](std::size_t i) {
        const WeakComposition& gamma = shapes[i / shapes.size()];
        const WeakComposition& delta = shapes[i % shapes.size()];
        const WeakComposition g = reduce_common_rows(gamma).second;
        const WeakComposition d = reduce_common_rows(delta).second;
        const AtomExpansion e =
            product_expand_atoms(key_polynomial(g), key_polynomial(d), 3);
        SweepRecord rec;
        rec.params = {{"gamma", gamma.to_string()}, {"delta", delta.to_string()}};
        rec.basis = "atom";
        rec.min_coeff = e.min_coeff();
        rec.ok = e.positive();
        return rec;
    });
    return report;
}

SweepReport sweep_closed_forms(int max, int jobs) {
    std::vector<std::pair<int, ClosedFormParams>> cases;
    for (int form : {71, 72, 73, 74})
        for (int m = 0; m <= max; ++m)
            for (int n = 0; n <= m; ++n)
                for (int k = 0; k <= max; ++k)
                    for (int l = 0; l <= k; ++l)
                        cases.push_back({form, ClosedFormParams{m, n, k, l}});
    SweepReport report{"closedforms", {}};
    report.records = run_cases(cases.size(), jobs, [&](std::size_t i) {
        const auto& [form, params] = cases[i];
        Polynomial assembled;
        switch (form) {
            case 71: assembled = closed_form_71(params); break;
            case 72: assembled = closed_form_72(params); break;
            case 73: assembled = closed_form_73(params); break;
            case 74: assembled = closed_form_74(params); break;
        }
        const Polynomial direct = closed_form_oracle(form, params);
        const Polynomial diff = assembled - direct;
        SweepRecord rec;
        rec.params = {{"form", std::to_string(form)},
                      {"m", std::to_string(params.m)},
                      {"n", std::to_string(params.n)},
                      {"k", std::to_string(params.k)},
                      {"l", std::to_string(params.l)}};
        rec.basis = "exact";
        rec.min_coeff = diff.min_coeff();
        rec.ok = diff.is_zero();
        return rec;
    });
    return report;
}

} // namespace demazure
