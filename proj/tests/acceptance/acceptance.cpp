// Acceptance suite: one pass/fail line per criterion, exit code equal to
// the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "demazure/basis.hpp"
#include "demazure/errors.hpp"
#include "demazure/insertion.hpp"
#include "demazure/polytope.hpp"
#include "demazure/products.hpp"
#include "demazure/ssaf.hpp"
#include "support/oracles.hpp"

using namespace demazure;

namespace {

Polynomial mono(std::initializer_list<int> e, Coeff c = 1) {
    return Polynomial::monomial(Exponents(e), c);
}

Polynomial opw(OperatorKind k, const std::string& w, const Polynomial& f) {
    std::vector<int> letters;
    for (char ch : w) letters.push_back(ch - '0');
    return apply_word_letters(k, letters, f);
}

bool check(std::ostream& log, bool ok, const std::string& what) {
    if (!ok) log << "    failed: " << what << "\n";
    return ok;
}

// 1. the nine golden operator evaluations
bool criterion_operator_goldens(std::ostream& log) {
    bool ok = true;
    ok &= check(log,
                partial(2, mono({5, 4, 1})) ==
                    mono({5, 3, 1}) + mono({5, 2, 2}) + mono({5, 1, 3}),
                "partial_2 x1^5x2^4x3");
    ok &= check(log,
                pi(2, mono({5, 4, 1})) == mono({5, 4, 1}) + mono({5, 3, 2}) +
                                              mono({5, 2, 3}) + mono({5, 1, 4}),
                "pi_2 x1^5x2^4x3");
    ok &= check(log,
                theta(2, mono({5, 4, 1})) ==
                    mono({5, 3, 2}) + mono({5, 2, 3}) + mono({5, 1, 4}),
                "theta_2 x1^5x2^4x3");
    ok &= check(log, partial(2, mono({3, 0, 2})) == -(mono({3, 1, 0}) + mono({3, 0, 1})),
                "partial_2 x1^3x3^2");
    ok &= check(log, pi(2, mono({3, 0, 2})) == mono({3, 1, 1}, -1), "pi_2 x1^3x3^2");
    ok &= check(log, theta(2, mono({3, 0, 2})) == -(mono({3, 1, 1}) + mono({3, 0, 2})),
                "theta_2 x1^3x3^2");
    ok &= check(log, partial(2, mono({1, 2, 2})).is_zero(), "partial_2 x1x2^2x3^2");
    ok &= check(log, pi(2, mono({1, 2, 2})) == mono({1, 2, 2}), "pi_2 x1x2^2x3^2");
    ok &= check(log, theta(2, mono({1, 2, 2})).is_zero(), "theta_2 x1x2^2x3^2");
    return ok;
}

// 2. the shape-(1,0,3) goldens
bool criterion_example6(std::ostream& log) {
    bool ok = true;
    const Polynomial atom = atom_by_operators(WeakComposition{1, 0, 3});
    ok &= check(log,
                atom == mono({2, 1, 1}) + mono({2, 0, 2}) + mono({1, 2, 1}) +
                            mono({1, 1, 2}) + mono({1, 0, 3}),
                "A(1,0,3) five terms");
    ok &= check(log, atom == atom_by_fillings(WeakComposition{1, 0, 3}),
                "A(1,0,3) filling route");
    const Polynomial key = key_by_operators(WeakComposition{3, 0, 1});
    ok &= check(log, key == mono({3, 1, 0}) + mono({3, 0, 1}), "K(3,0,1) two terms");
    ok &= check(log, key == key_by_fillings(WeakComposition{3, 0, 1}),
                "K(3,0,1) filling route");
    ok &= check(log,
                enumerate_ssaf(Permutation::identity(3), WeakComposition{1, 0, 3}).size() == 5,
                "|SSAF(123,(1,0,3))| == 5");
    ok &= check(log,
                enumerate_ssaf(Permutation::reversal(3), WeakComposition{1, 0, 3}).size() == 2,
                "|SSAF(321,(1,0,3))| == 2");
    ok &= check(log, omega(WeakComposition{1, 0, 3}) == Permutation::parse("231"),
                "omega(1,0,3) == 231");
    return ok;
}

// 3. operator identity suite on 200 random polynomials and all of S4
bool criterion_identities(std::ostream& log) {
    std::mt19937 rng(3000);
    bool ok = true;
    const auto s4 = all_permutations(4);
    std::map<std::string, std::vector<Permutation>> intervals;
    for (const Permutation& sigma : s4)
        intervals[sigma.to_string()] = lower_interval(sigma);
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const Polynomial f = oracles::random_polynomial(rng, 4, 6, 5);
        const Polynomial g = oracles::random_polynomial(rng, 4, 6, 5);
        for (int i = 1; i <= 3 && ok; ++i) {
            const Polynomial pf = pi(i, f), tf = theta(i, f), df = partial(i, f);
            const Polynomial sf = swap_vars(i, f);
            Exponents e(static_cast<std::size_t>(i) + 1, 0);
            e[static_cast<std::size_t>(i)] = 1;
            const Polynomial xnext = Polynomial::monomial(e);
            e[static_cast<std::size_t>(i)] = 0;
            e[static_cast<std::size_t>(i - 1)] = 1;
            const Polynomial xcur = Polynomial::monomial(e);
            ok &= check(log, pf == tf + f, "pi = theta + 1");
            ok &= check(log, pi(i, tf) == theta(i, pf), "pi theta = theta pi");
            ok &= check(log, swap_vars(i, df) == df, "s partial = partial");
            ok &= check(log, partial(i, sf) == -df, "partial s = -partial");
            ok &= check(log, swap_vars(i, pf) == pf, "s pi = pi");
            ok &= check(log, pi(i, sf) == -partial(i, xnext * f), "pi s = -partial x");
            ok &= check(log, swap_vars(i, tf) == xcur * df, "s theta = x partial");
            ok &= check(log, theta(i, sf) == -tf, "theta s = -theta");
            ok &= check(log, partial(i, df).is_zero(), "partial^2 = 0");
            ok &= check(log, partial(i, pf).is_zero(), "partial pi = 0");
            ok &= check(log, theta(i, df).is_zero(), "theta partial = 0");
            ok &= check(log, pi(i, df) == df, "pi partial = partial");
            ok &= check(log, partial(i, tf) == -df, "partial theta = -partial");
            ok &= check(log, pi(i, pf) == pf, "pi^2 = pi");
            ok &= check(log, theta(i, tf) == -tf, "theta^2 = -theta");
            ok &= check(log, theta(i, pf).is_zero(), "theta pi = 0");
            ok &= check(log, partial(i, f * g) == df * g + sf * partial(i, g),
                        "partial Leibniz");
            ok &= check(log, theta(i, f * g) == tf * g + sf * theta(i, g),
                        "theta Leibniz");
            ok &= check(log, pi(i, f * g) == pf * g + sf * theta(i, g), "pi Leibniz");
        }
        ok &= check(log, partial(1, partial(3, f)) == partial(3, partial(1, f)),
                    "partial commutation");
        ok &= check(log, pi(1, pi(3, f)) == pi(3, pi(1, f)), "pi commutation");
        ok &= check(log, theta(1, theta(3, f)) == theta(3, theta(1, f)),
                    "theta commutation");
        for (int i = 1; i <= 2 && ok; ++i) {
            ok &= check(log,
                        partial(i, partial(i + 1, partial(i, f))) ==
                            partial(i + 1, partial(i, partial(i + 1, f))),
                        "partial braid");
            ok &= check(log, pi(i, pi(i + 1, pi(i, f))) == pi(i + 1, pi(i, pi(i + 1, f))),
                        "pi braid");
            ok &= check(log,
                        theta(i, theta(i + 1, theta(i, f))) ==
                            theta(i + 1, theta(i, theta(i + 1, f))),
                        "theta braid");
        }
        const Permutation w0 = Permutation::reversal(4);
        const Polynomial pw = apply_word(OperatorKind::pi, w0, f);
        for (int i = 1; i <= 3 && ok; ++i) {
            ok &= check(log, pi(i, pw) == pw, "pi_i pi_w0 = pi_w0");
            ok &= check(log, theta(i, pw).is_zero(), "theta_i pi_w0 = 0");
        }
        if (trial % 10 == 0) {
            for (const Permutation& gamma : s4) {
                const Polynomial tg = apply_word(OperatorKind::theta, gamma, f);
                for (int i = 1; i <= 3 && ok; ++i) {
                    const Permutation sig =
                        compose(Permutation::transposition(i, 4), gamma);
                    if (length(sig) == length(gamma) - 1)
                        ok &= check(log, theta(i, tg) == -tg, "theta word descent");
                    else
                        ok &= check(log,
                                    theta(i, tg) ==
                                        apply_word(OperatorKind::theta, sig, f),
                                    "theta word ascent");
                }
            }
            for (const Permutation& sigma : s4) {
                Polynomial sum;
                for (const Permutation& gamma : intervals[sigma.to_string()])
                    sum += apply_word(OperatorKind::theta, gamma, f);
                ok &= check(log, apply_word(OperatorKind::pi, sigma, f) == sum,
                            "pi = sum of theta over Bruhat interval");
            }
        }
    }
    return ok;
}

// 4. fillings vs operators for every shape with 4 parts and weight <= 6
bool criterion_route_agreement(std::ostream& log) {
    bool ok = true;
    int cases = 0;
    for (int total = 0; total <= 6; ++total) {
        for (const WeakComposition& alpha : compositions_of(total, 4)) {
            ++cases;
            ok &= check(log, atom_by_fillings(alpha) == atom_by_operators(alpha),
                        "atom routes at " + alpha.to_string());
            ok &= check(log, key_by_fillings(alpha) == key_by_operators(alpha),
                        "key routes at " + alpha.to_string());
        }
    }
    ok &= check(log, cases == 210, "composition count is 210");
    return ok;
}

// 5. reversed-partition keys equal the SSYT Schur oracle
bool criterion_schur(std::ostream& log) {
    bool ok = true;
    for (int total = 0; total <= 5; ++total) {
        for (const Partition& lambda : partitions_of(total, 3)) {
            const WeakComposition gamma = reverse(lambda.as_composition().padded(3));
            ok &= check(log, key_polynomial(gamma) == oracles::schur_ssyt(lambda, 3),
                        "Schur check at " + lambda.to_string());
        }
    }
    return ok;
}

// 6. the column-word pipeline goldens
bool criterion_word_pipeline(std::ostream& log) {
    bool ok = true;
    const SegmentedWord w = SegmentedWord::parse("886531|97643|9764|5|6");
    const Ssaf fw = insert_word(Ssaf::empty(Permutation::identity(9)), w.letters);
    ok &= check(log, fw.shape() == WeakComposition{1, 0, 1, 0, 0, 4, 0, 6, 5},
                "shape of F(w)");
    ok &= check(log, column_to_row(w).to_string() == "13689|589|467|357|46|6",
                "column_to_row output");
    ok &= check(log, row_word(fw).to_string() == "13689|589|467|357|46|6",
                "row word of F(w)");
    const auto stages = column_to_row_stages(w);
    ok &= check(log, stages.size() == 6, "stage count");
    if (stages.size() == 6) {
        {
            const auto& st = stages[0];
            SegmentedWord disp;
            disp.letters = st.prefix;
            disp.lengths = {static_cast<int>(st.prefix.size())};
            std::size_t idx = 0;
            for (std::size_t s = 0; s < st.residual.lengths.size(); ++s) {
                Word seg(st.residual.letters.begin() + static_cast<std::ptrdiff_t>(idx),
                         st.residual.letters.begin() +
                             static_cast<std::ptrdiff_t>(
                                 idx + static_cast<std::size_t>(st.residual.lengths[s])));
                idx += static_cast<std::size_t>(st.residual.lengths[s]);
                if (s == 0) seg.insert(seg.begin(), st.pivot);
                disp.letters.insert(disp.letters.end(), seg.begin(), seg.end());
                disp.lengths.push_back(static_cast<int>(seg.size()));
            }
            ok &= check(log, disp.to_string() == "1368|987543|9654|766",
                        "first extraction stage");
        }
        const std::vector<std::string> expected = {"467|753|64|6", "357|64|6", "46|6",
                                                   "6"};
        for (std::size_t t = 0; t < expected.size(); ++t) {
            const auto& st = stages[t + 2];
            SegmentedWord disp;
            const Word rs = st.row_segment();
            disp.letters = rs;
            disp.lengths = {static_cast<int>(rs.size())};
            disp.letters.insert(disp.letters.end(), st.residual.letters.begin(),
                                st.residual.letters.end());
            for (int len : st.residual.lengths) disp.lengths.push_back(len);
            ok &= check(log, disp.to_string() == expected[t],
                        "residual stage " + expected[t]);
        }
    }
    return ok;
}

// 7. twisted Knuth invariance over 500 random column words
bool criterion_knuth_invariance(std::ostream& log) {
    std::mt19937 rng(7000);
    bool ok = true;
    const Ssaf empty9 = Ssaf::empty(Permutation::identity(9));
    for (int trial = 0; trial < 500 && ok; ++trial) {
        const SegmentedWord w = oracles::random_column_word(rng, 9, 16);
        const Ssaf image = insert_word(empty9, w.letters);
        ok &= check(log, column_to_row(w) == row_word(image),
                    "conversion agreement at " + w.to_string());
        Word current = w.letters;
        for (int move = 0; move < 8 && ok; ++move) {
            const auto moves = oracles::applicable_knuth_moves(current);
            if (moves.empty()) break;
            const auto& [pos, variant] =
                moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
            current = twisted_knuth_step(current, pos, variant);
            ok &= check(log, insert_word(empty9, current) == image,
                        "invariance after a move on " + w.to_string());
        }
    }
    return ok;
}

// 8. the first key-negative, atom-positive product
bool criterion_key_counterexample(std::ostream& log) {
    const Polynomial product =
        key_polynomial(WeakComposition{0, 2}) * key_polynomial(WeakComposition{1, 0, 2});
    const KeyExpansion keys = expand_keys(product, 3);
    bool ok = true;
    const std::map<WeakComposition, Coeff> expected = {
        {WeakComposition{1, 2, 2}, 1}, {WeakComposition{1, 3, 1}, 1},
        {WeakComposition{1, 4, 0}, 1}, {WeakComposition{2, 3, 0}, 1},
        {WeakComposition{3, 0, 2}, 1}, {WeakComposition{3, 2, 0}, -1},
        {WeakComposition{4, 0, 1}, 1}, {WeakComposition{4, 1, 0}, -1}};
    ok &= check(log, keys.coeffs.size() == expected.size(), "eight key terms");
    for (const auto& [gamma, c] : expected) {
        const auto it = keys.coeffs.find(gamma);
        ok &= check(log, it != keys.coeffs.end() && it->second == c,
                    "coefficient of K" + gamma.to_string());
    }
    ok &= check(log, is_atom_positive(product, 3), "product is atom-positive");
    return ok;
}

// 9. the three positivity sweeps
bool criterion_positivity_sweeps(std::ostream& log) {
    bool ok = true;
    ok &= check(log, sweep_thm413(4, 3, 2).counterexamples() == 0,
                "monomial times atom sweep");
    ok &= check(log, sweep_thm415(4, 3, 2).counterexamples() == 0,
                "monomial times key sweep");
    ok &= check(log, sweep_thm418(4, 3, 2).counterexamples() == 0,
                "key times Schur sweep");
    return ok;
}

// 10. the length-3 key-product conjecture sweep
bool criterion_conjecture(std::ostream& log) {
    const SweepReport report = sweep_conjecture(3, 2);
    bool ok = check(log, report.records.size() == 64 * 64, "case count 4096");
    ok &= check(log, report.counterexamples() == 0, "no negative atom coefficients");
    return ok;
}

// 11. closed forms against the operator product oracle
bool criterion_closed_forms(std::ostream& log) {
    const SweepReport report = sweep_closed_forms(4, 2);
    bool ok = check(log, report.records.size() == 4 * 225, "225 tuples per form");
    ok &= check(log, report.counterexamples() == 0, "all forms equal the oracle");
    return ok;
}

// 12. the lattice-cloud laws
bool criterion_polytope(std::ostream& log) {
    bool ok = true;
    for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= m; ++n) {
            const Polynomial base = mono({m, n});
            const LatticeCloud trapezoid = cloud_of(opw(OperatorKind::pi, "21", base));
            bool touches = false;
            for (const auto& [p, mult] : trapezoid.points)
                for (int tag : region_of(p))
                    if (tag == 5 || tag == 6) touches = true;
            ok &= check(log, touches == (m >= 2 * n),
                        "trapezoid law at m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
            const LatticeCloud hexagon = cloud_of(opw(OperatorKind::pi, "121", base));
            ok &= check(log, hexagon.max_multiplicity() == std::min(n, m - n) + 1,
                        "key multiplicity law");
            if (m > n) {
                const LatticeCloud atom_cloud =
                    cloud_of(opw(OperatorKind::theta, "121", base));
                ok &= check(log, atom_cloud.max_multiplicity() == std::min(n, m - n),
                            "atom multiplicity law");
            }
            std::map<LatticePoint, Coeff> merged;
            for (const char* word : {"", "1", "2", "12", "21", "121"})
                for (const auto& [p, mult] :
                     cloud_of(opw(OperatorKind::theta, word, base)).points)
                    merged[p] += mult;
            ok &= check(log, merged == hexagon.points, "theta clouds tile the hexagon");
        }
    }
    return ok;
}

// 13. column recording tableaux determine row recording tableaux
bool criterion_determination(std::ostream& log) {
    bool ok = true;
    std::vector<Ssaf> bases;
    for (int total = 0; total <= 4; ++total)
        for (const Partition& lambda : partitions_of(total, 4))
            bases.push_back(enumerate_ssaf(Permutation::identity(4),
                                           lambda.as_composition().padded(4))
                                .front());
    const auto words = oracles::all_column_words(4, 8);
    const Ssaf empty4 = Ssaf::empty(Permutation::identity(4));
    long long collisions = 0;
    for (const Ssaf& u : bases) {
        std::map<std::string, RecordingTableau> by_column_tableau;
        for (const SegmentedWord& w : words) {
            auto [uv, col_rec] = insert_with_recording(u, column_biword(w));
            const SegmentedWord rw = row_word(insert_word(empty4, w.letters));
            auto [uv2, row_rec] = insert_with_recording(u, row_biword(rw));
            std::ostringstream key;
            for (const auto& [cell, label] : col_rec.labels)
                key << cell.column << ',' << cell.row << ':' << label << ';';
            const auto [it, inserted] = by_column_tableau.try_emplace(key.str(), row_rec);
            if (!inserted) {
                ++collisions;
                if (!check(log, it->second == row_rec,
                           "determination failure for " + w.to_string()))
                    return false;
            }
        }
    }
    ok &= check(log, collisions > 0, "collision pairs were exercised");
    return ok;
}

} // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const std::vector<std::pair<std::string, std::function<bool(std::ostream&)>>>
        criteria = {
            {"golden operator evaluations", criterion_operator_goldens},
            {"shape-(1,0,3) atom, key and filling counts", criterion_example6},
            {"operator identity suite on random polynomials and S4",
             criterion_identities},
            {"filling and operator routes agree for 210 shapes",
             criterion_route_agreement},
            {"reversed-partition keys equal the tableau Schur oracle",
             criterion_schur},
            {"column-word pipeline goldens", criterion_word_pipeline},
            {"twisted Knuth invariance on 500 random column words",
             criterion_knuth_invariance},
            {"key product counterexample expands as printed",
             criterion_key_counterexample},
            {"positivity sweeps for monomial and Schur products",
             criterion_positivity_sweeps},
            {"length-3 key products expand atom-positively", criterion_conjecture},
            {"closed forms equal the operator product on the full grid",
             criterion_closed_forms},
            {"lattice cloud laws up to m = 8", criterion_polytope},
            {"column recording tableaux determine row recording tableaux",
             criterion_determination},
        };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::ostringstream log;
        bool ok = false;
        const auto start = Clock::now();
        try {
            ok = criteria[i].second(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        const double seconds =
            std::chrono::duration<double>(Clock::now() - start).count();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
                  << criteria[i].first << " (" << seconds << " s)\n"
                  << log.str();
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << criteria.size() - static_cast<std::size_t>(failures) << "/"
              << criteria.size() << ")\n";
    return failures;
}
