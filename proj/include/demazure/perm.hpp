#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace demazure {

// A permutation of [n] in one-line notation. Values are 1-based.
// Permutations of different sizes are compared and combined by
// embedding into the permutations of all positive integers (padding
// with fixed points), so 312 == 3124.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    // s_i = (i, i+1) inside S_n; requires 1 <= i < n.
    static Permutation transposition(int i, int n);
    // The longest element n, n-1, ..., 1.
    static Permutation reversal(int n);

    int size() const { return static_cast<int>(images_.size()); }
    // p(j), 1-based; j beyond size() is a fixed point.
    int operator()(int j) const;

    const std::vector<int>& images() const { return images_; }
    Permutation extended(int n) const;
    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation& o) const;
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    // Lexicographic on the trimmed one-line form; a stable container key.
    bool operator<(const Permutation& o) const;

    std::string to_string() const;
    static Permutation parse(const std::string& text);

private:
    std::vector<int> images_;
};

// (p*q)(j) = p(q(j)).
Permutation compose(const Permutation& p, const Permutation& q);

int inversions(const Permutation& p);
int length(const Permutation& p);

using ReducedWord = std::vector<int>;

// Evaluates s_{w_1} s_{w_2} ... s_{w_k} in S_n (function composition,
// rightmost factor applied first).
Permutation eval_word(const ReducedWord& word, int n);

// A reduced word built by the bubble-sort construction: repeatedly move
// the smallest misplaced value to its slot by adjacent swaps.
ReducedWord some_reduced_word(const Permutation& p);

// Every reduced word of p. Throws BudgetExceeded if more than max_words
// would be produced.
std::set<ReducedWord> all_reduced_words(const Permutation& p,
                                        std::size_t max_words = 2'000'000);

// Strong Bruhat order via the Ehresmann prefix-comparison criterion.
// The subword definition is kept as a test oracle.
bool bruhat_leq(const Permutation& u, const Permutation& v);

std::vector<Permutation> all_permutations(int n);

// {u : u <= v} in Bruhat order.
std::vector<Permutation> lower_interval(const Permutation& v);

} // namespace demazure
