#include "demazure/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "demazure/errors.hpp"

namespace demazure {

namespace {

int trimmed_size(const std::vector<int>& images) {
    int n = static_cast<int>(images.size());
    while (n > 0 && images[n - 1] == n) --n;
    return n;
}

} // namespace

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw ParseError("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int i, int n) {
    if (i < 1 || i >= n) throw ParseError("transposition index out of range");
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)],
              p.images_[static_cast<std::size_t>(i)]);
    return p;
}

Permutation Permutation::reversal(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) im[static_cast<std::size_t>(j)] = n - j;
    return Permutation(std::move(im));
}

int Permutation::operator()(int j) const {
    if (j >= 1 && j <= size()) return images_[static_cast<std::size_t>(j - 1)];
    return j;
}

Permutation Permutation::extended(int n) const {
    std::vector<int> im(static_cast<std::size_t>(std::max(n, size())));
    for (int j = 1; j <= static_cast<int>(im.size()); ++j)
        im[static_cast<std::size_t>(j - 1)] = (*this)(j);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int j = 1; j <= size(); ++j)
        im[static_cast<std::size_t>((*this)(j) - 1)] = j;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const { return trimmed_size(images_) == 0; }

bool Permutation::operator==(const Permutation& o) const {
    const int n = std::max(size(), o.size());
    for (int j = 1; j <= n; ++j)
        if ((*this)(j) != o(j)) return false;
    return true;
}

bool Permutation::operator<(const Permutation& o) const {
    const int n = std::max(size(), o.size());
    for (int j = 1; j <= n; ++j) {
        if ((*this)(j) != o(j)) return (*this)(j) < o(j);
    }
    return false;
}

std::string Permutation::to_string() const {
    const int n = std::max(trimmed_size(images_), 1);
    std::ostringstream out;
    const bool compact = n <= 9;
    for (int j = 1; j <= n; ++j) {
        if (!compact && j > 1) out << ',';
        out << (*this)(j);
    }
    return out.str();
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> im;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw ParseError("bad permutation digit: " + text);
            im.push_back(c - '0');
        }
    } else {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ','))
            im.push_back(std::stoi(tok));
    }
    if (im.empty()) throw ParseError("empty permutation");
    return Permutation(std::move(im));
}

Permutation compose(const Permutation& p, const Permutation& q) {
    const int n = std::max(p.size(), q.size());
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        im[static_cast<std::size_t>(j - 1)] = p(q(j));
    return Permutation(std::move(im));
}

int inversions(const Permutation& p) {
    int count = 0;
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j)) ++count;
    return count;
}

int length(const Permutation& p) { return inversions(p); }

Permutation eval_word(const ReducedWord& word, int n) {
    int needed = n;
    for (int i : word) needed = std::max(needed, i + 1);
    Permutation result = Permutation::identity(needed);
    for (int i : word)
        result = compose(result, Permutation::transposition(i, needed));
    return result;
}

ReducedWord some_reduced_word(const Permutation& p) {
    std::vector<int> cur = p.extended(p.size()).images();
    const int n = static_cast<int>(cur.size());
    ReducedWord applied; // right multiplications, in application order
    for (int v = 1; v <= n; ++v) {
        int pos = 0;
        while (cur[static_cast<std::size_t>(pos)] != v) ++pos;
        // move v left to slot v-1; each adjacent swap is a right s_i
        for (; pos > v - 1; --pos) {
            std::swap(cur[static_cast<std::size_t>(pos - 1)],
                      cur[static_cast<std::size_t>(pos)]);
            applied.push_back(pos);
        }
    }
    // p * s_{a_1} ... s_{a_k} = id, so p = s_{a_k} ... s_{a_1}
    std::reverse(applied.begin(), applied.end());
    return applied;
}

namespace {

// Left descents: i with l(s_i p) = l(p) - 1, i.e. i+1 appears before i.
std::vector<int> left_descents(const Permutation& p) {
    std::vector<int> result;
    const int n = p.size();
    const Permutation inv = p.inverse();
    for (int i = 1; i < n; ++i)
        if (inv(i + 1) < inv(i)) result.push_back(i);
    return result;
}

void collect_reduced_words(const Permutation& p, ReducedWord& prefix,
                           std::set<ReducedWord>& out, std::size_t max_words) {
    if (p.is_identity()) {
        if (out.size() >= max_words)
            throw BudgetExceeded("reduced word enumeration budget exceeded");
        out.insert(prefix);
        return;
    }
    for (int i : left_descents(p)) {
        prefix.push_back(i);
        collect_reduced_words(compose(Permutation::transposition(i, p.size()), p),
                              prefix, out, max_words);
        prefix.pop_back();
    }
}

} // namespace

std::set<ReducedWord> all_reduced_words(const Permutation& p, std::size_t max_words) {
    std::set<ReducedWord> out;
    ReducedWord prefix;
    collect_reduced_words(p.extended(p.size()), prefix, out, max_words);
    return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    const int n = std::max(u.size(), v.size());
    if (length(u) > length(v)) return false;
    // Ehresmann: for every k, the sorted prefixes satisfy u[..k] <= v[..k]
    // entrywise.
    std::vector<int> pu, pv;
    pu.reserve(static_cast<std::size_t>(n));
    pv.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
        pv.insert(std::upper_bound(pv.begin(), pv.end(), v(k)), v(k));
        for (std::size_t t = 0; t < pu.size(); ++t)
            if (pu[t] > pv[t]) return false;
    }
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<Permutation> lower_interval(const Permutation& v) {
    std::vector<Permutation> out;
    for (const Permutation& u : all_permutations(std::max(v.size(), 1)))
        if (bruhat_leq(u, v)) out.push_back(u);
    return out;
}

} // namespace demazure
