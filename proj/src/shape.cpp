#include "demazure/shape.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "demazure/errors.hpp"

namespace demazure {

WeakComposition::WeakComposition(std::initializer_list<int> ps) : parts(ps) {
    for (int p : parts)
        if (p < 0) throw ParseError("negative part in composition");
}

WeakComposition::WeakComposition(std::vector<int> ps) : parts(std::move(ps)) {
    for (int p : parts)
        if (p < 0) throw ParseError("negative part in composition");
}

int WeakComposition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool WeakComposition::is_partition() const {
    return std::is_sorted(parts.begin(), parts.end(), std::greater<int>());
}

WeakComposition WeakComposition::padded(int len) const {
    std::vector<int> ps = parts;
    while (static_cast<int>(ps.size()) < len) ps.push_back(0);
    return WeakComposition(std::move(ps));
}

std::string WeakComposition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    out << ')';
    return out.str();
}

WeakComposition WeakComposition::parse(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw ParseError("unbalanced parentheses: " + text);
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> ps;
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t pos = 0;
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos == tok.size()) throw ParseError("empty part in composition: " + text);
        ps.push_back(std::stoi(tok.substr(pos)));
    }
    if (ps.empty()) throw ParseError("empty composition: " + text);
    return WeakComposition(std::move(ps));
}

Partition::Partition(std::initializer_list<int> ps) : parts(ps) {
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<int>()))
        throw ParseError("partition parts must weakly decrease");
}

Partition::Partition(std::vector<int> ps) : parts(std::move(ps)) {
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<int>()))
        throw ParseError("partition parts must weakly decrease");
}

int Partition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const {
    return WeakComposition(parts).to_string();
}

Partition sort_desc(const WeakComposition& alpha) {
    std::vector<int> ps = alpha.parts;
    std::sort(ps.begin(), ps.end(), std::greater<int>());
    return Partition(std::move(ps));
}

Permutation omega(const WeakComposition& alpha) {
    const Partition lambda = sort_desc(alpha);
    const int k = alpha.size();
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    std::vector<int> images(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (!used[static_cast<std::size_t>(j)] && lambda[j] == alpha[i]) {
                used[static_cast<std::size_t>(j)] = true;
                images[static_cast<std::size_t>(i)] = j + 1;
                break;
            }
        }
    }
    return Permutation(std::move(images));
}

namespace {

std::vector<int> trimmed_sorted(const WeakComposition& a) {
    std::vector<int> ps = sort_desc(a).parts;
    while (!ps.empty() && ps.back() == 0) ps.pop_back();
    return ps;
}

} // namespace

bool comp_geq(const WeakComposition& beta, const WeakComposition& alpha) {
    if (trimmed_sorted(beta) != trimmed_sorted(alpha))
        throw IncomparableShapes("compositions are not rearrangements of one partition");
    const int len = std::max(beta.size(), alpha.size());
    return bruhat_leq(omega(beta.padded(len)), omega(alpha.padded(len)));
}

bool comp_leq(const WeakComposition& alpha, const WeakComposition& beta) {
    return comp_geq(beta, alpha);
}

WeakComposition reverse(const WeakComposition& alpha) {
    std::vector<int> ps(alpha.parts.rbegin(), alpha.parts.rend());
    return WeakComposition(std::move(ps));
}

std::vector<WeakComposition> rearrangement_class(const WeakComposition& alpha) {
    std::vector<int> ps = alpha.parts;
    std::sort(ps.begin(), ps.end());
    std::vector<WeakComposition> out;
    do {
        out.emplace_back(ps);
    } while (std::next_permutation(ps.begin(), ps.end()));
    return out;
}

std::vector<WeakComposition> compositions_of(int total, int parts) {
    std::vector<WeakComposition> out;
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    // lexicographic enumeration by recursion on the first part
    struct Rec {
        std::vector<WeakComposition>& out;
        std::vector<int>& cur;
        void go(int idx, int remaining, int parts) {
            if (idx == parts) {
                if (remaining == 0) out.emplace_back(cur);
                return;
            }
            if (idx == parts - 1) {
                cur[static_cast<std::size_t>(idx)] = remaining;
                out.emplace_back(cur);
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                cur[static_cast<std::size_t>(idx)] = v;
                go(idx + 1, remaining - v, parts);
            }
        }
    } rec{out, cur};
    if (parts == 0) {
        if (total == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    rec.go(0, total, parts);
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, int max_parts,
                    std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_parts == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_parts - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int total, int max_parts) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(total, total == 0 ? 1 : total, max_parts, cur, out);
    return out;
}

} // namespace demazure
