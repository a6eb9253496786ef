#include "demazure/ssaf.hpp"

#include <algorithm>
#include <sstream>

#include "demazure/errors.hpp"

namespace demazure {

Ssaf::Ssaf(Permutation basement, WeakComposition shape,
           std::vector<std::vector<int>> columns)
    : basement_(std::move(basement)), shape_(std::move(shape)),
      columns_(std::move(columns)) {
    if (shape_.size() != basement_.size())
        throw ParseError("shape length must match basement length");
    if (static_cast<int>(columns_.size()) != shape_.size())
        throw ParseError("column count must match shape length");
    for (int i = 0; i < shape_.size(); ++i)
        if (static_cast<int>(columns_[static_cast<std::size_t>(i)].size()) != shape_[i])
            throw ParseError("column height must match shape part");
}

Ssaf Ssaf::empty(Permutation basement) {
    const int k = basement.size();
    return Ssaf(std::move(basement),
                WeakComposition(std::vector<int>(static_cast<std::size_t>(k), 0)),
                std::vector<std::vector<int>>(static_cast<std::size_t>(k)));
}

bool Ssaf::in_diagram(Cell c) const {
    if (c.column < 1 || c.column > width() || c.row < 0) return false;
    return c.row <= shape_[c.column - 1];
}

int Ssaf::entry(Cell c) const {
    if (c.row == 0) return basement_(c.column);
    return columns_[static_cast<std::size_t>(c.column - 1)]
                   [static_cast<std::size_t>(c.row - 1)];
}

bool Ssaf::operator==(const Ssaf& o) const {
    return basement_ == o.basement_ && shape_ == o.shape_ && columns_ == o.columns_;
}

bool Ssaf::operator<(const Ssaf& o) const {
    if (!(basement_ == o.basement_)) return basement_ < o.basement_;
    if (shape_ != o.shape_) return shape_ < o.shape_;
    return columns_ < o.columns_;
}

std::string Ssaf::to_string() const {
    int maxh = 0;
    for (int i = 0; i < shape_.size(); ++i) maxh = std::max(maxh, shape_[i]);
    std::ostringstream out;
    for (int r = maxh; r >= 0; --r) {
        for (int col = 1; col <= width(); ++col) {
            if (col > 1) out << ' ';
            if (r <= shape_[col - 1])
                out << entry({col, r});
            else
                out << '.';
        }
        out << '\n';
    }
    return out.str();
}

std::vector<Cell> reading_order(const WeakComposition& shape, int k) {
    int maxh = 0;
    for (int i = 0; i < shape.size(); ++i) maxh = std::max(maxh, shape[i]);
    std::vector<Cell> cells;
    for (int r = maxh; r >= 1; --r)
        for (int col = 1; col <= k; ++col)
            if (col <= shape.size() && shape[col - 1] >= r) cells.push_back({col, r});
    for (int col = 1; col <= k; ++col) cells.push_back({col, 0});
    return cells;
}

bool is_inversion_triple(int x, int y, int z) { return !(x <= z && z <= y); }

bool validate(const Ssaf& f) {
    const int k = f.width();
    const WeakComposition& shape = f.shape();
    for (int col = 1; col <= k; ++col) {
        int below = f.entry({col, 0});
        for (int r = 1; r <= shape[col - 1]; ++r) {
            const int e = f.entry({col, r});
            if (e < 1 || e > k || e > below) return false;
            below = e;
        }
    }
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            if (shape[i - 1] >= shape[j - 1]) {
                // Type A: X,Y stacked in column i, Z beside X in column j.
                for (int r = 1; r <= shape[j - 1]; ++r) {
                    if (!is_inversion_triple(f.entry({i, r}), f.entry({i, r - 1}),
                                             f.entry({j, r})))
                        return false;
                }
            } else {
                // Type B: X,Y stacked in column j, Z beside Y in column i.
                for (int r = 1; r <= shape[i - 1] + 1 && r <= shape[j - 1]; ++r) {
                    if (!is_inversion_triple(f.entry({j, r}), f.entry({j, r - 1}),
                                             f.entry({i, r - 1})))
                        return false;
                }
            }
        }
    }
    return true;
}

namespace {

void enumerate_columns(const Permutation& basement, const WeakComposition& shape,
                       std::vector<std::vector<int>>& cols, int col,
                       std::vector<Ssaf>& out) {
    const int k = basement.size();
    if (col > k) {
        Ssaf f(basement, shape, cols);
        if (validate(f)) out.push_back(std::move(f));
        return;
    }
    const int height = shape[col - 1];
    std::vector<int>& column = cols[static_cast<std::size_t>(col - 1)];
    // column entries weakly decrease upward, bounded by the basement
    struct Rec {
        const Permutation& basement;
        const WeakComposition& shape;
        std::vector<std::vector<int>>& cols;
        std::vector<int>& column;
        std::vector<Ssaf>& out;
        int col, height, k;
        void fill(int r, int bound) {
            if (r > height) {
                enumerate_columns(basement, shape, cols, col + 1, out);
                return;
            }
            for (int v = 1; v <= bound; ++v) {
                column[static_cast<std::size_t>(r - 1)] = v;
                fill(r + 1, v);
            }
        }
    } rec{basement, shape, cols, column, out, col, height, k};
    rec.fill(1, basement(col));
}

} // namespace

std::vector<Ssaf> enumerate_ssaf(const Permutation& basement,
                                 const WeakComposition& shape, int cell_budget) {
    if (shape.size() != basement.size())
        throw ParseError("shape length must match basement length");
    if (shape.sum() + shape.size() > cell_budget)
        throw BudgetExceeded("SSAF enumeration budget exceeded: " +
                             std::to_string(shape.sum() + shape.size()) + " cells");
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape.size()));
    for (int i = 0; i < shape.size(); ++i)
        cols[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(shape[i]));
    std::vector<Ssaf> out;
    enumerate_columns(basement, shape, cols, 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

WeakComposition weight(const Ssaf& f) {
    const int k = f.width();
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (int col = 1; col <= k; ++col)
        for (int r = 0; r <= f.shape()[col - 1]; ++r)
            ++counts[static_cast<std::size_t>(f.entry({col, r}) - 1)];
    for (int& c : counts) --c;
    return WeakComposition(std::move(counts));
}

Polynomial atom_by_fillings(const WeakComposition& alpha, int cell_budget) {
    const int k = alpha.size();
    Polynomial sum;
    sum.declare_nvars(k);
    for (const Ssaf& f : enumerate_ssaf(Permutation::identity(k), alpha, cell_budget))
        sum += Polynomial::monomial(weight(f));
    return sum;
}

Polynomial atom_by_operators(const WeakComposition& alpha) {
    const Permutation w = omega(alpha);
    Polynomial result = apply_word(OperatorKind::theta, w.inverse(),
                                   Polynomial::monomial(sort_desc(alpha).as_composition()));
    result.declare_nvars(alpha.size());
    return result;
}

Polynomial key_by_fillings(const WeakComposition& gamma, int cell_budget) {
    const int k = gamma.size();
    const WeakComposition alpha = reverse(gamma);
    Polynomial sum;
    sum.declare_nvars(k);
    for (const Ssaf& f : enumerate_ssaf(Permutation::reversal(k), alpha, cell_budget))
        sum += Polynomial::monomial(weight(f));
    return sum;
}

Polynomial key_by_operators(const WeakComposition& gamma) {
    const int k = gamma.size();
    const WeakComposition alpha = reverse(gamma);
    const Permutation w = compose(Permutation::reversal(k), omega(alpha).inverse());
    Polynomial result = apply_word(OperatorKind::pi, w,
                                   Polynomial::monomial(sort_desc(alpha).as_composition()));
    result.declare_nvars(k);
    return result;
}

} // namespace demazure
