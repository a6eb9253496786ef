#pragma once

#include <string>
#include <vector>

#include "demazure/perm.hpp"
#include "demazure/poly.hpp"
#include "demazure/shape.hpp"

namespace demazure {

// Default guard for exhaustive SSAF enumeration: |shape| + l(shape) cells.
inline constexpr int kDefaultCellBudget = 24;

// A cell of an augmented diagram. Columns are 1-based; row 0 is the
// basement, row r >= 1 is the r-th cell above it.
struct Cell {
    int column = 0;
    int row = 0;

    bool operator==(const Cell& o) const { return column == o.column && row == o.row; }
    bool operator<(const Cell& o) const {
        return column != o.column ? column < o.column : row < o.row;
    }
};

// Semi-standard augmented filling: basement permutation, shape, and the
// column entries stored bottom-to-top. Immutable once built except
// through insertion (see insertion.hpp), which returns new values.
class Ssaf {
public:
    Ssaf(Permutation basement, WeakComposition shape,
         std::vector<std::vector<int>> columns);

    // The empty filling over the given basement.
    static Ssaf empty(Permutation basement);

    const Permutation& basement() const { return basement_; }
    const WeakComposition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& columns() const { return columns_; }
    int width() const { return basement_.size(); }

    bool in_diagram(Cell c) const;
    // Entry at a cell; row 0 reads the basement.
    int entry(Cell c) const;

    bool operator==(const Ssaf& o) const;
    bool operator<(const Ssaf& o) const;

    // Rows top-to-bottom, basement last, empty cells as ".".
    std::string to_string() const;

private:
    Permutation basement_;
    WeakComposition shape_;
    std::vector<std::vector<int>> columns_;

    friend class Inserter;
};

// Cells of the augmented diagram of `shape` over a width-k basement, in
// reading order: top row down to the basement, left to right in a row.
std::vector<Cell> reading_order(const WeakComposition& shape, int k);

// An inversion triple is any triple that fails F(X) <= F(Z) <= F(Y).
bool is_inversion_triple(int x, int y, int z);

// Checks column monotonicity and that every Type A and Type B triple
// (basement cells included) is an inversion triple.
bool validate(const Ssaf& f);

// Exhaustive enumeration of SSAF(basement, shape) by backtracking over
// column entries. Throws BudgetExceeded past the cell budget.
std::vector<Ssaf> enumerate_ssaf(const Permutation& basement,
                                 const WeakComposition& shape,
                                 int cell_budget = kDefaultCellBudget);

// x^F: the exponent of x_i is one less than the number of entries i.
WeakComposition weight(const Ssaf& f);

Polynomial atom_by_fillings(const WeakComposition& alpha,
                            int cell_budget = kDefaultCellBudget);
Polynomial atom_by_operators(const WeakComposition& alpha);

Polynomial key_by_fillings(const WeakComposition& gamma,
                           int cell_budget = kDefaultCellBudget);
Polynomial key_by_operators(const WeakComposition& gamma);

} // namespace demazure
