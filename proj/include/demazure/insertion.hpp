#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "demazure/ssaf.hpp"

namespace demazure {

using Word = std::vector<int>;

// A word split into consecutive segments; the representation shared by
// column words (weakly decreasing segments) and row words (strictly
// increasing segments).
struct SegmentedWord {
    Word letters;
    std::vector<int> lengths;

    bool operator==(const SegmentedWord& o) const {
        return letters == o.letters && lengths == o.lengths;
    }

    // Digits with "|" between segments for letters <= 9, comma-separated
    // otherwise.
    std::string to_string() const;
    static SegmentedWord parse(const std::string& text);
};

bool is_column_word(const SegmentedWord& w);
bool is_row_word(const SegmentedWord& w);

// Inserts one letter, returning the new filling and the created cell.
std::pair<Ssaf, Cell> insert_tracked(const Ssaf& f, int c);
Ssaf insert(const Ssaf& f, int c);

// Left-to-right fold: F <- c_1 c_2 ... inserts c_1 first.
Ssaf insert_word(const Ssaf& f, const Word& w);

// Entries of each row in ascending order, bottom row first (basement
// excluded).
SegmentedWord row_word(const Ssaf& f);

// The two local rewrites preserving the insertion image:
//   variant 1: bac <-> bca with c <= b < a
//   variant 2: acb <-> cab with c < b <= a
// pos is the 0-based index of the window's first letter. Throws
// ParseError when neither direction of the variant matches.
Word twisted_knuth_step(const Word& w, std::size_t pos, int variant);

// One extraction pass: the strictly increasing letters bubbled out in
// front (prefix, then pivot = head of the rewritten first segment) form
// the next row segment; residual is the remaining column word.
struct ConversionStage {
    Word prefix;
    int pivot = 0;
    SegmentedWord residual;

    Word row_segment() const;
};

std::vector<ConversionStage> column_to_row_stages(const SegmentedWord& w);

// Repeated extraction; equals row_word(insert_word(empty, w)).
SegmentedWord column_to_row(const SegmentedWord& w);

struct Biword {
    std::vector<int> upper;
    Word lower;

    // Two aligned rows.
    std::string to_string() const;
};

// Labels a column word's letters segment-by-segment k, k-1, ..., 1.
Biword column_biword(const SegmentedWord& w);
// Labels a row word's letters segment-by-segment 1, 2, ..., k.
Biword row_biword(const SegmentedWord& w);

// Cells labeled in creation order with the biword's upper labels.
struct RecordingTableau {
    std::map<Cell, int> labels;

    bool operator==(const RecordingTableau& o) const { return labels == o.labels; }
    bool operator<(const RecordingTableau& o) const { return labels < o.labels; }
};

std::pair<Ssaf, RecordingTableau> insert_with_recording(const Ssaf& u, const Biword& w);

} // namespace demazure
