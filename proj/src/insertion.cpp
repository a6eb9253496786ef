#include "demazure/insertion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "demazure/errors.hpp"

namespace demazure {

std::string SegmentedWord::to_string() const {
    bool compact = true;
    for (int a : letters)
        if (a > 9) compact = false;
    std::ostringstream out;
    std::size_t idx = 0;
    for (std::size_t s = 0; s < lengths.size(); ++s) {
        if (s) out << '|';
        for (int j = 0; j < lengths[s]; ++j, ++idx) {
            if (!compact && j) out << ',';
            out << letters[idx];
        }
    }
    return out.str();
}

SegmentedWord SegmentedWord::parse(const std::string& text) {
    SegmentedWord w;
    std::istringstream in(text);
    std::string seg;
    while (std::getline(in, seg, '|')) {
        int count = 0;
        if (seg.find(',') == std::string::npos) {
            for (char c : seg) {
                if (c < '1' || c > '9') throw ParseError("bad word letter: " + text);
                w.letters.push_back(c - '0');
                ++count;
            }
        } else {
            std::istringstream segin(seg);
            std::string tok;
            while (std::getline(segin, tok, ',')) {
                w.letters.push_back(std::stoi(tok));
                ++count;
            }
        }
        w.lengths.push_back(count);
    }
    return w;
}

namespace {

std::vector<Word> segments_of(const SegmentedWord& w) {
    std::vector<Word> segs;
    std::size_t idx = 0;
    for (int len : w.lengths) {
        segs.emplace_back(w.letters.begin() + static_cast<std::ptrdiff_t>(idx),
                          w.letters.begin() + static_cast<std::ptrdiff_t>(idx + static_cast<std::size_t>(len)));
        idx += static_cast<std::size_t>(len);
    }
    return segs;
}

SegmentedWord from_segments(const std::vector<Word>& segs) {
    SegmentedWord w;
    for (const Word& s : segs) {
        if (s.empty()) continue;
        w.letters.insert(w.letters.end(), s.begin(), s.end());
        w.lengths.push_back(static_cast<int>(s.size()));
    }
    return w;
}

} // namespace

bool is_column_word(const SegmentedWord& w) {
    int total = 0;
    for (int len : w.lengths) {
        if (len <= 0) return false;
        total += len;
    }
    if (total != static_cast<int>(w.letters.size())) return false;
    for (std::size_t s = 1; s < w.lengths.size(); ++s)
        if (w.lengths[s] > w.lengths[s - 1]) return false;
    const std::vector<Word> segs = segments_of(w);
    for (const Word& seg : segs)
        for (std::size_t j = 1; j < seg.size(); ++j)
            if (seg[j] > seg[j - 1]) return false;
    // tail-aligned cross inequalities: a_{i+1, c_{i+1}-j} > a_{i, c_i-j}
    for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
        const Word& a = segs[i];
        const Word& b = segs[i + 1];
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[b.size() - 1 - j] <= a[a.size() - 1 - j]) return false;
    }
    return true;
}

bool is_row_word(const SegmentedWord& w) {
    int total = 0;
    for (int len : w.lengths) {
        if (len <= 0) return false;
        total += len;
    }
    if (total != static_cast<int>(w.letters.size())) return false;
    for (std::size_t s = 1; s < w.lengths.size(); ++s)
        if (w.lengths[s] > w.lengths[s - 1]) return false;
    const std::vector<Word> segs = segments_of(w);
    for (const Word& seg : segs)
        for (std::size_t j = 1; j < seg.size(); ++j)
            if (seg[j] <= seg[j - 1]) return false;
    for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
        const Word& a = segs[i];
        const Word& b = segs[i + 1];
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[b.size() - 1 - j] > a[a.size() - 1 - j]) return false;
    }
    return true;
}

std::pair<Ssaf, Cell> insert_tracked(const Ssaf& f, int c) {
    const int k = f.width();
    if (c < 1 || c > k) throw ParseError("letter exceeds basement range");
    std::vector<int> shape = f.shape().parts;
    std::vector<std::vector<int>> cols = f.columns();
    const Permutation& basement = f.basement();
    const auto entry_at = [&](Cell cell) -> int {
        if (cell.row == 0) return basement(cell.column);
        return cols[static_cast<std::size_t>(cell.column - 1)]
                   [static_cast<std::size_t>(cell.row - 1)];
    };
    const std::vector<Cell> cells = reading_order(WeakComposition(shape), k);
    int cur = c;
    std::size_t start = 0;
    while (true) {
        std::size_t found = cells.size();
        for (std::size_t idx = start; idx < cells.size(); ++idx) {
            const Cell a = cells[idx];
            const Cell above{a.column, a.row + 1};
            const bool has_above = above.row <= shape[static_cast<std::size_t>(a.column - 1)];
            const int above_val = has_above ? entry_at(above) : 0;
            if (above_val < cur && cur <= entry_at(a)) {
                found = idx;
                break;
            }
        }
        if (found == cells.size())
            throw std::logic_error("insertion found no landing cell");
        const Cell a = cells[found];
        const std::size_t ci = static_cast<std::size_t>(a.column - 1);
        if (a.row == shape[ci]) {
            cols[ci].push_back(cur);
            ++shape[ci];
            return {Ssaf(basement, WeakComposition(shape), std::move(cols)),
                    Cell{a.column, a.row + 1}};
        }
        const int bumped = cols[ci][static_cast<std::size_t>(a.row)];
        cols[ci][static_cast<std::size_t>(a.row)] = cur;
        cur = bumped;
        start = found + 1;
    }
}

Ssaf insert(const Ssaf& f, int c) { return insert_tracked(f, c).first; }

Ssaf insert_word(const Ssaf& f, const Word& w) {
    Ssaf cur = f;
    for (int c : w) cur = insert(cur, c);
    return cur;
}

SegmentedWord row_word(const Ssaf& f) {
    int maxh = 0;
    for (int i = 0; i < f.shape().size(); ++i) maxh = std::max(maxh, f.shape()[i]);
    SegmentedWord w;
    for (int r = 1; r <= maxh; ++r) {
        Word row;
        for (int col = 1; col <= f.width(); ++col)
            if (f.shape()[col - 1] >= r) row.push_back(f.entry({col, r}));
        std::sort(row.begin(), row.end());
        w.letters.insert(w.letters.end(), row.begin(), row.end());
        w.lengths.push_back(static_cast<int>(row.size()));
    }
    return w;
}

Word twisted_knuth_step(const Word& w, std::size_t pos, int variant) {
    if (pos + 3 > w.size()) throw ParseError("twisted Knuth window out of range");
    const int p = w[pos], q = w[pos + 1], r = w[pos + 2];
    Word out = w;
    if (variant == 1) {
        // bac <-> bca with c <= b < a
        if (r <= p && p < q) { // (b,a,c) -> (b,c,a)
            out[pos + 1] = r;
            out[pos + 2] = q;
            return out;
        }
        if (q <= p && p < r) { // (b,c,a) -> (b,a,c)
            out[pos + 1] = r;
            out[pos + 2] = q;
            return out;
        }
        throw ParseError("twisted Knuth variant 1 pattern mismatch");
    }
    if (variant == 2) {
        // acb <-> cab with c < b <= a
        if (q < r && r <= p) { // (a,c,b) -> (c,a,b)
            out[pos] = q;
            out[pos + 1] = p;
            return out;
        }
        if (p < r && r <= q) { // (c,a,b) -> (a,c,b)
            out[pos] = q;
            out[pos + 1] = p;
            return out;
        }
        throw ParseError("twisted Knuth variant 2 pattern mismatch");
    }
    throw ParseError("twisted Knuth variant must be 1 or 2");
}

Word ConversionStage::row_segment() const {
    Word seg = prefix;
    seg.push_back(pivot);
    return seg;
}

namespace {

// Bubbling pass: the head of each later segment moves left, at each
// earlier segment swapping with the first entry it strictly exceeds;
// the letters that fall out in front are strictly increasing and form
// the next row segment together with the head of the rewritten first
// segment.
ConversionStage extract_stage(std::vector<Word> segs) {
    ConversionStage stage;
    for (std::size_t i = segs.size(); i-- > 1;) {
        int moving = segs[i].front();
        segs[i].erase(segs[i].begin());
        for (std::size_t j = i; j-- > 0;) {
            auto it = std::find_if(segs[j].begin(), segs[j].end(),
                                   [&](int v) { return v < moving; });
            if (it == segs[j].end())
                throw std::logic_error("column word bubbling found no smaller entry");
            std::swap(moving, *it);
        }
        stage.prefix.push_back(moving);
    }
    stage.pivot = segs.front().front();
    segs.front().erase(segs.front().begin());
    stage.residual = from_segments(segs);
    return stage;
}

} // namespace

std::vector<ConversionStage> column_to_row_stages(const SegmentedWord& w) {
    if (!is_column_word(w)) throw ParseError("not a column word: " + w.to_string());
    std::vector<ConversionStage> stages;
    SegmentedWord cur = w;
    while (!cur.lengths.empty()) {
        stages.push_back(extract_stage(segments_of(cur)));
        cur = stages.back().residual;
    }
    return stages;
}

SegmentedWord column_to_row(const SegmentedWord& w) {
    SegmentedWord out;
    for (const ConversionStage& stage : column_to_row_stages(w)) {
        const Word seg = stage.row_segment();
        out.letters.insert(out.letters.end(), seg.begin(), seg.end());
        out.lengths.push_back(static_cast<int>(seg.size()));
    }
    return out;
}

std::string Biword::to_string() const {
    std::ostringstream top, bottom;
    for (std::size_t j = 0; j < lower.size(); ++j) {
        const std::string u = std::to_string(upper[j]);
        const std::string l = std::to_string(lower[j]);
        const std::size_t width = std::max(u.size(), l.size());
        if (j) {
            top << ' ';
            bottom << ' ';
        }
        top << std::string(width - u.size(), ' ') << u;
        bottom << std::string(width - l.size(), ' ') << l;
    }
    return top.str() + "\n" + bottom.str() + "\n";
}

Biword column_biword(const SegmentedWord& w) {
    Biword b;
    b.lower = w.letters;
    const int k = static_cast<int>(w.lengths.size());
    for (std::size_t s = 0; s < w.lengths.size(); ++s)
        for (int j = 0; j < w.lengths[s]; ++j)
            b.upper.push_back(k - static_cast<int>(s));
    return b;
}

Biword row_biword(const SegmentedWord& w) {
    Biword b;
    b.lower = w.letters;
    for (std::size_t s = 0; s < w.lengths.size(); ++s)
        for (int j = 0; j < w.lengths[s]; ++j)
            b.upper.push_back(static_cast<int>(s) + 1);
    return b;
}

std::pair<Ssaf, RecordingTableau> insert_with_recording(const Ssaf& u, const Biword& w) {
    if (w.upper.size() != w.lower.size())
        throw ParseError("biword rows must have equal length");
    Ssaf cur = u;
    RecordingTableau rec;
    for (std::size_t j = 0; j < w.lower.size(); ++j) {
        auto [next, cell] = insert_tracked(cur, w.lower[j]);
        cur = std::move(next);
        rec.labels[cell] = w.upper[j];
    }
    return {std::move(cur), std::move(rec)};
}

} // namespace demazure
