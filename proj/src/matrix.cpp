#include "sullivan/matrix.hpp"

#include <algorithm>

#include "sullivan/errors.hpp"

namespace sullivan {

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rat& bscale) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, b[j].second * bscale);
            if (out.back().second == 0) out.pop_back();
            ++j;
        } else {
            Rat v = a[i].second + b[j].second * bscale;
            if (v != 0) out.emplace_back(a[i].first, v);
            ++i, ++j;
        }
    }
    return out;
}

Rat functional_apply(const SparseVec& functional, const SparseVec& v) {
    Rat out(0);
    size_t i = 0, j = 0;
    while (i < functional.size() && j < v.size()) {
        if (functional[i].first < v[j].first)
            ++i;
        else if (v[j].first < functional[i].first)
            ++j;
        else {
            out += functional[i].second * v[j].second;
            ++i, ++j;
        }
    }
    return out;
}

void SparseRationalMatrix::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw RangeError("matrix index out of range");
    SparseVec& row = data_[static_cast<size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        row.insert(it, {c, v});
    }
}

namespace {

// Clears denominators and the content so the row has coprime integer entries.
void normalize_integer(SparseVec& row) {
    if (row.empty()) return;
    Int lcm(1);
    for (const auto& [c, v] : row) {
        Int den = v.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    Int content(0);
    for (auto& [c, v] : row) {
        v *= Rat(lcm);
        v.canonicalize();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num().get_mpz_t());
    }
    if (content > 1)
        for (auto& [c, v] : row) {
            v /= Rat(content);
            v.canonicalize();
        }
}

}  // namespace

long SparseRationalMatrix::rank() const {
    // Fraction-free elimination: rows are kept as coprime integer vectors and
    // the update is the Bareiss cross-multiplication p*row - q*pivot_row,
    // content-stripped to keep entries small under sparse pivoting.
    std::vector<SparseVec> work;
    work.reserve(data_.size());
    for (const SparseVec& r : data_)
        if (!r.empty()) {
            work.push_back(r);
            normalize_integer(work.back());
        }
    long rank = 0;
    std::vector<bool> used(work.size(), false);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        size_t pivot_support = 0;
        for (size_t r = 0; r < work.size(); ++r) {
            if (used[r] || work[r].empty()) continue;
            if (work[r].front().first != col) continue;  // leading column decides candidacy
            if (pivot < 0 || work[r].size() < pivot_support) {
                pivot = static_cast<int>(r);
                pivot_support = work[r].size();
            }
        }
        if (pivot < 0) continue;
        used[static_cast<size_t>(pivot)] = true;
        ++rank;
        const SparseVec& prow = work[static_cast<size_t>(pivot)];
        Rat p = prow.front().second;
        for (size_t r = 0; r < work.size(); ++r) {
            if (used[r] || work[r].empty()) continue;
            if (work[r].front().first != col) continue;
            Rat q = work[r].front().second;
            SparseVec scaled;
            scaled.reserve(work[r].size());
            for (const auto& [c, v] : work[r]) scaled.emplace_back(c, v * p);
            work[r] = sparse_add(scaled, prow, -q);
            normalize_integer(work[r]);
        }
    }
    return rank;
}

void RowSpan::back_eliminate(SparseVec& v, SparseVec* combo) const {
    // Rows are fully reduced (each pivot appears in its own row only), so a
    // single pass cancels every pivot coordinate.
    for (size_t r = 0; r < rows_.size() && !v.empty(); ++r) {
        Rat c(0);
        for (const auto& [col, val] : v)
            if (col == pivots_[r]) {
                c = val;
                break;
            }
        if (c != 0) {
            v = sparse_add(v, rows_[r], -c);
            if (combo) *combo = sparse_add(*combo, row_combos_[r], -c);
        }
    }
}

SparseVec RowSpan::reduce(const SparseVec& v) const {
    SparseVec out = v;
    back_eliminate(out, nullptr);
    return out;
}

SparseVec RowSpan::reduce_tracked(const SparseVec& v, SparseVec& combination) const {
    SparseVec out = v;
    combination.clear();
    back_eliminate(out, &combination);
    return out;
}

bool RowSpan::insert(const SparseVec& v) { return insert_tagged(v, -1); }

bool RowSpan::insert_tagged(const SparseVec& v, int tag) {
    SparseVec combo;
    if (tag >= 0) combo.emplace_back(tag, Rat(1));
    SparseVec red = v;
    back_eliminate(red, tag >= 0 ? &combo : nullptr);
    if (red.empty()) return false;
    // Monic on the leading (canonically first) column.
    Rat lead = red.front().second;
    for (auto& [c, val] : red) {
        val /= lead;
        val.canonicalize();
    }
    if (tag >= 0)
        for (auto& [t, val] : combo) {
            val /= lead;
            val.canonicalize();
        }
    int pivot = red.front().first;
    // Eliminate the new pivot from existing rows to stay fully reduced.
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rat c(0);
        for (const auto& [col, val] : rows_[r])
            if (col == pivot) {
                c = val;
                break;
            }
        if (c != 0) {
            rows_[r] = sparse_add(rows_[r], red, -c);
            row_combos_[r] = sparse_add(row_combos_[r], combo, -c);
        }
    }
    rows_.push_back(std::move(red));
    row_combos_.push_back(std::move(combo));
    pivots_.push_back(pivot);
    return true;
}

SparseVec RowSpan::refusal_functional(const SparseVec& v) const {
    SparseVec residual = reduce(v);
    if (residual.empty()) throw PreconditionError("vector lies in the span; no refusal exists");
    int j = residual.front().first;
    // lambda(w) reads coordinate j of w reduced against the span: lambda_j = 1
    // and lambda_p = -(row_p)_j on each pivot column p.
    SparseVec out;
    out.emplace_back(j, Rat(1));
    for (size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& [col, val] : rows_[r])
            if (col == j && pivots_[r] != j) out.emplace_back(pivots_[r], -val);
    }
    std::sort(out.begin(), out.end(),
              [](const std::pair<int, Rat>& a, const std::pair<int, Rat>& b) { return a.first < b.first; });
    return out;
}

std::vector<SparseVec> kernel_basis(const SparseRationalMatrix& m) {
    // RREF the transpose-free way: insert columns? Kernel needs column
    // relations, so run reduction with unknown tags: feed each column-indexed
    // unknown's image row and read combinations for dependent columns.
    RowSpan span(m.rows() == 0 ? 1 : m.rows());
    // Column images: transpose on the fly.
    std::vector<SparseVec> cols(static_cast<size_t>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) cols[static_cast<size_t>(c)].emplace_back(r, v);
    std::vector<SparseVec> kernel;
    for (int c = 0; c < m.cols(); ++c) {
        SparseVec combo;
        SparseVec residual = span.reduce_tracked(cols[static_cast<size_t>(c)], combo);
        if (residual.empty()) {
            // 0 = col_c + sum_t combo_t * col_t, so e_c + combo is in the kernel.
            SparseVec k = sparse_add(combo, SparseVec{{c, Rat(1)}}, Rat(1));
            kernel.push_back(std::move(k));
        } else {
            span.insert_tagged(cols[static_cast<size_t>(c)], c);
        }
    }
    return kernel;
}

}  // namespace sullivan
