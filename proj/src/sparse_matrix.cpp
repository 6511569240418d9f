#include "posetcomp/sparse_matrix.hpp"

#include <limits>
#include <set>
#include <string>

#include "posetcomp/error.hpp"

namespace posetcomp {

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& v) {
    if (r >= rows_ || c >= cols_) throw Error(ErrorKind::index_out_of_range, "matrix entry outside declared bases");
    if (v.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    if (r >= rows_ || c >= cols_) throw Error(ErrorKind::index_out_of_range, "matrix entry outside declared bases");
    if (v.is_zero()) entries_.erase({r, c});
    else entries_[{r, c}] = v;
}

Scalar SparseMatrix::get(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Scalar() : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_.emplace(std::pair{rc.second, rc.first}, v);
    return t;
}

SparseMatrix SparseMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                    const std::vector<std::size_t>& col_perm) const {
    SparseMatrix m(rows_, cols_);
    for (const auto& [rc, v] : entries_) m.entries_.emplace(std::pair{row_perm.at(rc.first), col_perm.at(rc.second)}, v);
    return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::degree_mismatch, "matrix product shape mismatch");
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> b_rows(b.rows_);
    for (const auto& [rc, v] : b.entries_) b_rows[rc.first].emplace_back(rc.second, v);
    SparseMatrix out(a.rows_, b.cols_);
    for (const auto& [rc, v] : a.entries_)
        for (const auto& [c, w] : b_rows[rc.second]) out.add(rc.first, c, v * w);
    return out;
}

std::size_t rank(const SparseMatrix& input, const FieldSpec& field) {
    const SparseMatrix m = input.over(field);
    // Active rows as column -> value maps, plus a column -> rows index for Markowitz counts.
    std::vector<std::map<std::size_t, Scalar>> rows(m.rows());
    std::vector<std::set<std::size_t>> col_rows(m.cols());
    for (const auto& [rc, v] : m.entries()) {
        rows[rc.first].emplace(rc.second, v);
        col_rows[rc.second].insert(rc.first);
    }
    std::set<std::size_t> active;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!rows[r].empty()) active.insert(r);

    std::size_t rk = 0;
    while (!active.empty()) {
        std::size_t best_row = 0, best_col = 0;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t r : active) {
            const std::size_t rlen = rows[r].size();
            for (const auto& [c, v] : rows[r]) {
                const std::size_t cost = (rlen - 1) * (col_rows[c].size() - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_row = r;
                    best_col = c;
                }
            }
            if (best_cost == 0) break;
        }

        const std::map<std::size_t, Scalar> pivot_row = std::move(rows[best_row]);
        rows[best_row].clear();
        active.erase(best_row);
        for (const auto& [c, v] : pivot_row) col_rows[c].erase(best_row);
        ++rk;

        const Scalar pivot_inv = pivot_row.at(best_col).inverse();
        const std::set<std::size_t> targets = col_rows[best_col];
        for (std::size_t r : targets) {
            const Scalar factor = rows[r].at(best_col) * pivot_inv;
            for (const auto& [c, v] : pivot_row) {
                auto [it, inserted] = rows[r].try_emplace(c, -(factor * v));
                if (inserted) {
                    col_rows[c].insert(r);
                } else {
                    it->second -= factor * v;
                    if (it->second.is_zero()) {
                        rows[r].erase(it);
                        col_rows[c].erase(r);
                    }
                }
            }
            if (rows[r].empty()) active.erase(r);
        }
    }
    return rk;
}

std::size_t kernel_dim(const SparseMatrix& m, const FieldSpec& field) { return m.cols() - rank(m, field); }

SparseMatrix SparseMatrix::over(const FieldSpec& field) const {
    if (field.is_rational()) return *this;
    SparseMatrix out(rows_, cols_);
    for (const auto& [rc, v] : entries_) {
        Scalar s = v;
        s.coerce_to(field.prime);
        if (!s.is_zero()) out.entries_.emplace(rc, s);
    }
    return out;
}

std::size_t BettiTable::at(int degree) const {
    for (const auto& [d, b] : degrees)
        if (d == degree) return b;
    throw Error(ErrorKind::index_out_of_range, "degree not in Betti table: " + std::to_string(degree));
}

std::vector<std::size_t> BettiTable::values() const {
    std::vector<std::size_t> out;
    out.reserve(degrees.size());
    for (const auto& entry : degrees) out.push_back(entry.second);
    return out;
}

BettiTable betti_from_boundaries(const std::vector<SparseMatrix>& boundaries,
                                 const std::vector<std::size_t>& dims, int maxdeg,
                                 const FieldSpec& field) {
    const auto top = static_cast<std::size_t>(maxdeg + 1);
    if (boundaries.size() <= top || dims.size() <= top)
        throw Error(ErrorKind::index_out_of_range, "need boundaries and dims through degree maxdeg+1");
    for (std::size_t n = 1; n <= top; ++n) {
        const auto& d = boundaries[n];
        if (d.cols() != dims[n] || d.rows() != dims[n - 1])
            throw Error(ErrorKind::degree_mismatch, "boundary " + std::to_string(n) + " has wrong shape");
        if (n + 1 <= top && !(d * boundaries[n + 1]).is_zero())
            throw Error(ErrorKind::composite_nonzero,
                        "boundary " + std::to_string(n) + " composed with boundary " + std::to_string(n + 1) +
                            " is nonzero");
    }
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t n = 1; n <= top; ++n) ranks[n] = rank(boundaries[n], field);
    BettiTable table;
    for (int n = 0; n <= maxdeg; ++n) {
        const std::size_t kernel = dims[n] - ranks[n];
        table.degrees.emplace_back(n, kernel - ranks[n + 1]);
    }
    return table;
}

}  // namespace posetcomp
