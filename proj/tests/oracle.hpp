#pragma once

// Brute-force reference computations for the tests. Deliberately naive: dense
// matrices, exhaustive enumeration, nothing shared with the library except
// the order relation of a Poset.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "posetcomp/poset.hpp"

namespace oracle {

using Tuple = std::vector<int>;

// every (n+1)-tuple of elements, kept if weakly increasing
inline std::vector<Tuple> chains(const posetcomp::Poset& p, int n, bool strict = false) {
    const int k = static_cast<int>(p.size());
    std::vector<Tuple> out;
    Tuple t(static_cast<std::size_t>(n) + 1, 0);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < t.size() && ok; ++i)
            ok = p.leq(t[i], t[i + 1]) && (!strict || t[i] != t[i + 1]);
        if (ok) out.push_back(t);
        std::size_t pos = t.size();
        while (pos > 0 && ++t[pos - 1] == k) t[--pos] = 0;
        if (pos == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t upset_count(const posetcomp::Poset& p) {
    const int k = static_cast<int>(p.size());
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        bool up = true;
        for (int x = 0; x < k && up; ++x)
            for (int y = 0; y < k && up; ++y)
                if ((mask >> x & 1u) && p.leq(x, y) && !(mask >> y & 1u)) up = false;
        count += up;
    }
    return count;
}

inline std::size_t comparable_pairs(const posetcomp::Poset& p) {
    std::size_t n = 0;
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y) n += p.leq(static_cast<int>(x), static_cast<int>(y));
    return n;
}

// Dense matrix over Q or GF(prime); entries always stored as rationals and
// reduced at elimination time.
using Dense = std::vector<std::vector<mpq_class>>;

inline std::int64_t mod_of(const mpq_class& q, std::int64_t prime) {
    auto red = [&](const mpz_class& z) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(prime));
        return static_cast<std::int64_t>(r.get_si());
    };
    std::int64_t num = red(q.get_num()), den = red(q.get_den());
    std::int64_t inv = 1, base = den, e = prime - 2;
    while (e > 0) {
        if (e & 1) inv = static_cast<std::int64_t>((__int128)inv * base % prime);
        base = static_cast<std::int64_t>((__int128)base * base % prime);
        e >>= 1;
    }
    return static_cast<std::int64_t>((__int128)num * inv % prime);
}

inline std::size_t rank(Dense m, std::int64_t prime = 0) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    if (prime == 0) {
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t piv = r;
            while (piv < rows && m[piv][c] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(m[piv], m[r]);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || m[i][c] == 0) continue;
                const mpq_class f = m[i][c] / m[r][c];
                for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            }
            ++r;
        }
        return r;
    }
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod_of(m[i][j], prime);
    auto inv = [&](std::int64_t x) {
        std::int64_t res = 1, e = prime - 2;
        while (e > 0) {
            if (e & 1) res = static_cast<std::int64_t>((__int128)res * x % prime);
            x = static_cast<std::int64_t>((__int128)x * x % prime);
            e >>= 1;
        }
        return res;
    };
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const std::int64_t pinv = inv(a[r][c]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const std::int64_t f = static_cast<std::int64_t>((__int128)a[i][c] * pinv % prime);
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = ((a[i][j] - static_cast<std::int64_t>((__int128)f * a[r][j] % prime)) % prime + prime) % prime;
        }
        ++r;
    }
    return r;
}

inline std::size_t index_in(const std::vector<Tuple>& basis, const Tuple& t) {
    return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), t) - basis.begin());
}

// Boundary from degree n to n-1 straight from the face maps.
inline Dense boundary(const posetcomp::Poset& p, int n, bool normalized) {
    const auto src = chains(p, n, normalized), dst = chains(p, n - 1, normalized);
    Dense d(dst.size(), std::vector<mpq_class>(src.size(), 0));
    for (std::size_t j = 0; j < src.size(); ++j)
        for (int i = 0; i <= n; ++i) {
            Tuple f = src[j];
            f.erase(f.begin() + i);
            auto it = std::lower_bound(dst.begin(), dst.end(), f);
            if (it == dst.end() || *it != f) continue;  // degenerate face in the normalized complex
            d[static_cast<std::size_t>(it - dst.begin())][j] += (i % 2 == 0) ? 1 : -1;
        }
    return d;
}

inline std::vector<std::size_t> nerve_betti(const posetcomp::Poset& p, int maxdeg, bool normalized,
                                            std::int64_t prime = 0) {
    std::vector<std::size_t> ranks(static_cast<std::size_t>(maxdeg) + 2, 0);
    for (int n = 1; n <= maxdeg + 1; ++n) ranks[static_cast<std::size_t>(n)] = rank(boundary(p, n, normalized), prime);
    std::vector<std::size_t> out;
    for (int n = 0; n <= maxdeg; ++n)
        out.push_back(chains(p, n, normalized).size() - ranks[static_cast<std::size_t>(n)] -
                      ranks[static_cast<std::size_t>(n) + 1]);
    return out;
}

// Full Hochschild complex Hom(I^{(x)n}, I) with the bar differential, all dense.
struct Pair {
    int lo, hi;
    friend bool operator==(Pair, Pair) = default;
};

inline std::vector<Pair> pairs(const posetcomp::Poset& p) {
    std::vector<Pair> out;
    for (int x = 0; x < static_cast<int>(p.size()); ++x)
        for (int y = 0; y < static_cast<int>(p.size()); ++y)
            if (p.leq(x, y)) out.push_back({x, y});
    return out;
}

// all n-tuples of pair indices
inline std::vector<Tuple> tuples(std::size_t d, int n) {
    std::vector<Tuple> out;
    Tuple t(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(t);
        std::size_t pos = t.size();
        while (pos > 0 && ++t[pos - 1] == static_cast<int>(d)) t[--pos] = 0;
        if (pos == 0) break;
    }
    return out;
}

inline Dense hochschild_differential(const posetcomp::Poset& p, int n) {
    const auto ps = pairs(p);
    const std::size_t d = ps.size();
    auto pidx = [&](Pair q) {
        for (std::size_t i = 0; i < d; ++i)
            if (ps[i] == q) return static_cast<int>(i);
        return -1;
    };
    // product of basis pairs as an index, -1 when it vanishes
    auto mul = [&](int a, int b) {
        if (ps[static_cast<std::size_t>(a)].hi != ps[static_cast<std::size_t>(b)].lo) return -1;
        return pidx({ps[static_cast<std::size_t>(a)].lo, ps[static_cast<std::size_t>(b)].hi});
    };
    const auto src_tuples = tuples(d, n), dst_tuples = tuples(d, n + 1);
    auto tindex = [&](const Tuple& t) {
        std::size_t k = 0;
        for (int x : t) k = k * d + static_cast<std::size_t>(x);
        return k;
    };
    Dense m(dst_tuples.size() * d, std::vector<mpq_class>(src_tuples.size() * d, 0));
    // column (t, q): the cochain sending basis tuple t to pair q, others to 0
    for (const auto& a : dst_tuples) {
        const std::size_t row_base = tindex(a) * d;
        // a0 f(a1..an)
        {
            const Tuple rest(a.begin() + 1, a.end());
            for (std::size_t q = 0; q < d; ++q) {
                const int out = mul(a[0], static_cast<int>(q));
                if (out >= 0) m[row_base + static_cast<std::size_t>(out)][tindex(rest) * d + q] += 1;
            }
        }
        for (int i = 0; i < n; ++i) {
            const int prod = mul(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i) + 1]);
            if (prod < 0) continue;
            Tuple merged;
            for (int j = 0; j <= n; ++j) {
                if (j == i + 1) continue;
                merged.push_back(j == i ? prod : a[static_cast<std::size_t>(j)]);
            }
            for (std::size_t q = 0; q < d; ++q)
                m[row_base + q][tindex(merged) * d + q] += (i % 2 == 0) ? -1 : 1;
        }
        {
            const Tuple front(a.begin(), a.end() - 1);
            for (std::size_t q = 0; q < d; ++q) {
                const int out = mul(static_cast<int>(q), a.back());
                if (out >= 0) m[row_base + static_cast<std::size_t>(out)][tindex(front) * d + q] += (n % 2 == 0) ? -1 : 1;
            }
        }
    }
    return m;
}

inline std::vector<std::size_t> hh_betti(const posetcomp::Poset& p, int maxdeg, std::int64_t prime = 0) {
    const std::size_t d = pairs(p).size();
    std::vector<std::size_t> ranks;
    for (int n = 0; n <= maxdeg; ++n) ranks.push_back(rank(hochschild_differential(p, n), prime));
    std::vector<std::size_t> out;
    std::size_t dim = d;  // d^{n+1}
    for (int n = 0; n <= maxdeg; ++n) {
        out.push_back(dim - ranks[static_cast<std::size_t>(n)] - (n ? ranks[static_cast<std::size_t>(n) - 1] : 0));
        dim *= d;
    }
    return out;
}

}  // namespace oracle
