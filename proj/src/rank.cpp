#include "toricnp/rank.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricnp {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Int64Overflow {};

// Arithmetic used by the integer elimination; the 64-bit specialization
// throws so the caller can retry with big integers.
template <class Int>
struct Arith {
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int sub(const Int& a, const Int& b) { return a - b; }
    static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
    static Int div_exact(const Int& a, const Int& b) { return a / b; }
};

template <>
struct Arith<long long> {
    static long long mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
        return r;
    }
    static long long sub(long long a, long long b) {
        long long r;
        if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
        return r;
    }
    static long long gcd(long long a, long long b) {
        if (a == std::numeric_limits<long long>::min() || b == std::numeric_limits<long long>::min())
            throw Int64Overflow{};
        return std::gcd(a, b);
    }
    static long long div_exact(long long a, long long b) { return a / b; }
};

template <class Int>
using SparseRow = std::vector<std::pair<int, Int>>;

template <class Int>
void normalize_content(SparseRow<Int>& row) {
    Int g = 0;
    for (const auto& [c, v] : row) {
        g = Arith<Int>::gcd(g, v);
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& [c, v] : row) v = Arith<Int>::div_exact(v, g);
}

template <class Int>
const Int* row_value_at(const SparseRow<Int>& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
}

// row := pv*row - sv*pivot, entries merged by column; the combined column
// `col` cancels exactly.  Content-normalized afterwards.
template <class Int>
SparseRow<Int> combine(const SparseRow<Int>& row, const SparseRow<Int>& pivot, const Int& pv,
                       const Int& sv) {
    SparseRow<Int> out;
    out.reserve(row.size() + pivot.size());
    size_t a = 0, b = 0;
    while (a < row.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
            out.emplace_back(row[a].first, Arith<Int>::mul(pv, row[a].second));
            ++a;
        } else if (a == row.size() || pivot[b].first < row[a].first) {
            Int val = Arith<Int>::mul(sv, pivot[b].second);
            out.emplace_back(pivot[b].first, Arith<Int>::sub(Int(0), val));
            ++b;
        } else {
            Int val = Arith<Int>::sub(Arith<Int>::mul(pv, row[a].second),
                                      Arith<Int>::mul(sv, pivot[b].second));
            if (val != 0) out.emplace_back(row[a].first, std::move(val));
            ++a;
            ++b;
        }
    }
    normalize_content(out);
    return out;
}

// Pick the pivot row among the active ones: fewest entries, then leftmost
// leading column, then lowest index — deterministic and fill-averse.
template <class Row>
int pick_pivot_row(const std::vector<Row>& rows, const std::vector<char>& active) {
    int best = -1;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (!active[static_cast<size_t>(r)] || rows[static_cast<size_t>(r)].empty()) continue;
        if (best < 0) {
            best = r;
            continue;
        }
        const auto& cand = rows[static_cast<size_t>(r)];
        const auto& cur = rows[static_cast<size_t>(best)];
        if (std::tuple{cand.size(), cand.front().first, r} <
            std::tuple{cur.size(), cur.front().first, best})
            best = r;
    }
    return best;
}

template <class Int>
long long integer_rank(std::vector<SparseRow<Int>> rows) {
    std::vector<char> active(rows.size(), 1);
    for (auto& row : rows) normalize_content(row);
    long long rank = 0;
    while (true) {
        int p = pick_pivot_row(rows, active);
        if (p < 0) break;
        ++rank;
        active[static_cast<size_t>(p)] = 0;
        const int col = rows[static_cast<size_t>(p)].front().first;
        const Int pv = rows[static_cast<size_t>(p)].front().second;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (!active[static_cast<size_t>(r)]) continue;
            const Int* sv = row_value_at(rows[static_cast<size_t>(r)], col);
            if (!sv) continue;
            rows[static_cast<size_t>(r)] = combine(rows[static_cast<size_t>(r)],
                                                   rows[static_cast<size_t>(p)], pv, *sv);
            if (rows[static_cast<size_t>(r)].empty()) active[static_cast<size_t>(r)] = 0;
        }
        rows[static_cast<size_t>(p)].clear();
        rows[static_cast<size_t>(p)].shrink_to_fit();
    }
    return rank;
}

long long mod_inverse(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return t < 0 ? t + p : t;
}

long long mul_mod(long long a, long long b, long long p) {
    return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

long long fp_rank(std::vector<SparseRow<long long>> rows, long long p) {
    for (auto& row : rows) {
        SparseRow<long long> reduced;
        for (auto& [c, v] : row) {
            long long m = v % p;
            if (m < 0) m += p;
            if (m != 0) reduced.emplace_back(c, m);
        }
        row = std::move(reduced);
    }
    std::vector<char> active(rows.size(), 1);
    long long rank = 0;
    while (true) {
        int pr = pick_pivot_row(rows, active);
        if (pr < 0) break;
        ++rank;
        active[static_cast<size_t>(pr)] = 0;
        const auto& pivot = rows[static_cast<size_t>(pr)];
        const int col = pivot.front().first;
        const long long inv = mod_inverse(pivot.front().second, p);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (!active[static_cast<size_t>(r)]) continue;
            const long long* sv = row_value_at(rows[static_cast<size_t>(r)], col);
            if (!sv) continue;
            const long long f = mul_mod(*sv, inv, p);
            SparseRow<long long> out;
            const auto& row = rows[static_cast<size_t>(r)];
            out.reserve(row.size() + pivot.size());
            size_t a = 0, b = 0;
            while (a < row.size() || b < pivot.size()) {
                if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
                    out.push_back(row[a]);
                    ++a;
                } else if (a == row.size() || pivot[b].first < row[a].first) {
                    long long val = (p - mul_mod(f, pivot[b].second, p)) % p;
                    if (val != 0) out.emplace_back(pivot[b].first, val);
                    ++b;
                } else {
                    long long val = (row[a].second - mul_mod(f, pivot[b].second, p) + p) % p;
                    if (val != 0) out.emplace_back(row[a].first, val);
                    ++a;
                    ++b;
                }
            }
            rows[static_cast<size_t>(r)] = std::move(out);
            if (rows[static_cast<size_t>(r)].empty()) active[static_cast<size_t>(r)] = 0;
        }
        {
            auto& clear_me = rows[static_cast<size_t>(pr)];
            SparseRow<long long> empty;
            clear_me.swap(empty);
        }
    }
    return rank;
}

}  // namespace

long long sparse_rank(const SparseIntMatrix& m, const FieldSpec& field) {
    if (field.characteristic != 0)
        return fp_rank(m.row_data, static_cast<long long>(field.characteristic));
    try {
        return integer_rank<long long>(m.row_data);
    } catch (const Int64Overflow&) {
        std::vector<SparseRow<BigInt>> rows;
        rows.reserve(m.row_data.size());
        for (const auto& row : m.row_data) {
            SparseRow<BigInt> big;
            big.reserve(row.size());
            for (const auto& [c, v] : row) big.emplace_back(c, BigInt(v));
            rows.push_back(std::move(big));
        }
        return integer_rank<BigInt>(std::move(rows));
    }
}

}  // namespace toricnp
