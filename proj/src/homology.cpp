#include "toricnp/homology.hpp"

#include <algorithm>
#include <bit>

#include "toricnp/rank.hpp"

namespace toricnp {

namespace {

// C(n, k), saturating at a value safely above any usable face cap.
uint64_t binom_clamped(int n, int k) {
    constexpr uint64_t kHuge = uint64_t{1} << 62;
    if (k < 0 || k > n) return 0;
    uint64_t r = 1;
    for (int t = 1; t <= k; ++t) {
        if (r > kHuge / static_cast<uint64_t>(n - k + t)) return kHuge;
        r = r * static_cast<uint64_t>(n - k + t) / static_cast<uint64_t>(t);
    }
    return r;
}

long long facet_component_count(const std::vector<uint64_t>& facets) {
    std::vector<size_t> parent(facets.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (size_t i = 0; i < facets.size(); ++i)
        for (size_t t = i + 1; t < facets.size(); ++t)
            if (facets[i] & facets[t]) parent[find(i)] = find(t);
    long long comps = 0;
    for (size_t i = 0; i < parent.size(); ++i)
        if (find(i) == i) ++comps;
    return comps;
}

void collect_subsets(const std::vector<int>& bits, int max_size,
                     std::vector<std::vector<uint64_t>>& faces) {
    // Emits every nonempty subset of `bits` with at most max_size elements.
    std::vector<int> chosen;
    auto rec = [&](auto&& self, size_t from, uint64_t mask) -> void {
        if (mask != 0) faces[chosen.size() - 1].push_back(mask);
        if (static_cast<int>(chosen.size()) == max_size) return;
        for (size_t t = from; t < bits.size(); ++t) {
            chosen.push_back(bits[t]);
            self(self, t + 1, mask | (uint64_t{1} << bits[t]));
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

std::vector<int> reduced_homology_dims(const DivisorComplex& complex, const FieldSpec& field,
                                       int i_max, uint64_t face_cap) {
    if (i_max < 0) throw std::invalid_argument("i_max must be >= 0");
    std::vector<int> dims(static_cast<size_t>(i_max) + 1, 0);
    const auto& facets = complex.facets;
    if (facets.empty() || facets.size() == 1) return dims;  // void or a simplex
    {
        uint64_t common = ~uint64_t{0};
        for (uint64_t f : facets) common &= f;
        if (common != 0) return dims;  // cone: contractible
    }
    if (i_max == 0) {
        dims[0] = static_cast<int>(facet_component_count(facets) - 1);
        return dims;
    }

    const int max_card = i_max + 2;  // faces up to dimension i_max + 1
    {
        uint64_t predicted = 0;
        for (uint64_t f : facets) {
            const int pc = std::popcount(f);
            for (int k = 1; k <= std::min(pc, max_card); ++k) {
                predicted += binom_clamped(pc, k);
                if (predicted > face_cap)
                    throw ResourceLimitError("predicted face count exceeds the cap of " +
                                             std::to_string(face_cap) + " faces");
            }
        }
    }

    std::vector<std::vector<uint64_t>> faces(static_cast<size_t>(max_card));
    for (uint64_t f : facets) {
        std::vector<int> bits;
        uint64_t row = f;
        while (row) {
            bits.push_back(std::countr_zero(row));
            row &= row - 1;
        }
        collect_subsets(bits, max_card, faces);
    }
    for (auto& level : faces) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }

    // rk[d] = rank of d_d; d_0 is the augmentation map.
    std::vector<long long> rk(static_cast<size_t>(max_card) + 1, 0);
    rk[0] = faces[0].empty() ? 0 : 1;
    for (int d = 1; d < max_card; ++d) {
        const auto& rows = faces[static_cast<size_t>(d)];
        const auto& cols = faces[static_cast<size_t>(d - 1)];
        if (rows.empty()) continue;
        SparseIntMatrix mat;
        mat.rows = static_cast<int>(rows.size());
        mat.cols = static_cast<int>(cols.size());
        mat.row_data.resize(rows.size());
        for (size_t r = 0; r < rows.size(); ++r) {
            uint64_t mask = rows[r];
            auto& entries = mat.row_data[r];
            int t = 0;
            uint64_t rest = mask;
            while (rest) {
                const uint64_t bit = rest & (0 - rest);
                rest &= rest - 1;
                const uint64_t sub = mask ^ bit;
                const auto it = std::lower_bound(cols.begin(), cols.end(), sub);
                entries.emplace_back(static_cast<int>(it - cols.begin()), (t % 2 == 0) ? 1 : -1);
                ++t;
            }
            std::sort(entries.begin(), entries.end());
        }
        rk[static_cast<size_t>(d)] = sparse_rank(mat, field);
    }

    for (int i = 0; i <= i_max; ++i) {
        const long long fi = static_cast<long long>(faces[static_cast<size_t>(i)].size());
        dims[static_cast<size_t>(i)] = static_cast<int>(fi - rk[static_cast<size_t>(i)] -
                                                        rk[static_cast<size_t>(i) + 1]);
    }
    return dims;
}

}  // namespace toricnp
