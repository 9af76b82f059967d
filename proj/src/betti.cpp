#include "toricnp/betti.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "toricnp/canon.hpp"
#include "toricnp/homology.hpp"

namespace toricnp {

std::optional<std::vector<int>> BettiMemo::lookup(const std::string& key, int i_max) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end() || static_cast<int>(it->second.size()) < i_max + 1) return std::nullopt;
    return std::vector<int>(it->second.begin(), it->second.begin() + i_max + 1);
}

void BettiMemo::store(const std::string& key, const std::vector<int>& dims) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = map_[key];
    if (slot.size() < dims.size()) slot = dims;
}

size_t BettiMemo::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

long long BettiTable::entry(int i, int j) const {
    if (i < 0 || j < 0 || i > i_max || j > j_max) return 0;
    return entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

long long quotient_betti(const BettiTable& t, int i, int j) {
    if (i == 0) return j == 0 ? 1 : 0;
    return t.entry(i - 1, j);
}

BettiEngine::BettiEngine(BipartiteGraph g, FieldSpec field, BettiOptions opt,
                         std::shared_ptr<BettiMemo> memo)
    : g_(std::move(g)), field_(field), opt_(opt), memo_(std::move(memo)) {
    if (opt_.threads < 1) throw std::invalid_argument("thread count must be >= 1");
    if (!memo_) memo_ = std::make_shared<BettiMemo>();
}

std::vector<int> BettiEngine::alpha_dims(const Multidegree& alpha, int i_max) {
    std::string key = fiber_memo_key(g_, alpha);
    key += '#';
    key += std::to_string(field_.characteristic);
    if (auto hit = memo_->lookup(key, i_max)) return *hit;
    std::vector<int> dims;
    try {
        dims = reduced_homology_dims(divisor_complex(g_, alpha), field_, i_max, opt_.face_cap);
    } catch (const ResourceLimitError& e) {
        throw ResourceLimitError(std::string(e.what()) + " at multidegree " +
                                 format_multidegree(g_, alpha));
    }
    memo_->store(key, dims);
    return dims;
}

std::vector<long long> BettiEngine::graded_row(int j, int i_max) {
    if (j < 0 || i_max < 0) throw std::invalid_argument("window bounds must be >= 0");
    std::vector<long long> row(static_cast<size_t>(i_max) + 1, 0);
    if (j < 1 || g_.edge_count() == 0) return row;

    const std::vector<Multidegree> alphas = relevant_multidegrees(g_, j);
    std::vector<std::vector<int>> per_alpha(alphas.size());

    const int workers = std::min(
        opt_.threads, static_cast<int>(std::max<size_t>(alphas.size(), size_t{1})));
    if (workers <= 1) {
        for (size_t t = 0; t < alphas.size(); ++t) per_alpha[t] = alpha_dims(alphas[t], i_max);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w]() {
                try {
                    for (size_t t = static_cast<size_t>(w); t < alphas.size();
                         t += static_cast<size_t>(workers))
                        per_alpha[t] = alpha_dims(alphas[t], i_max);
                } catch (...) {
                    errors[static_cast<size_t>(w)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    // Deterministic accumulation in alpha order, independent of scheduling.
    for (const auto& dims : per_alpha)
        for (int i = 0; i <= i_max; ++i) row[static_cast<size_t>(i)] += dims[static_cast<size_t>(i)];
    return row;
}

long long BettiEngine::graded(int i, int j) { return graded_row(j, i)[static_cast<size_t>(i)]; }

BettiTable BettiEngine::table(int i_max, int j_max) {
    if (i_max < 0 || j_max < 0) throw std::invalid_argument("window bounds must be >= 0");
    BettiTable t;
    t.i_max = i_max;
    t.j_max = j_max;
    t.field = field_;
    t.entries.assign(static_cast<size_t>(i_max) + 1,
                     std::vector<long long>(static_cast<size_t>(j_max) + 1, 0));

    // Entries with j < i + 2 vanish (I_G is generated in degrees >= 2), so
    // each column j only needs homology indices up to j - 2.
    for (int j = 2; j <= j_max; ++j) {
        const int top = std::min(i_max, j - 2);
        if (top < 0) continue;
        const std::vector<long long> row = graded_row(j, top);
        for (int i = 0; i <= top; ++i)
            t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = row[static_cast<size_t>(i)];
    }

    for (int i = 0; i <= i_max; ++i)
        for (int j = 0; j <= j_max; ++j)
            if (t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                if (!t.window_limited_regularity || j - i > *t.window_limited_regularity)
                    t.window_limited_regularity = j - i;
                if (!t.window_limited_pd || i > *t.window_limited_pd)
                    t.window_limited_pd = i;
            }

    // Completeness: a row r (= j - i) or column i of the infinite table is
    // fully visible when the window covers every entry theory allows to be
    // nonzero — pd(I_G) <= |E| - |V1| + c - 1 (Cohen-Macaulay height) and
    // row bound reg(S/I_G) <= min side, i.e. r <= min side + 1 for I_G.
    const BipartiteGraph support = degree_k_subgraph(g_, 1);
    t.row_complete.assign(static_cast<size_t>(j_max) + 1, true);
    t.col_complete.assign(static_cast<size_t>(i_max) + 1, true);
    if (support.edge_count() > 0) {
        const long long pd_bound = support.edge_count() - support.vertex_count() +
                                   component_count(support) - 1;
        const int reg_bound = std::min(support.x_count(), support.y_count()) + 1;
        for (int r = 0; r <= j_max; ++r)
            t.row_complete[static_cast<size_t>(r)] =
                r > reg_bound || (i_max >= pd_bound && j_max >= pd_bound + r);
        for (int i = 0; i <= i_max; ++i)
            t.col_complete[static_cast<size_t>(i)] = i > pd_bound || j_max >= i + reg_bound;
    }
    return t;
}

long long betti_graded(const BipartiteGraph& g, int i, int j, FieldSpec field) {
    return BettiEngine(g, field).graded(i, j);
}

BettiTable betti_table(const BipartiteGraph& g, int i_max, int j_max, FieldSpec field,
                       BettiOptions opt) {
    return BettiEngine(g, field, opt).table(i_max, j_max);
}

}  // namespace toricnp
