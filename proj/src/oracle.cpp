#include "zsr/oracle.hpp"

#include "zsr/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

namespace zsr {

namespace {

/// Placement order for the backtracking search.
struct PatternPlan {
    int n = 0;
    std::vector<int> order;             // position -> pattern vertex
    std::vector<std::vector<int>> back; // position -> earlier adjacent positions
    std::vector<int> edges_after;       // edges with an endpoint beyond this position

    explicit PatternPlan(const SimpleGraph& g) : n(g.order())
    {
        std::vector<int> position(n, -1);
        for (const auto& comp : g.components()) {
            std::deque<int> queue{comp.front()};
            position[comp.front()] = static_cast<int>(order.size());
            order.push_back(comp.front());
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int w : g.neighbors(u))
                    if (position[w] < 0) {
                        position[w] = static_cast<int>(order.size());
                        order.push_back(w);
                        queue.push_back(w);
                    }
            }
        }
        back.resize(n);
        for (int i = 0; i < n; ++i)
            for (int w : g.neighbors(order[i]))
                if (position[w] < i)
                    back[i].push_back(position[w]);
        edges_after.assign(n, 0);
        for (int i = n - 2; i >= 0; --i)
            edges_after[i] = edges_after[i + 1] + static_cast<int>(back[i + 1].size());
    }
};

/// Reusable search state over a raw row-major color matrix.
class Searcher {
public:
    Searcher(const PatternPlan& plan, int modulus) : plan_(plan), modulus_(modulus), slot_(plan.n) {}

    bool run(const std::uint8_t* colors, int order)
    {
        if (order < plan_.n)
            return false;
        colors_ = colors;
        order_ = order;
        used_.assign(order, 0);
        if (plan_.n == 0)
            return true;
        return place(0, 0);
    }

    /// Pattern-vertex -> host-vertex map of the last successful run.
    std::vector<int> map() const
    {
        std::vector<int> out(plan_.n);
        for (int i = 0; i < plan_.n; ++i)
            out[plan_.order[i]] = slot_[i];
        return out;
    }

private:
    bool place(int pos, int sum)
    {
        const auto& back = plan_.back[pos];
        for (int h = 0; h < order_; ++h) {
            if (used_[h])
                continue;
            int s = sum;
            const std::uint8_t* row = colors_ + static_cast<std::size_t>(h) * order_;
            for (int j : back)
                s += row[slot_[j]];
            s %= modulus_;
            if (plan_.edges_after[pos] == 0) {
                // Every remaining vertex is edge-free: the sum is final.
                if (s != 0)
                    continue;
                slot_[pos] = h;
                used_[h] = 1;
                fill_remaining(pos + 1);
                return true;
            }
            slot_[pos] = h;
            used_[h] = 1;
            if (place(pos + 1, s))
                return true;
            used_[h] = 0;
        }
        return false;
    }

    void fill_remaining(int pos)
    {
        int h = 0;
        for (; pos < plan_.n; ++pos) {
            while (used_[h])
                ++h;
            slot_[pos] = h;
            used_[h] = 1;
        }
    }

    const PatternPlan& plan_;
    int modulus_;
    const std::uint8_t* colors_ = nullptr;
    int order_ = 0;
    std::vector<int> slot_;
    std::vector<char> used_;
};

__extension__ using u128 = unsigned __int128;
constexpr std::uint64_t no_witness = std::numeric_limits<std::uint64_t>::max();

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp)
{
    u128 r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > std::numeric_limits<std::uint64_t>::max())
            return std::nullopt;
    }
    return static_cast<std::uint64_t>(r);
}

std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t k)
{
    u128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            return std::nullopt;
    }
    return static_cast<std::uint64_t>(r);
}

/// Lexicographic edge enumeration of K_N with counters as base-k digit vectors.
class ColoringSpace {
public:
    ColoringSpace(int order, int modulus, bool symmetry)
        : order_(order), modulus_(modulus), prefix_(symmetry ? std::max(order - 1, 0) : 0)
    {
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v)
                edges_.emplace_back(u, v);
        total_ = checked_pow(modulus, edges_.size()).value_or(no_witness);
    }

    std::size_t edge_count() const { return edges_.size(); }
    std::uint64_t total() const { return total_; }

    std::vector<std::uint8_t> decode(std::uint64_t counter) const
    {
        std::vector<std::uint8_t> d(edges_.size(), 0);
        for (std::size_t i = edges_.size(); i-- > 0;) {
            d[i] = static_cast<std::uint8_t>(counter % modulus_);
            counter /= modulus_;
        }
        return d;
    }

    std::uint64_t encode(const std::vector<std::uint8_t>& d) const
    {
        std::uint64_t c = 0;
        for (auto x : d)
            c = c * modulus_ + x;
        return c;
    }

    /// Smallest canonical counter >= counter, or total() when none.
    std::uint64_t normalize(std::uint64_t counter) const
    {
        if (counter >= total_)
            return total_;
        auto d = decode(counter);
        for (int j = 1; j < prefix_; ++j)
            if (d[j] < d[j - 1]) {
                for (int i = j; i < prefix_; ++i)
                    d[i] = d[j - 1];
                std::fill(d.begin() + prefix_, d.end(), 0);
                break;
            }
        return encode(d);
    }

    /// Advances to the next canonical coloring. Returns the lowest changed digit
    /// index, or -1 at the end of the space.
    int advance(std::vector<std::uint8_t>& d) const
    {
        int j = static_cast<int>(d.size()) - 1;
        while (j >= 0 && d[j] + 1 == modulus_) {
            d[j] = 0;
            --j;
        }
        if (j < 0)
            return -1;
        ++d[j];
        for (int i = j + 1; i < prefix_; ++i)
            d[i] = d[j];
        return j;
    }

    bool prefix_touched(int j) const { return j < prefix_; }

    void write(std::vector<std::uint8_t>& matrix, const std::vector<std::uint8_t>& d, int from) const
    {
        for (std::size_t i = static_cast<std::size_t>(from); i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            matrix[static_cast<std::size_t>(u) * order_ + v] = d[i];
            matrix[static_cast<std::size_t>(v) * order_ + u] = d[i];
        }
    }

    ColoredClique clique(std::uint64_t counter) const
    {
        const auto d = decode(counter);
        ColoredClique k(order_, modulus_);
        for (std::size_t i = 0; i < edges_.size(); ++i)
            k.set_color(edges_[i].first, edges_[i].second, d[i]);
        return k;
    }

private:
    int order_;
    int modulus_;
    int prefix_;
    std::vector<Edge> edges_;
    std::uint64_t total_;
};

struct Shard {
    std::uint64_t lo;
    std::uint64_t hi;
    std::atomic<std::uint64_t> position;
    std::atomic<bool> finished{false};
    std::uint64_t checked = 0;

    Shard(std::uint64_t l, std::uint64_t h) : lo(l), hi(h), position(l) {}
};

void scan_shard(const ColoringSpace& space, const PatternPlan& plan, int order, int modulus, Shard& shard,
                std::atomic<std::uint64_t>& best)
{
    Searcher search(plan, modulus);
    std::uint64_t cur = space.normalize(shard.lo);
    if (cur < shard.hi) {
        auto digits = space.decode(cur);
        std::vector<std::uint8_t> matrix(static_cast<std::size_t>(order) * order, 0);
        space.write(matrix, digits, 0);
        std::uint32_t tick = 0;
        while (cur < shard.hi && cur < best.load(std::memory_order_relaxed)) {
            ++shard.checked;
            if (!search.run(matrix.data(), order)) {
                std::uint64_t seen = best.load();
                while (cur < seen && !best.compare_exchange_weak(seen, cur)) {
                }
                break;
            }
            const int j = space.advance(digits);
            if (j < 0)
                break;
            cur = space.prefix_touched(j) ? space.encode(digits) : cur + 1;
            space.write(matrix, digits, j);
            if (++tick == 4096) {
                tick = 0;
                shard.position.store(cur, std::memory_order_relaxed);
            }
        }
    }
    shard.position.store(shard.hi);
    shard.finished.store(true);
}

} // namespace

std::optional<Embedding> brute_zero_sum(const SimpleGraph& pattern, const ColoredClique& host, int modulus)
{
    if (modulus < 2)
        fail(ErrorKind::InvalidArgument, "modulus must be >= 2");
    const PatternPlan plan(pattern);
    Searcher search(plan, modulus);
    if (!search.run(host.matrix().data(), host.order()))
        return std::nullopt;
    return Embedding(pattern, host, search.map());
}

std::optional<Embedding> brute_zero_sum(const SimpleGraph& pattern, const ColoredClique& host)
{
    return brute_zero_sum(pattern, host, host.modulus());
}

std::optional<std::uint64_t> enumeration_size(int order, int modulus, bool symmetry)
{
    const std::uint64_t edges = static_cast<std::uint64_t>(order) * (order - 1) / 2;
    if (!symmetry || order < 2)
        return checked_pow(modulus, edges);
    const std::uint64_t prefix = order - 1;
    auto sorted = binomial(prefix + modulus - 1, modulus - 1);
    auto rest = checked_pow(modulus, edges - prefix);
    if (!sorted || !rest)
        return std::nullopt;
    u128 r = static_cast<u128>(*sorted) * *rest;
    if (r > std::numeric_limits<std::uint64_t>::max())
        return std::nullopt;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t enumeration_fingerprint(const SimpleGraph& pattern, int order, int modulus)
{
    // FNV-1a over a canonical text rendering.
    std::string text = "g " + std::to_string(pattern.order());
    for (auto [u, v] : pattern.edges())
        text += " " + std::to_string(u) + "-" + std::to_string(v);
    text += " N " + std::to_string(order) + " k " + std::to_string(modulus);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

UnavoidableResult unavoidable(const SimpleGraph& pattern, int order, int modulus, const EnumerationOptions& options,
                              std::uint64_t start_counter)
{
    if (order < 1)
        fail(ErrorKind::InvalidArgument, "clique order must be >= 1");
    if (modulus < 2 || modulus > ColoredClique::max_modulus)
        fail(ErrorKind::InvalidArgument, "modulus outside [2,255]");
    const auto size = enumeration_size(order, modulus, options.symmetry);
    if (!size || *size > options.budget || !checked_pow(modulus, static_cast<std::uint64_t>(order) * (order - 1) / 2))
        fail(ErrorKind::BudgetExceeded, "K_" + std::to_string(order) + " over Z_" + std::to_string(modulus) +
                                            " needs more than " + std::to_string(options.budget) + " colorings");

    const PatternPlan plan(pattern);
    const ColoringSpace space(order, modulus, options.symmetry);
    const std::uint64_t total = space.total();
    const std::uint64_t start = std::min(start_counter, total);
    const unsigned jobs = std::max(1u, options.jobs);

    std::deque<Shard> shards;
    const std::uint64_t span = total - start;
    for (unsigned i = 0; i < jobs; ++i) {
        const std::uint64_t lo = start + static_cast<std::uint64_t>(static_cast<u128>(span) * i / jobs);
        const std::uint64_t hi = start + static_cast<std::uint64_t>(static_cast<u128>(span) * (i + 1) / jobs);
        if (lo < hi)
            shards.emplace_back(lo, hi);
    }

    std::atomic<std::uint64_t> best{no_witness};
    std::mutex mu;
    std::condition_variable cv;
    std::size_t remaining = shards.size();
    std::vector<std::thread> workers;
    for (auto& shard : shards)
        workers.emplace_back([&, &shard = shard] {
            scan_shard(space, plan, order, modulus, shard, best);
            std::lock_guard lock(mu);
            --remaining;
            cv.notify_all();
        });

    const std::uint64_t fingerprint = enumeration_fingerprint(pattern, order, modulus);
    {
        std::unique_lock lock(mu);
        const auto period = std::chrono::duration<double>(options.checkpoint_seconds);
        while (remaining > 0) {
            if (cv.wait_for(lock, period, [&] { return remaining == 0; }))
                break;
            if (options.on_checkpoint) {
                std::uint64_t safe = total;
                for (const auto& s : shards)
                    if (!s.finished.load()) {
                        safe = s.position.load();
                        break;
                    }
                lock.unlock();
                options.on_checkpoint(Checkpoint{safe, fingerprint});
                lock.lock();
            }
        }
    }
    for (auto& w : workers)
        w.join();

    UnavoidableResult result{true, 0, std::nullopt, std::nullopt};
    for (const auto& s : shards)
        result.colorings_checked += s.checked;
    const std::uint64_t found = best.load();
    if (found != no_witness) {
        result.unavoidable = false;
        result.witness = space.clique(found);
        result.witness_counter = found;
    }
    return result;
}

RamseyResult compute_ramsey(const SimpleGraph& pattern, int modulus, int max_order, const EnumerationOptions& options)
{
    if (modulus < 2)
        fail(ErrorKind::InvalidArgument, "modulus must be >= 2");
    if (pattern.edge_count() % static_cast<std::size_t>(modulus) != 0)
        fail(ErrorKind::DivisibilityViolation, std::to_string(modulus) + " does not divide e(G) = " +
                                                   std::to_string(pattern.edge_count()));

    RamseyResult result{pattern, modulus, RamseyResult::Status::NotReached, std::nullopt, std::nullopt, 0, 0};
    const int first = std::max(pattern.order(), 1);

    int begin = first;
    std::uint64_t begin_counter = 0;
    if (options.resume)
        for (int n = first; n <= max_order; ++n)
            if (enumeration_fingerprint(pattern, n, modulus) == options.resume->fingerprint) {
                begin = n;
                begin_counter = options.resume->counter;
                break;
            }

    std::optional<ColoredClique> previous_witness;
    for (int n = begin; n <= max_order; ++n) {
        result.last_order = n;
        const std::uint64_t start = n == begin ? begin_counter : 0;
        if (options.on_checkpoint)
            options.on_checkpoint(Checkpoint{start, enumeration_fingerprint(pattern, n, modulus)});
        UnavoidableResult r;
        try {
            r = unavoidable(pattern, n, modulus, options, start);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded)
                throw;
            result.status = RamseyResult::Status::ExceedsBudget;
            return result;
        }
        result.colorings_checked += r.colorings_checked;
        if (!r.unavoidable) {
            previous_witness = std::move(r.witness);
            continue;
        }
        result.status = RamseyResult::Status::Found;
        result.value = n;
        if (previous_witness) {
            result.witness_coloring = std::move(previous_witness);
        } else if (n == first) {
            // K_{n-1} is too small to hold any copy.
            if (n > 1)
                result.witness_coloring = ColoredClique(n - 1, modulus);
        } else {
            // Resumed past order n-1; recover its witness.
            EnumerationOptions quiet = options;
            quiet.on_checkpoint = nullptr;
            auto again = unavoidable(pattern, n - 1, modulus, quiet);
            result.colorings_checked += again.colorings_checked;
            result.witness_coloring = std::move(again.witness);
        }
        return result;
    }
    return result;
}

int exact_z2(const SimpleGraph& g)
{
    if (g.edge_count() % 2 != 0)
        fail(ErrorKind::DivisibilityViolation, "e(G) is odd");
    const int n = g.order();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            fail(ErrorKind::InvalidArgument, "isolated vertex " + std::to_string(v));

    auto choose2 = [](long long m) { return m * (m - 1) / 2; };
    if (static_cast<long long>(g.edge_count()) == choose2(n) && (n % 4 == 0 || n % 4 == 1))
        return n + 2;

    const auto comps = g.components();
    if (comps.size() == 2) {
        const auto a = static_cast<long long>(comps[0].size());
        const auto b = static_cast<long long>(comps[1].size());
        const bool two_cliques = a >= 2 && b >= 2 && static_cast<long long>(g.edge_count()) == choose2(a) + choose2(b);
        if (two_cliques && (choose2(a) + choose2(b)) % 4 == 0)
            return n + 1;
    }
    bool odd = true;
    for (int v = 0; v < n; ++v)
        odd = odd && g.degree(v) % 2 == 1;
    return odd ? n + 1 : n;
}

int exact_z3(const Forest& f)
{
    if (f.edge_count() % 3 != 0)
        fail(ErrorKind::DivisibilityViolation, "3 does not divide e(F)");
    const int n = f.order();
    if (n == 0)
        fail(ErrorKind::InvalidArgument, "empty forest");

    bool one_mod_three_regular = true;
    bool no_multiple_of_three = true;
    int zero_mod_three = 0;
    bool rest_one_mod_three = true;
    for (int v = 0; v < n; ++v) {
        const int r = f.degree(v) % 3;
        one_mod_three_regular = one_mod_three_regular && r == 1;
        no_multiple_of_three = no_multiple_of_three && r != 0;
        if (r == 0)
            ++zero_mod_three;
        else if (r != 1)
            rest_one_mod_three = false;
    }
    bool star = false;
    for (int v = 0; v < n; ++v)
        star = star || f.degree(v) == n - 1;
    star = star && f.graph().components().size() == 1;

    if (one_mod_three_regular || star)
        return n + 2;
    if (no_multiple_of_three || (zero_mod_three == 1 && rest_one_mod_three))
        return n + 1;
    return n;
}

} // namespace zsr
