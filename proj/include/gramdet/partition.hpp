#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gramdet/bigint.hpp"
#include "gramdet/rational.hpp"

namespace gramdet {

// The ten partition categories: classical s, o, b, h; free (noncrossing)
// versions; half-liberated o*, h*.
enum class category {
    s,
    o,
    b,
    h,
    s_plus,
    o_plus,
    b_plus,
    h_plus,
    o_star,
    h_star,
};

inline const std::vector<category>& all_categories() {
    static const std::vector<category> cats = {
        category::s,      category::o,      category::b,      category::h,      category::s_plus,
        category::o_plus, category::b_plus, category::h_plus, category::o_star, category::h_star,
    };
    return cats;
}

inline std::string category_name(category c) {
    switch (c) {
        case category::s: return "s";
        case category::o: return "o";
        case category::b: return "b";
        case category::h: return "h";
        case category::s_plus: return "s_plus";
        case category::o_plus: return "o_plus";
        case category::b_plus: return "b_plus";
        case category::h_plus: return "h_plus";
        case category::o_star: return "o_star";
        case category::h_star: return "h_star";
    }
    return "?";
}

// Accepts both spellings: "o+" and "o_plus", "h*" and "h_star", etc.
inline std::optional<category> parse_category(std::string_view s) {
    static const std::map<std::string, category, std::less<>> names = {
        {"s", category::s},           {"o", category::o},
        {"b", category::b},           {"h", category::h},
        {"s+", category::s_plus},     {"s_plus", category::s_plus},
        {"o+", category::o_plus},     {"o_plus", category::o_plus},
        {"b+", category::b_plus},     {"b_plus", category::b_plus},
        {"h+", category::h_plus},     {"h_plus", category::h_plus},
        {"o*", category::o_star},     {"o_star", category::o_star},
        {"h*", category::h_star},     {"h_star", category::h_star},
    };
    auto it = names.find(s);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

inline bool is_noncrossing_category(category c) {
    return c == category::s_plus || c == category::o_plus || c == category::b_plus || c == category::h_plus;
}

// Set partition of k points in canonical restricted-growth form: rgs[i] is
// the 0-based block index of point i, block indices appearing in increasing
// order of their first point. Immutable after construction; two partitions
// are equal iff their strings are equal.
class set_partition {
public:
    set_partition() = default;

    explicit set_partition(std::vector<uint8_t> rgs) : rgs_(std::move(rgs)) {
        int max_seen = -1;
        for (size_t i = 0; i < rgs_.size(); ++i) {
            if (rgs_[i] > max_seen + 1) throw std::invalid_argument("set_partition: not restricted-growth");
            if (rgs_[i] == max_seen + 1) ++max_seen;
        }
    }

    // Canonicalizes an arbitrary block labeling by first appearance.
    static set_partition from_assignment(const std::vector<int>& assign) {
        std::map<int, int> relabel;
        std::vector<uint8_t> rgs(assign.size());
        for (size_t i = 0; i < assign.size(); ++i) {
            auto [it, fresh] = relabel.emplace(assign[i], static_cast<int>(relabel.size()));
            (void)fresh;
            rgs[i] = static_cast<uint8_t>(it->second);
        }
        return set_partition(std::move(rgs));
    }

    // blocks given with 1-based points
    static set_partition from_blocks(int k, const std::vector<std::vector<int>>& blocks) {
        std::vector<int> assign(static_cast<size_t>(k), -1);
        for (size_t b = 0; b < blocks.size(); ++b)
            for (int pt : blocks[b]) {
                if (pt < 1 || pt > k) throw std::invalid_argument("set_partition: point out of range");
                if (assign[pt - 1] != -1) throw std::invalid_argument("set_partition: repeated point");
                assign[pt - 1] = static_cast<int>(b);
            }
        for (int a : assign)
            if (a == -1) throw std::invalid_argument("set_partition: uncovered point");
        return from_assignment(assign);
    }

    static set_partition singletons(int k) {
        std::vector<uint8_t> rgs(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) rgs[i] = static_cast<uint8_t>(i);
        return set_partition(std::move(rgs));
    }
    static set_partition one_block(int k) {
        return set_partition(std::vector<uint8_t>(static_cast<size_t>(k), 0));
    }

    int points() const { return static_cast<int>(rgs_.size()); }
    int num_blocks() const {
        int m = -1;
        for (uint8_t b : rgs_) m = std::max<int>(m, b);
        return m + 1;
    }
    int block_of(int i) const { return rgs_[static_cast<size_t>(i)]; }  // 0-based point
    const std::vector<uint8_t>& rgs() const { return rgs_; }

    std::vector<std::vector<int>> blocks() const {  // 1-based points, ascending
        std::vector<std::vector<int>> bl(static_cast<size_t>(num_blocks()));
        for (int i = 0; i < points(); ++i) bl[rgs_[static_cast<size_t>(i)]].push_back(i + 1);
        return bl;
    }

    friend bool operator==(const set_partition& a, const set_partition& b) { return a.rgs_ == b.rgs_; }
    friend bool operator!=(const set_partition& a, const set_partition& b) { return !(a == b); }
    friend bool operator<(const set_partition& a, const set_partition& b) { return a.rgs_ < b.rgs_; }

    // "{1,2}{3,4}", blocks ordered by minimum; "{}" for the empty partition.
    std::string to_string() const {
        if (rgs_.empty()) return "{}";
        std::string s;
        for (const auto& bl : blocks()) {
            s += "{";
            for (size_t i = 0; i < bl.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(bl[i]);
            }
            s += "}";
        }
        return s;
    }

    static set_partition parse(std::string_view text, int k) {
        std::vector<std::vector<int>> blocks;
        size_t i = 0;
        while (i < text.size()) {
            if (text[i] != '{') throw std::invalid_argument("set_partition: expected '{'");
            size_t close = text.find('}', i);
            if (close == std::string_view::npos) throw std::invalid_argument("set_partition: missing '}'");
            std::vector<int> bl;
            size_t j = i + 1;
            while (j < close) {
                size_t end = j;
                while (end < close && text[end] != ',') ++end;
                bl.push_back(std::stoi(std::string(text.substr(j, end - j))));
                j = end + 1;
            }
            if (!bl.empty()) blocks.push_back(std::move(bl));
            i = close + 1;
        }
        return from_blocks(k, blocks);
    }

private:
    std::vector<uint8_t> rgs_;
};

// finest common coarsening (union-find closure of both block structures)
inline set_partition join(const set_partition& p, const set_partition& q) {
    if (p.points() != q.points()) throw std::invalid_argument("join: point count mismatch");
    int k = p.points();
    std::vector<int> parent(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    std::vector<int> first_p(static_cast<size_t>(k), -1), first_q(static_cast<size_t>(k), -1);
    for (int i = 0; i < k; ++i) {
        int bp = p.block_of(i), bq = q.block_of(i);
        if (first_p[bp] < 0) first_p[bp] = i; else unite(i, first_p[bp]);
        if (first_q[bq] < 0) first_q[bq] = i; else unite(i, first_q[bq]);
    }
    std::vector<int> assign(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) assign[i] = find(i);
    return set_partition::from_assignment(assign);
}

// number of blocks of the join, without materializing the partition
inline int join_block_count(const set_partition& p, const set_partition& q) {
    return join(p, q).num_blocks();
}

// coarsest common refinement (blockwise intersections)
inline set_partition meet(const set_partition& p, const set_partition& q) {
    if (p.points() != q.points()) throw std::invalid_argument("meet: point count mismatch");
    int k = p.points();
    std::map<std::pair<int, int>, int> ids;
    std::vector<int> assign(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        auto key = std::make_pair(p.block_of(i), q.block_of(i));
        auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
        assign[i] = it->second;
        (void)fresh;
    }
    return set_partition::from_assignment(assign);
}

// p <= q in refinement order (every block of p inside a block of q)
inline bool refines(const set_partition& p, const set_partition& q) {
    if (p.points() != q.points()) throw std::invalid_argument("refines: point count mismatch");
    int k = p.points();
    std::vector<int> block_target(static_cast<size_t>(p.num_blocks()), -1);
    for (int i = 0; i < k; ++i) {
        int bp = p.block_of(i), bq = q.block_of(i);
        if (block_target[bp] == -1)
            block_target[bp] = bq;
        else if (block_target[bp] != bq)
            return false;
    }
    return true;
}

// Linear noncrossing test: some block straddles a point of another block
// that escapes the straddled gap.
inline bool is_noncrossing(const set_partition& p) {
    auto bls = p.blocks();
    for (const auto& bl : bls) {
        for (size_t t = 0; t + 1 < bl.size(); ++t) {
            int lo = bl[t], hi = bl[t + 1];
            for (int x = lo + 1; x < hi; ++x) {
                const auto& other = bls[static_cast<size_t>(p.block_of(x - 1))];
                if (other.front() < lo || other.back() > hi) return false;
            }
        }
    }
    return true;
}

inline bool is_member(category c, const set_partition& p) {
    auto sizes_are = [&](auto pred) {
        std::vector<int> size(static_cast<size_t>(p.num_blocks()), 0);
        for (int i = 0; i < p.points(); ++i) ++size[static_cast<size_t>(p.block_of(i))];
        for (int s : size)
            if (!pred(s)) return false;
        return true;
    };
    auto blocks_balanced = [&]() {
        // per block, equally many odd and even legs (1-based positions)
        std::vector<int> bal(static_cast<size_t>(p.num_blocks()), 0);
        for (int i = 0; i < p.points(); ++i) bal[static_cast<size_t>(p.block_of(i))] += (i % 2 == 0) ? 1 : -1;
        for (int b : bal)
            if (b != 0) return false;
        return true;
    };
    switch (c) {
        case category::s: return true;
        case category::o: return sizes_are([](int s) { return s == 2; });
        case category::b: return sizes_are([](int s) { return s <= 2; });
        case category::h: return sizes_are([](int s) { return s % 2 == 0; });
        case category::s_plus: return is_noncrossing(p);
        case category::o_plus: return sizes_are([](int s) { return s == 2; }) && is_noncrossing(p);
        case category::b_plus: return sizes_are([](int s) { return s <= 2; }) && is_noncrossing(p);
        case category::h_plus: return sizes_are([](int s) { return s % 2 == 0; }) && is_noncrossing(p);
        case category::o_star: return sizes_are([](int s) { return s == 2; }) && blocks_balanced();
        case category::h_star: return blocks_balanced();
    }
    return false;
}

namespace detail {

// Backtracking over restricted-growth strings in lexicographic order, with
// per-category feasibility pruning. Used for the crossing categories.
inline void enumerate_rgs(category c, int k, const std::function<void(const set_partition&)>& emit) {
    std::vector<uint8_t> rgs(static_cast<size_t>(k));
    std::vector<int> size(static_cast<size_t>(k) + 1, 0);
    std::vector<int> balance(static_cast<size_t>(k) + 1, 0);  // odd legs minus even legs, h*/o*
    std::vector<int> last_point(static_cast<size_t>(k) + 1, -1);

    bool pair_cat = c == category::o || c == category::o_star || c == category::b;
    std::function<void(int, int)> rec = [&](int i, int num_blocks) {
        if (i == k) {
            for (int b = 0; b < num_blocks; ++b) {
                if ((c == category::o || c == category::o_star) && size[b] != 2) return;
                if (c == category::h && size[b] % 2 != 0) return;
                if ((c == category::h_star || c == category::o_star) && balance[b] != 0) return;
            }
            emit(set_partition(std::vector<uint8_t>(rgs.begin(), rgs.end())));
            return;
        }
        int rem = k - i;
        // feasibility: open obligations must fit into the remaining points
        {
            int need = 0;
            for (int b = 0; b < num_blocks; ++b) {
                if ((c == category::o || c == category::o_star) && size[b] == 1) need += 1;
                if (c == category::h && size[b] % 2 != 0) need += 1;
                if (c == category::h_star) need += std::abs(balance[b]);
            }
            if (need > rem) return;
        }
        for (int b = 0; b <= num_blocks; ++b) {
            if (b < num_blocks) {
                if (pair_cat && size[b] >= 2) continue;
                if (c == category::o_star && size[b] == 1) {
                    int prev = last_point[b];
                    if ((prev % 2) == (i % 2)) continue;  // legs must alternate parity
                }
            }
            rgs[static_cast<size_t>(i)] = static_cast<uint8_t>(b);
            ++size[b];
            balance[b] += (i % 2 == 0) ? 1 : -1;
            int prev_last = last_point[b];
            last_point[b] = i;
            rec(i + 1, num_blocks + (b == num_blocks ? 1 : 0));
            last_point[b] = prev_last;
            balance[b] -= (i % 2 == 0) ? 1 : -1;
            --size[b];
        }
    };
    rec(0, 0);
}

// Recursive generator for noncrossing partitions of the line 1..k: the block
// of the least free point is chosen, the gaps it cuts are independent.
// upper_count > 0 activates the epi rules on a circularly cut (r, k) diagram:
// positions 1..upper_count may not share a block and must reach past them.
struct nc_generator {
    int total = 0;
    int upper_count = 0;
    int min_block = 1, max_block = 1 << 20;
    bool even_blocks = false;
    std::function<void(const std::vector<int>&)> emit;  // assignment, 0-based positions

    std::vector<int> assign;
    int next_block_id = 0;

    void run() {
        assign.assign(static_cast<size_t>(total), -1);
        next_block_id = 0;
        std::vector<std::pair<int, int>> segments;
        if (total > 0) segments.emplace_back(0, total);
        process(segments);
    }

private:
    bool size_ok(int s) const {
        if (s < min_block || s > max_block) return false;
        if (even_blocks && s % 2 != 0) return false;
        return true;
    }

    void process(std::vector<std::pair<int, int>>& segments) {
        if (segments.empty()) {
            emit(assign);
            return;
        }
        auto [lo, hi] = segments.back();
        segments.pop_back();
        int id = next_block_id++;
        assign[static_cast<size_t>(lo)] = id;
        extend_block(lo, lo, hi, 1, segments);
        assign[static_cast<size_t>(lo)] = -1;
        --next_block_id;
        segments.emplace_back(lo, hi);
    }

    // block currently {first=..., last}; gaps for elements before `last`
    // are already pushed as segments
    void extend_block(int first, int last, int hi, int bsize,
                      std::vector<std::pair<int, int>>& segments) {
        bool upper_block = first < upper_count;
        bool may_close = size_ok(bsize) && (!upper_block || last >= upper_count);
        if (may_close) {
            size_t pushed = 0;
            if (last + 1 < hi) {
                segments.emplace_back(last + 1, hi);
                pushed = 1;
            }
            process(segments);
            if (pushed) segments.pop_back();
        }
        if (bsize >= max_block) return;
        int start = std::max(last + 1, upper_block ? upper_count : last + 1);
        for (int nxt = start; nxt < hi; ++nxt) {
            size_t pushed = 0;
            if (last + 1 < nxt) {
                segments.emplace_back(last + 1, nxt);
                pushed = 1;
            }
            assign[static_cast<size_t>(nxt)] = assign[static_cast<size_t>(first)];
            extend_block(first, nxt, hi, bsize + 1, segments);
            assign[static_cast<size_t>(nxt)] = -1;
            if (pushed) segments.pop_back();
        }
    }
};

inline void enumerate_noncrossing(category c, int k, const std::function<void(const set_partition&)>& emit) {
    nc_generator gen;
    gen.total = k;
    switch (c) {
        case category::s_plus: break;
        case category::o_plus: gen.min_block = 2, gen.max_block = 2; break;
        case category::b_plus: gen.max_block = 2; break;
        case category::h_plus: gen.even_blocks = true, gen.min_block = 2; break;
        default: throw std::invalid_argument("enumerate_noncrossing: crossing category");
    }
    if (k == 0) {
        emit(set_partition());
        return;
    }
    gen.emit = [&](const std::vector<int>& assign) { emit(set_partition::from_assignment(assign)); };
    gen.run();
}

}  // namespace detail

// All partitions of the category on k points, lexicographic in the
// restricted-growth string. Results are cached; the cache fill is idempotent
// and the returned reference stays valid for the process lifetime.
inline const std::vector<set_partition>& partitions_of(category c, int k) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::vector<set_partition>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(static_cast<int>(c), k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<set_partition> out;
    if (k == 0) {
        out.emplace_back();
    } else if (is_noncrossing_category(c)) {
        detail::enumerate_noncrossing(c, k, [&](const set_partition& p) { out.push_back(p); });
        std::sort(out.begin(), out.end());
    } else {
        detail::enumerate_rgs(c, k, [&](const set_partition& p) { out.push_back(p); });
    }
    return cache.emplace(key, std::move(out)).first->second;
}

inline std::vector<set_partition> enumerate(category c, int k) { return partitions_of(c, k); }

// Mobius function of the interval [p, q] in the full partition lattice,
// by the defining recursion with memoization. The product closed form is a
// test oracle only.
inline long long mobius(const set_partition& p, const set_partition& q) {
    if (!refines(p, q)) throw std::domain_error("mobius: p does not refine q");

    // elements of [p, q]: per q-block, an arbitrary partition of the p-blocks inside
    std::function<long long(const set_partition&, const set_partition&)> mu =
        [&](const set_partition& lo, const set_partition& hi) -> long long {
        static std::mutex mtx;
        static std::map<std::pair<std::vector<uint8_t>, std::vector<uint8_t>>, long long> memo;
        if (lo == hi) return 1;
        {
            std::lock_guard<std::mutex> lock(mtx);
            auto it = memo.find({lo.rgs(), hi.rgs()});
            if (it != memo.end()) return it->second;
        }
        // enumerate tau with lo <= tau < hi: group p-blocks of lo by hi-blocks,
        // take every product of set partitions of the groups
        int k = lo.points();
        std::vector<std::vector<int>> groups(static_cast<size_t>(hi.num_blocks()));
        std::vector<int> rep_seen(static_cast<size_t>(lo.num_blocks()), 0);
        for (int i = 0; i < k; ++i) {
            int bl = lo.block_of(i);
            if (!rep_seen[bl]) {
                rep_seen[bl] = 1;
                groups[static_cast<size_t>(hi.block_of(i))].push_back(bl);
            }
        }
        std::vector<std::vector<set_partition>> group_partitions;
        for (const auto& g : groups) group_partitions.push_back(partitions_of(category::s, static_cast<int>(g.size())));

        long long total = 0;
        std::vector<int> choice(groups.size(), 0);
        for (;;) {
            // assemble tau: p-block b of lo merged per the chosen group partitions
            std::vector<int> block_label(static_cast<size_t>(lo.num_blocks()), -1);
            int label_base = 0;
            for (size_t g = 0; g < groups.size(); ++g) {
                const set_partition& gp = group_partitions[g][static_cast<size_t>(choice[g])];
                for (size_t t = 0; t < groups[g].size(); ++t)
                    block_label[static_cast<size_t>(groups[g][t])] = label_base + gp.block_of(static_cast<int>(t));
                label_base += gp.num_blocks();
            }
            std::vector<int> assign(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) assign[i] = block_label[static_cast<size_t>(lo.block_of(i))];
            set_partition tau = set_partition::from_assignment(assign);
            if (tau != hi) total += mu(lo, tau);

            // next choice vector
            size_t pos = 0;
            while (pos < choice.size()) {
                if (++choice[pos] < static_cast<int>(group_partitions[pos].size())) break;
                choice[pos++] = 0;
            }
            if (pos == choice.size()) break;
        }
        long long result = -total;
        std::lock_guard<std::mutex> lock(mtx);
        memo.emplace(std::make_pair(lo.rgs(), hi.rgs()), result);
        return result;
    };
    return mu(p, q);
}

// #{pi in P(k) : |pi| = r}
inline big_int stirling(category c, int k, int r) {
    if (r < 0 || r > k) throw std::invalid_argument("stirling: r out of range");
    long long count = 0;
    for (const auto& p : partitions_of(c, k))
        if (p.num_blocks() == r) ++count;
    return big_int(count);
}

// Enumerated invariants of Prop-2.2 type: partition count, block-count sum,
// mean, and the balanced exponent a_k = 2 s_k - k b_k; Stirling row attached.
struct invariant_bundle {
    big_int b_k;
    big_int s_k;
    rational m_k;
    big_int a_k;
    std::vector<big_int> stirling;  // index r = 0..k
};

inline invariant_bundle compute_invariant_bundle(category c, int k) {
    invariant_bundle ib;
    ib.stirling.assign(static_cast<size_t>(k) + 1, big_int(0));
    long long b = 0;
    long long s = 0;
    for (const auto& p : partitions_of(c, k)) {
        ++b;
        s += p.num_blocks();
        ib.stirling[static_cast<size_t>(p.num_blocks())] += big_int(1);
    }
    ib.b_k = big_int(b);
    ib.s_k = big_int(s);
    ib.m_k = b == 0 ? rational(0) : rational(big_int(s), big_int(b));
    ib.a_k = big_int(2 * s - static_cast<long long>(k) * b);
    return ib;
}

}  // namespace gramdet
