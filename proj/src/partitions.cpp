#include "stratavol/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace stratavol {

// ---- IntPartition ---------------------------------------------------------

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw DomainError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int IntPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

IntPartition IntPartition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty()) return {};
    conj.assign(parts_.front(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    IntPartition r;
    r.parts_ = std::move(conj);
    return r;
}

int IntPartition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

BigInt IntPartition::multiplicity_factorial() const {
    BigInt r = 1;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        r *= factorial(j - i);
        i = j;
    }
    return r;
}

std::string IntPartition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::size_t IntPartitionHash::operator()(const IntPartition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p.parts()) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& cur,
                    std::vector<IntPartition>& out) {
    if (remaining == 0) {
        if (parts_left <= 0) out.emplace_back(cur);
        return;
    }
    if (parts_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // with a fixed length, the remaining parts must still fit under p
        if (parts_left > 0 && static_cast<long>(p) * parts_left < remaining) break;
        cur.push_back(p);
        partitions_rec(remaining - p, p, parts_left > 0 ? parts_left - 1 : parts_left, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<IntPartition> enum_int_partitions(int d) {
    if (d < 0) throw DomainError("enum_int_partitions: negative size");
    std::vector<IntPartition> out;
    std::vector<int> cur;
    partitions_rec(d, d, -1, cur, out);
    return out;
}

std::vector<IntPartition> enum_int_partitions(int d, int length) {
    if (d < 0 || length < 0) throw DomainError("enum_int_partitions: negative argument");
    std::vector<IntPartition> out;
    if (length == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    if (length > d) return out;
    std::vector<int> cur;
    partitions_rec(d, d, length, cur, out);
    return out;
}

std::vector<IntPartition> enum_partitions_of_weight(int w) {
    if (w < 1) throw DomainError("enum_partitions_of_weight: weight must be positive");
    std::vector<IntPartition> out;
    for (int len = 1; 2 * len <= w; ++len) {
        auto level = enum_int_partitions(w - len, len);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// ---- SetPartition ---------------------------------------------------------

SetPartition::SetPartition(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 0) throw DomainError("negative ground set size");
    std::vector<int> labels(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw DomainError("empty block");
        for (int e : blocks[b]) {
            if (e < 0 || e >= n) throw DomainError("block element out of range");
            if (labels[e] != -1) throw DomainError("blocks are not disjoint");
            labels[e] = static_cast<int>(b);
        }
    }
    for (int l : labels)
        if (l == -1) throw DomainError("blocks do not cover the ground set");
    *this = from_labels(labels);
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
    SetPartition p;
    p.rgs_.resize(labels.size());
    std::vector<std::pair<int, int>> seen;  // (label, canonical id)
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](auto& pr) { return pr.first == labels[i]; });
        if (it == seen.end()) {
            seen.emplace_back(labels[i], static_cast<int>(seen.size()));
            p.rgs_[i] = seen.back().second;
        } else {
            p.rgs_[i] = it->second;
        }
    }
    p.blocks_ = static_cast<int>(seen.size());
    return p;
}

SetPartition SetPartition::discrete(int n) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
}

SetPartition SetPartition::one_block(int n) { return from_labels(std::vector<int>(n, 0)); }

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (int i = 0; i < ground_size(); ++i) out[rgs_[i]].push_back(i);
    return out;
}

std::vector<std::uint32_t> SetPartition::block_masks() const {
    if (ground_size() > 32) throw ResourceError("block masks need a ground set of at most 32");
    std::vector<std::uint32_t> out(blocks_, 0);
    for (int i = 0; i < ground_size(); ++i) out[rgs_[i]] |= (1u << i);
    return out;
}

std::vector<int> SetPartition::block_sizes() const {
    std::vector<int> out(blocks_, 0);
    for (int b : rgs_) ++out[b];
    return out;
}

std::string SetPartition::to_string() const {
    std::string s = "{";
    auto bl = blocks();
    for (std::size_t b = 0; b < bl.size(); ++b) {
        if (b) s += ",";
        s += "{";
        for (std::size_t i = 0; i < bl[b].size(); ++i) {
            if (i) s += ",";
            s += std::to_string(bl[b][i] + 1);
        }
        s += "}";
    }
    return s + "}";
}

namespace {

// Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
struct RgsWalker {
    int n;
    int k;  // exact block count, or -1
    const std::function<void(const std::vector<int>&, int)>& visit;
    std::vector<int> a;

    void run(int i, int used) {
        if (i == n) {
            if (k < 0 || used == k) visit(a, used);
            return;
        }
        const int limit = k < 0 ? used : std::min(used, k - 1);
        for (int v = 0; v <= limit; ++v) {
            const int now_used = std::max(used, v + 1);
            if (k > 0 && k - now_used > n - i - 1) continue;
            a[i] = v;
            run(i + 1, now_used);
        }
    }
};

}  // namespace

void for_each_set_partition(int n, int k, int cap,
                            const std::function<void(const std::vector<int>&, int)>& visit) {
    if (n < 0) throw DomainError("negative ground set size");
    if (n > cap)
        throw ResourceError("set partitions of " + std::to_string(n) + " elements exceed the cap " +
                            std::to_string(cap));
    if (n == 0) {
        if (k <= 0) visit({}, 0);
        return;
    }
    if (k == 0 || k > n) return;
    RgsWalker walker{n, k, visit, std::vector<int>(n, 0)};
    walker.run(1, 1);
}

std::vector<SetPartition> enum_set_partitions(int n, int cap) {
    if (n < 1) throw DomainError("enum_set_partitions: n must be positive");
    std::vector<SetPartition> out;
    for_each_set_partition(n, -1, cap, [&](const std::vector<int>& labels, int) {
        out.push_back(SetPartition::from_labels(labels));
    });
    return out;
}

std::vector<SetPartition> enum_set_partitions(int n, int k, int cap) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, k, cap, [&](const std::vector<int>& labels, int) {
        out.push_back(SetPartition::from_labels(labels));
    });
    return out;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void require_same_ground(const SetPartition& a, const SetPartition& b) {
    if (a.ground_size() != b.ground_size())
        throw DomainError("set partitions over different ground sets (" + std::to_string(a.ground_size()) +
                          " vs " + std::to_string(b.ground_size()) + ")");
}

}  // namespace

SetPartition meet(const SetPartition& a, const SetPartition& b) {
    require_same_ground(a, b);
    const int n = a.ground_size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> first_a(a.block_count(), -1), first_b(b.block_count(), -1);
    for (int i = 0; i < n; ++i) {
        for (auto [p, first] : {std::pair{&a, &first_a}, std::pair{&b, &first_b}}) {
            int& f = (*first)[p->block_of(i)];
            if (f < 0) {
                f = i;
            } else {
                parent[find_root(parent, i)] = find_root(parent, f);
            }
        }
    }
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = find_root(parent, i);
    return SetPartition::from_labels(labels);
}

bool is_transversal(const SetPartition& a, const SetPartition& b) {
    const SetPartition m = meet(a, b);
    return a.block_count() + b.block_count() - m.block_count() == a.ground_size();
}

bool is_complementary(const SetPartition& a, const SetPartition& rho) {
    require_same_ground(a, rho);
    const int n = a.ground_size();
    if (a.block_count() != n - rho.block_count() + 1) return false;
    return meet(a, rho).block_count() == 1;
}

std::vector<SetPartition> enum_complementary(const SetPartition& rho, int cap) {
    const int n = rho.ground_size();
    if (n > cap)
        throw ResourceError("complementary enumeration over " + std::to_string(n) + " elements exceeds the cap " +
                            std::to_string(cap));
    std::vector<SetPartition> out;
    const int k = n - rho.block_count() + 1;
    std::vector<int> parent(n);
    for_each_set_partition(n, k, cap, [&](const std::vector<int>& labels, int) {
        // union-find directly on the labels; cheaper than materialising the meet
        std::iota(parent.begin(), parent.end(), 0);
        int components = n;
        auto join = [&](int x, int y) {
            int rx = find_root(parent, x), ry = find_root(parent, y);
            if (rx != ry) {
                parent[rx] = ry;
                --components;
            }
        };
        std::vector<int> first_a(k, -1), first_r(rho.block_count(), -1);
        for (int i = 0; i < n; ++i) {
            int& fa = first_a[labels[i]];
            if (fa < 0) fa = i; else join(i, fa);
            int& fr = first_r[rho.block_of(i)];
            if (fr < 0) fr = i; else join(i, fr);
        }
        if (components == 1) out.push_back(SetPartition::from_labels(labels));
    });
    return out;
}

BigInt mobius_coeff(int l) {
    if (l < 1) throw DomainError("mobius_coeff: block count must be positive");
    BigInt r = factorial(l - 1);
    return l % 2 == 1 ? r : BigInt(-r);
}

}  // namespace stratavol
