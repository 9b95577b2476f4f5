#pragma once

#include "stratavol/errors.hpp"
#include "stratavol/exact_arith.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace stratavol {

/// Integer partition: weakly decreasing positive parts. The empty partition is allowed.
class IntPartition {
public:
    IntPartition() = default;
    /// Sorts the parts descending; throws DomainError on a nonpositive part.
    explicit IntPartition(std::vector<int> parts);
    IntPartition(std::initializer_list<int> parts) : IntPartition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  ///< |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    IntPartition conjugate() const;
    /// multiplicity(k) = number of parts equal to k.
    int multiplicity(int k) const;
    /// prod_k (multiplicity of k)!
    BigInt multiplicity_factorial() const;

    /// "(3,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend auto operator<=>(const IntPartition&, const IntPartition&) = default;
    friend bool operator==(const IntPartition&, const IntPartition&) = default;

private:
    std::vector<int> parts_;
};

struct IntPartitionHash {
    std::size_t operator()(const IntPartition& p) const noexcept;
};

/// Partitions of d in reverse lexicographic order, (d) first.
std::vector<IntPartition> enum_int_partitions(int d);
/// Partitions of d with exactly `length` parts, reverse lexicographic.
std::vector<IntPartition> enum_int_partitions(int d, int length);
/// All lambda with |lambda| + l(lambda) = w, ordered by length then reverse lexicographic.
std::vector<IntPartition> enum_partitions_of_weight(int w);

/// Partition of the ground set {0, ..., n-1} into nonempty blocks.
/// Stored as a restricted-growth string: block ids numbered by first occurrence,
/// so blocks are ordered by their minimum element.
class SetPartition {
public:
    SetPartition() = default;
    /// Throws DomainError unless the blocks are disjoint, nonempty and cover {0..n-1}.
    SetPartition(int n, const std::vector<std::vector<int>>& blocks);
    static SetPartition from_labels(const std::vector<int>& labels);
    static SetPartition discrete(int n);
    static SetPartition one_block(int n);

    int ground_size() const { return static_cast<int>(rgs_.size()); }
    int block_count() const { return blocks_; }
    int block_of(int element) const { return rgs_[element]; }
    const std::vector<int>& rgs() const { return rgs_; }
    std::vector<std::vector<int>> blocks() const;
    /// Bitmask of each block (ground set <= 32).
    std::vector<std::uint32_t> block_masks() const;
    std::vector<int> block_sizes() const;

    /// "{{1,3},{2}}" using 1-based elements.
    std::string to_string() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.rgs_ == b.rgs_; }
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.rgs_ <=> b.rgs_; }

private:
    std::vector<int> rgs_;
    int blocks_ = 0;
};

inline constexpr int kDefaultSetPartitionCap = 12;

/// All Bell(n) set partitions in restricted-growth-string lexicographic order.
std::vector<SetPartition> enum_set_partitions(int n, int cap = kDefaultSetPartitionCap);
/// Set partitions of {0..n-1} with exactly k blocks.
std::vector<SetPartition> enum_set_partitions(int n, int k, int cap);

/// Calls `visit(labels, block_count)` for every restricted-growth string of length n,
/// optionally restricted to exactly `k` blocks (k < 0 means any). No allocation per item.
void for_each_set_partition(int n, int k, int cap,
                            const std::function<void(const std::vector<int>&, int)>& visit);

/// The finest common coarsening: connected components of "same block in a or in b".
SetPartition meet(const SetPartition& a, const SetPartition& b);
/// l(a) + l(b) - l(meet(a,b)) == n.
bool is_transversal(const SetPartition& a, const SetPartition& b);
/// Transversal and meet(a, rho) is the one-block partition.
bool is_complementary(const SetPartition& a, const SetPartition& rho);
/// All alpha complementary to rho: candidates with n - l(rho) + 1 blocks, filtered by the meet.
std::vector<SetPartition> enum_complementary(const SetPartition& rho, int cap = kDefaultSetPartitionCap);

/// Moebius(one block, alpha) = (-1)^{l-1} (l-1)! for l = l(alpha).
BigInt mobius_coeff(int l);

/// Connected part of a multiplicative family over subsets of {0..s-1}:
///   sum_{alpha in Pi_s} (-1)^{l-1} (l-1)! prod_k disconnected(alpha_k),
/// with blocks passed as bitmasks. T needs +=, T * T and T * Rational.
template <class T, class F>
T connected_part(int s, const T& zero, F&& disconnected, int cap = kDefaultSetPartitionCap) {
    T total = zero;
    for_each_set_partition(s, -1, cap, [&](const std::vector<int>& labels, int blocks) {
        std::vector<std::uint32_t> masks(blocks, 0);
        for (int i = 0; i < s; ++i) masks[labels[i]] |= (1u << i);
        T term = disconnected(masks[0]);
        for (int b = 1; b < blocks; ++b) term = term * disconnected(masks[b]);
        total += term * Rational(mobius_coeff(blocks));
    });
    return total;
}

}  // namespace stratavol
