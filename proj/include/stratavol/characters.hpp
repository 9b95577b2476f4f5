#pragma once

#include "stratavol/exact_arith.hpp"
#include "stratavol/partitions.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace stratavol {

/// (irreducible label, cycle type) of equal size.
struct CharacterKey {
    IntPartition lambda;
    IntPartition rho;

    friend auto operator<=>(const CharacterKey&, const CharacterKey&) = default;
    friend bool operator==(const CharacterKey&, const CharacterKey&) = default;
};

/// Memo table of symmetric group characters, grouped by degree, optionally persisted
/// as one JSON file per degree. Reads are shared; inserts are exclusive and idempotent.
class CharTableCache {
public:
    static constexpr int kFormatVersion = 1;

    static CharTableCache& global();

    std::optional<BigInt> find(const CharacterKey& key);
    void insert(const CharacterKey& key, const BigInt& value);

    /// Enables persistence under `dir`. Degree files are loaded lazily on first use.
    void attach_directory(std::filesystem::path dir);
    void detach_directory();
    std::optional<std::filesystem::path> directory() const;

    /// Writes every degree that gained entries since it was loaded. Returns files written.
    int flush();

    std::size_t size() const;
    void clear();

    static std::filesystem::path file_for_degree(const std::filesystem::path& dir, int d);

private:
    struct KeyHash {
        std::size_t operator()(const CharacterKey& k) const noexcept;
    };
    using DegreeTable = std::unordered_map<CharacterKey, BigInt, KeyHash>;

    void ensure_loaded(int d);
    bool load_degree(int d, DegreeTable& into) const;

    mutable std::shared_mutex mutex_;
    std::map<int, DegreeTable> by_degree_;
    std::set<int> loaded_;
    std::set<int> dirty_;
    std::optional<std::filesystem::path> dir_;
};

/// Default cache directory: $STRATAVOL_CACHE, else $XDG_CACHE_HOME/stratavol, else ~/.cache/stratavol.
std::filesystem::path default_cache_directory();

/// chi^lambda(rho) by the Murnaghan-Nakayama rule (memoized). Throws DomainError if |lambda| != |rho|.
BigInt character(const IntPartition& lambda, const IntPartition& rho);
/// Hook length formula.
BigInt dimension(const IntPartition& lambda);
/// Size of the class of one m-cycle and d-m fixed points in S(d); zero when m > d.
BigInt m_cycle_class_size(int d, int m);
/// Size of the conjugacy class with the given cycle type.
BigInt class_size(const IntPartition& cycle_type);
/// f_m(lambda) = #C chi^lambda(C) / dim lambda for C the m-cycle class in S(|lambda|); 0 when m > |lambda|.
Rational central_char_f(int m, const IntPartition& lambda);

}  // namespace stratavol
