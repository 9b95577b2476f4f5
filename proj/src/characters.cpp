#include "stratavol/characters.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>

namespace stratavol {

namespace fs = std::filesystem;

// ---- cache ----------------------------------------------------------------

std::size_t CharTableCache::KeyHash::operator()(const CharacterKey& k) const noexcept {
    IntPartitionHash h;
    return h(k.lambda) * 1000003u ^ h(k.rho);
}

CharTableCache& CharTableCache::global() {
    static CharTableCache cache;
    return cache;
}

fs::path CharTableCache::file_for_degree(const fs::path& dir, int d) {
    return dir / ("chartable-d" + std::to_string(d) + ".json");
}

void CharTableCache::ensure_loaded(int d) {
    {
        std::shared_lock lock(mutex_);
        if (!dir_ || loaded_.count(d)) return;
    }
    std::unique_lock lock(mutex_);
    if (!dir_ || loaded_.count(d)) return;
    DegreeTable from_disk;
    if (load_degree(d, from_disk)) {
        auto& table = by_degree_[d];
        for (auto& [k, v] : from_disk) table.emplace(k, std::move(v));
    }
    loaded_.insert(d);
}

bool CharTableCache::load_degree(int d, DegreeTable& into) const {
    const fs::path file = file_for_degree(*dir_, d);
    std::ifstream in(file);
    if (!in) return false;
    try {
        const auto doc = nlohmann::json::parse(in);
        if (doc.at("format") != "stratavol-chartable" || doc.at("version") != kFormatVersion ||
            doc.at("degree") != d)
            return false;
        for (const auto& e : doc.at("entries")) {
            IntPartition lambda(e.at(0).get<std::vector<int>>());
            IntPartition rho(e.at(1).get<std::vector<int>>());
            if (lambda.size() != d || rho.size() != d) return false;
            into.emplace(CharacterKey{std::move(lambda), std::move(rho)}, BigInt(e.at(2).get<std::string>()));
        }
        return true;
    } catch (const std::exception&) {
        // corrupt files are ignored; flush() rewrites them
        into.clear();
        return false;
    }
}

std::optional<BigInt> CharTableCache::find(const CharacterKey& key) {
    const int d = key.lambda.size();
    ensure_loaded(d);
    std::shared_lock lock(mutex_);
    auto dt = by_degree_.find(d);
    if (dt == by_degree_.end()) return std::nullopt;
    auto it = dt->second.find(key);
    if (it == dt->second.end()) return std::nullopt;
    return it->second;
}

void CharTableCache::insert(const CharacterKey& key, const BigInt& value) {
    const int d = key.lambda.size();
    ensure_loaded(d);
    std::unique_lock lock(mutex_);
    if (by_degree_[d].emplace(key, value).second) dirty_.insert(d);
}

void CharTableCache::attach_directory(fs::path dir) {
    std::unique_lock lock(mutex_);
    dir_ = std::move(dir);
    loaded_.clear();
    // entries computed before attaching are worth persisting too
    for (const auto& [d, table] : by_degree_)
        if (!table.empty()) dirty_.insert(d);
}

void CharTableCache::detach_directory() {
    std::unique_lock lock(mutex_);
    dir_.reset();
    loaded_.clear();
}

std::optional<fs::path> CharTableCache::directory() const {
    std::shared_lock lock(mutex_);
    return dir_;
}

int CharTableCache::flush() {
    std::unique_lock lock(mutex_);
    if (!dir_) return 0;
    std::error_code ec;
    fs::create_directories(*dir_, ec);
    if (ec) return 0;
    int written = 0;
    for (int d : dirty_) {
        const auto& table = by_degree_[d];
        std::vector<std::pair<CharacterKey, BigInt>> rows(table.begin(), table.end());
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& [k, v] : rows) entries.push_back({k.lambda.parts(), k.rho.parts(), v.get_str()});
        nlohmann::ordered_json doc;
        doc["format"] = "stratavol-chartable";
        doc["version"] = kFormatVersion;
        doc["degree"] = d;
        doc["entries"] = std::move(entries);
        const fs::path file = file_for_degree(*dir_, d);
        const fs::path tmp = file.string() + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) continue;
            out << doc.dump() << '\n';
        }
        fs::rename(tmp, file, ec);
        if (!ec) ++written;
    }
    dirty_.clear();
    return written;
}

std::size_t CharTableCache::size() const {
    std::shared_lock lock(mutex_);
    std::size_t n = 0;
    for (const auto& [d, t] : by_degree_) n += t.size();
    return n;
}

void CharTableCache::clear() {
    std::unique_lock lock(mutex_);
    by_degree_.clear();
    loaded_.clear();
    dirty_.clear();
}

fs::path default_cache_directory() {
    if (const char* env = std::getenv("STRATAVOL_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "stratavol";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "stratavol";
    return fs::temp_directory_path() / "stratavol";
}

// ---- characters -----------------------------------------------------------

namespace {

// First-column hook lengths (beta numbers) of lambda, strictly decreasing.
std::vector<int> beta_numbers(const IntPartition& lambda) {
    const int l = lambda.length();
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
    return beta;
}

IntPartition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int l = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        const int p = beta[i] - (l - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return IntPartition(std::move(parts));
}

BigInt murnaghan_nakayama(const IntPartition& lambda, const IntPartition& rho) {
    if (rho.empty()) return 1;
    if (rho[0] == 1) return dimension(lambda);

    CharacterKey key{lambda, rho};
    auto& cache = CharTableCache::global();
    if (auto hit = cache.find(key)) return *hit;

    const int r = rho[0];
    const IntPartition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
    const std::vector<int> beta = beta_numbers(lambda);

    BigInt total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // leg length = number of beta numbers strictly between target and beta[i]
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> next = beta;
        next[i] = target;
        BigInt term = murnaghan_nakayama(from_beta(std::move(next)), rest);
        if (between % 2) total -= term; else total += term;
    }
    cache.insert(key, total);
    return total;
}

}  // namespace

BigInt character(const IntPartition& lambda, const IntPartition& rho) {
    if (lambda.size() != rho.size())
        throw DomainError("character: |lambda| = " + std::to_string(lambda.size()) +
                          " but |rho| = " + std::to_string(rho.size()));
    return murnaghan_nakayama(lambda, rho);
}

BigInt dimension(const IntPartition& lambda) {
    const IntPartition conj = lambda.conjugate();
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j) + (conj[j] - i) - 1;
    return factorial(lambda.size()) / hooks;
}

BigInt m_cycle_class_size(int d, int m) {
    if (m < 2) throw DomainError("m_cycle_class_size: m must be >= 2");
    if (d < 0) throw DomainError("m_cycle_class_size: negative degree");
    if (m > d) return 0;
    return factorial(d) / (factorial(d - m) * m);
}

BigInt class_size(const IntPartition& cycle_type) {
    BigInt denom = 1;
    for (int k = 1; k <= (cycle_type.empty() ? 0 : cycle_type[0]); ++k) {
        const int a = cycle_type.multiplicity(k);
        if (a == 0) continue;
        denom *= pow_int(k, a) * factorial(a);
    }
    return factorial(cycle_type.size()) / denom;
}

Rational central_char_f(int m, const IntPartition& lambda) {
    if (m < 2) throw DomainError("central_char_f: m must be >= 2");
    const int d = lambda.size();
    if (m > d) return 0;
    std::vector<int> cycle(d - m + 1, 1);
    cycle[0] = m;
    const BigInt chi = character(lambda, IntPartition(std::move(cycle)));
    return make_rational(m_cycle_class_size(d, m) * chi, dimension(lambda));
}

}  // namespace stratavol
