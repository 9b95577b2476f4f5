#pragma once

#include <stdexcept>
#include <string>

namespace stratavol {

/// Input outside the mathematical domain of an operation (odd |mu|, size mismatch, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A configured enumeration cap would be exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration and memoization caps shared by the modules.
struct Limits {
    int set_partition_n = 12;
    int brute_force_d = 5;
    int bernoulli_max = 64;
};

}  // namespace stratavol
