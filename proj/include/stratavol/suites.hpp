#pragma once

#include "stratavol/errors.hpp"
#include "stratavol/exact_arith.hpp"

#include <string>
#include <vector>

namespace stratavol {

/// Outcome of one checked property; `detail` names the first counterexample on failure.
struct PropertyResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> results;
    bool pass() const;
};

// Individual properties, shared by the CLI `verify` command and the acceptance binary.

/// Closed-form cumulants against the series oracle for n <= max_parts, |m| <= max_total.
PropertyResult check_cumulant_series_oracle(int max_parts, int max_total, const Limits& limits = {});
/// <<k,l>> = (k+l)! z(k+l) - k! l! z(k) z(l) for k, l <= kmax.
PropertyResult check_covariance_formula(int kmax, const Limits& limits = {});
/// <<k>> = k! z(k+1) for k <= kmax.
PropertyResult check_one_part_formula(int kmax, const Limits& limits = {});
/// pi_pow = |m| - n + 2 or zero, and zero whenever |m| - n is odd.
PropertyResult check_cumulant_homogeneity_parity(int max_parts, int max_total, const Limits& limits = {});
/// f_m(lambda') = (-1)^{m-1} f_m(lambda) and p_k(lambda') = (-1)^{k+1} p_k(lambda), |lambda| <= dmax.
PropertyResult check_conjugation_parity(int dmax);
/// Row and column orthogonality and sum dim^2 = d! for d <= dmax.
PropertyResult check_character_orthogonality(int dmax);
/// l(a) + l(b) - l(a meet b) <= n over all pairs in Pi_n, n <= nmax.
PropertyResult check_transversality_bound(int nmax, const Limits& limits = {});
/// Spanning-forest expansion of the connected Gaussian factor, all rho in Pi_n, n <= nmax.
PropertyResult check_forest_identity(int nmax);
/// pi_pow(volume) = 2g for a fixed list of ten strata.
PropertyResult check_volume_pi_power(const Limits& limits = {});
/// c_simple(n) = c_const(2,...,2) for n = 1..nmax.
PropertyResult check_simple_closed_form(int nmax, const Limits& limits = {});
/// Burnside against brute force for profiles with <= max_points entries in {2,3,4}, d <= dmax;
/// both the full count and the connected count.
PropertyResult check_covers_brute_force(int max_points, int dmax, const Limits& limits = {});
/// Cov_d = 0 when sum (m_i - 1) is odd, and connected counts are nonnegative.
PropertyResult check_cover_series_identities(int order);
/// <p_1>_q = G_2, <p_2>_q = 0, (q)_inf * sum p(d) q^d = 1, all up to q^order.
PropertyResult check_qseries_identities(int order);
/// The one-point theta identity for s in {2, 3, 5/2}.
PropertyResult check_theorem1(int order);

std::vector<std::string> suite_names();
/// Runs a named suite ("all" runs every suite). Throws DomainError on an unknown name.
SuiteReport run_suite(const std::string& name, const Limits& limits = {});

}  // namespace stratavol
