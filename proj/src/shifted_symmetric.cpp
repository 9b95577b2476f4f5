#include "stratavol/shifted_symmetric.hpp"

#include "stratavol/errors.hpp"
#include "stratavol/parallel.hpp"

namespace stratavol {

void PExpansion::add(const IntPartition& lambda, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

int PExpansion::top_weight() const {
    int w = 0;
    for (const auto& [lambda, c] : terms_) w = std::max(w, weight(lambda));
    return w;
}

std::string PExpansion::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        std::string mono = "p[";
        for (int i = 0; i < it->first.length(); ++i) {
            if (i) mono += ",";
            mono += std::to_string(it->first[i]);
        }
        mono += "]";
        const std::string mag = stratavol::to_string(Rational(abs(c))) + " " + mono;
        if (s.empty()) {
            s = sgn(c) < 0 ? "-" + mag : mag;
        } else {
            s += sgn(c) < 0 ? " - " + mag : " + " + mag;
        }
    }
    return s;
}

int weight(const IntPartition& mu) { return mu.size() + mu.length(); }

Rational p_eval(int k, const IntPartition& lambda) {
    if (k < 1) throw DomainError("p_eval: k must be >= 1");
    const Rational half = make_rational(1, 2);
    Rational total = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        const Rational shifted = lambda[i - 1] - i + half;
        const Rational base = -i + half;
        total += pow_rational(shifted, k) - pow_rational(base, k);
    }
    // terms with i > l(lambda) cancel inside the bracket
    const Rational reg = (1 - make_rational(BigInt(1), pow_int(2, k))) * zeta_neg(k);
    return total + reg;
}

QSeries q_average(const IntPartition& mu, int order) {
    QSeries raw(order);
    for (int d = 0; d <= order; ++d) {
        const auto lambdas = enum_int_partitions(d);
        auto terms = parallel_map<Rational>(lambdas.size(), [&](std::size_t i) {
            Rational t = 1;
            for (int part : mu.parts()) t *= p_eval(part, lambdas[i]);
            return t;
        });
        for (const auto& t : terms) raw[d] += t;
    }
    return euler_series(order) * raw;
}

PExpansion f_top_expansion(int k) {
    if (k < 2) throw DomainError("f_top_expansion: k must be >= 2");
    PExpansion out;
    for (const IntPartition& lambda : enum_partitions_of_weight(k + 1)) {
        // (-k)^{l-1} / (k * kappa!)
        BigInt num = pow_int(k, lambda.length() - 1);
        if ((lambda.length() - 1) % 2) num = -num;
        out.add(lambda, make_rational(num, BigInt(k) * lambda.multiplicity_factorial()));
    }
    return out;
}

}  // namespace stratavol
