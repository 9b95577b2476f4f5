#include "stratavol/cli.hpp"

#include "stratavol/characters.hpp"
#include "stratavol/coverings.hpp"
#include "stratavol/cumulants.hpp"
#include "stratavol/exact_arith.hpp"
#include "stratavol/npoint.hpp"
#include "stratavol/parallel.hpp"
#include "stratavol/shifted_symmetric.hpp"
#include "stratavol/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace stratavol {

using ordered_json = nlohmann::ordered_json;

namespace {

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "plain") return OutputFormat::plain;
    throw DomainError("output format must be json, csv or plain, got '" + s + "'");
}

int positive_cap(const nlohmann::json& v, const std::string& key) {
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1000000)
        throw DomainError("config: caps." + key + " must be a positive integer");
    return v.get<int>();
}

}  // namespace

Config load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DomainError("cannot read config file " + file.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError("config file " + file.string() + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw DomainError("config: top level must be an object");
    Config cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "cache_dir") {
            if (!value.is_string()) throw DomainError("config: cache_dir must be a string");
            cfg.cache_dir = value.get<std::string>();
        } else if (key == "output") {
            if (!value.is_string()) throw DomainError("config: output must be a string");
            cfg.output = parse_format(value.get<std::string>());
        } else if (key == "caps") {
            if (!value.is_object()) throw DomainError("config: caps must be an object");
            for (const auto& [cap, v] : value.items()) {
                if (cap == "set_partition_n")
                    cfg.caps.set_partition_n = positive_cap(v, cap);
                else if (cap == "brute_force_d")
                    cfg.caps.brute_force_d = positive_cap(v, cap);
                else if (cap == "bernoulli_max")
                    cfg.caps.bernoulli_max = positive_cap(v, cap);
                else
                    throw DomainError("config: unknown key caps." + cap);
            }
        } else {
            throw DomainError("config: unknown key " + key);
        }
    }
    return cfg;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw DomainError("malformed integer list '" + text + "': expected comma-separated integers like 3,1");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace {

constexpr const char* kApproxNote = "decimal approximation, pi to 50 digits";

std::string exact(const PiScalar& x) { return to_string(x.coeff()); }

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

ordered_json approx_json(const PiScalar& x) {
    ordered_json a;
    a["value"] = approx_decimal(x);
    a["note"] = kApproxNote;
    return a;
}

// Attaches the persistent character cache for the duration of a command.
class CacheSession {
public:
    explicit CacheSession(std::optional<std::filesystem::path> dir) : active_(dir.has_value()) {
        if (active_) CharTableCache::global().attach_directory(*dir);
    }
    ~CacheSession() {
        if (!active_) return;
        try {
            CharTableCache::global().flush();
        } catch (...) {
            // a cache that cannot be written only costs recomputation
        }
        CharTableCache::global().detach_directory();
    }
    CacheSession(const CacheSession&) = delete;
    CacheSession& operator=(const CacheSession&) = delete;

private:
    bool active_;
};

struct Options {
    std::string config_path;
    std::string output;
    int threads = 1;
    bool approx = false;
    bool no_cache = false;

    std::string list;  // mu, m or profile
    int k = 0;
    int dmax = 6;
    bool connected = false;
    bool no_unramified = false;
    bool cross_check = false;
    std::string suite;
    int nmax = 8;
    std::string s_text = "2";
    int order = 30;
};

int cmd_volume(const Options& o, const Config& cfg, std::ostream& out) {
    const StratumSpec stratum(IntPartition(parse_int_list(o.list)));
    const VolumeResult r = volume(stratum, o.cross_check, cfg.caps);
    switch (cfg.output) {
        case OutputFormat::json: {
            ordered_json j = to_json(r);
            if (o.cross_check) j["cross_checked"] = r.cross_checked;
            if (o.approx) j["approx"] = approx_json(r.volume);
            emit_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << "mu;genus;dim;c;volume;pi_pow;route\n";
            {
                std::string mu;
                for (int i = 0; i < r.mu.length(); ++i) mu += (i ? "," : "") + std::to_string(r.mu[i]);
                out << mu << ";" << r.genus << ";" << r.dim << ";" << exact(r.c_const) << ";" << exact(r.volume)
                    << ";" << r.volume.pi_pow() << ";" << to_string(r.route) << "\n";
            }
            break;
        case OutputFormat::plain:
            out << "nu(H" << r.mu.to_string() << ") = " << to_string(r.volume) << "  (genus " << r.genus
                << ", dim " << r.dim << ", c = " << to_string(r.c_const) << ", route " << to_string(r.route) << ")\n";
            if (o.approx) out << "  ~ " << approx_decimal(r.volume) << "  [" << kApproxNote << "]\n";
            break;
    }
    return exit_code::ok;
}

int emit_scalar(const Options& o, const Config& cfg, std::ostream& out, const std::string& kind,
                const std::vector<int>& m, const PiScalar& value) {
    switch (cfg.output) {
        case OutputFormat::json: {
            ordered_json j;
            j["m"] = m;
            j[kind] = pi_scalar_json(value);
            if (o.approx) j["approx"] = approx_json(value);
            emit_json(out, j);
            break;
        }
        case OutputFormat::csv: {
            out << "m;" << kind << ";pi_pow\n";
            std::string ms;
            for (std::size_t i = 0; i < m.size(); ++i) ms += (i ? "," : "") + std::to_string(m[i]);
            out << ms << ";" << exact(value) << ";" << value.pi_pow() << "\n";
            break;
        }
        case OutputFormat::plain:
            out << to_string(value) << "\n";
            if (o.approx) out << "  ~ " << approx_decimal(value) << "  [" << kApproxNote << "]\n";
            break;
    }
    return exit_code::ok;
}

int cmd_cumulant(const Options& o, const Config& cfg, std::ostream& out) {
    const CumulantKey key(parse_int_list(o.list));
    return emit_scalar(o, cfg, out, "value", key.parts(), elementary_cumulant(key, cfg.caps));
}

int cmd_cconst(const Options& o, const Config& cfg, std::ostream& out) {
    const std::vector<int> m = parse_int_list(o.list);
    return emit_scalar(o, cfg, out, "c", m, c_const(m, cfg.caps));
}

int cmd_fk(const Options& o, const Config& cfg, std::ostream& out) {
    const PExpansion e = f_top_expansion(o.k);
    switch (cfg.output) {
        case OutputFormat::json: {
            ordered_json j;
            j["k"] = o.k;
            j["expansion"] = e.to_string();
            ordered_json terms = ordered_json::array();
            for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
                terms.push_back({{"lambda", it->first.parts()}, {"coeff", to_string(it->second)}});
            j["terms"] = terms;
            emit_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << "lambda;coeff\n";
            for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
                std::string lam;
                for (int i = 0; i < it->first.length(); ++i) lam += (i ? "," : "") + std::to_string(it->first[i]);
                out << lam << ";" << to_string(it->second) << "\n";
            }
            break;
        case OutputFormat::plain:
            out << e.to_string() << "\n";
            break;
    }
    return exit_code::ok;
}

int cmd_covers(const Options& o, const Config& cfg, std::ostream& out) {
    if (o.connected && o.no_unramified) throw DomainError("--connected and --no-unramified are exclusive");
    if (o.dmax < 1) throw DomainError("--dmax must be >= 1");
    const CoverProfile profile(parse_int_list(o.list));
    const CoverKind kind = o.connected ? CoverKind::connected
                           : o.no_unramified ? CoverKind::no_unramified
                                             : CoverKind::all;
    const QSeries series = kind == CoverKind::connected       ? cov_connected_series(profile, o.dmax)
                           : kind == CoverKind::no_unramified ? cov_prime_series(profile, o.dmax)
                                                              : cov_series(profile, o.dmax);
    switch (cfg.output) {
        case OutputFormat::json: {
            ordered_json j;
            j["profile"] = profile.cycles();
            j["kind"] = to_string(kind);
            ordered_json counts = ordered_json::array();
            for (int d = 1; d <= o.dmax; ++d) counts.push_back({{"d", d}, {"count", to_string(series[d])}});
            j["counts"] = counts;
            emit_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << kCoverCsvHeader << "\n";
            for (int d = 1; d <= o.dmax; ++d) out << to_csv_row({profile, d, series[d], kind}) << "\n";
            break;
        case OutputFormat::plain:
            for (int d = 1; d <= o.dmax; ++d) out << "d=" << d << "  " << to_string(series[d]) << "\n";
            break;
    }
    return exit_code::ok;
}

int cmd_verify(const Options& o, const Config& cfg, std::ostream& out) {
    const SuiteReport report = run_suite(o.suite, cfg.caps);
    switch (cfg.output) {
        case OutputFormat::json: {
            ordered_json j;
            j["suite"] = report.suite;
            ordered_json results = ordered_json::array();
            for (const auto& r : report.results) {
                ordered_json item{{"property", r.name}, {"pass", r.pass}};
                if (!r.pass) item["detail"] = r.detail;
                results.push_back(item);
            }
            j["results"] = results;
            j["pass"] = report.pass();
            emit_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << "property;pass;detail\n";
            for (const auto& r : report.results) out << r.name << ";" << (r.pass ? "true" : "false") << ";" << r.detail << "\n";
            break;
        case OutputFormat::plain:
            for (const auto& r : report.results) {
                out << (r.pass ? "PASS  " : "FAIL  ") << r.name;
                if (!r.pass) out << "  [" << r.detail << "]";
                out << "\n";
            }
            break;
    }
    return report.pass() ? exit_code::ok : exit_code::verification_failed;
}

int cmd_simple_table(const Options& o, const Config& cfg, std::ostream& out) {
    if (o.nmax < 1) throw DomainError("--nmax must be >= 1");
    ordered_json rows = ordered_json::array();
    if (cfg.output == OutputFormat::csv) out << "n;c;c_over_n_factorial;pi_pow\n";
    for (int n = 1; n <= o.nmax; ++n) {
        const PiScalar c = c_simple(n);
        const PiScalar scaled = c / Rational(factorial(n));
        switch (cfg.output) {
            case OutputFormat::json:
                rows.push_back({{"n", n}, {"c", pi_scalar_json(c)}, {"c_over_n_factorial", pi_scalar_json(scaled)}});
                break;
            case OutputFormat::csv:
                out << n << ";" << exact(c) << ";" << exact(scaled) << ";" << c.pi_pow() << "\n";
                break;
            case OutputFormat::plain:
                out << "n=" << n << "  c = " << to_string(c) << "  c/n! = " << to_string(scaled) << "\n";
                break;
        }
    }
    if (cfg.output == OutputFormat::json) emit_json(out, ordered_json{{"rows", rows}});
    return exit_code::ok;
}

int cmd_npoint_check(const Options& o, const Config& cfg, std::ostream& out) {
    if (o.order < 0) throw DomainError("--order must be nonnegative");
    const EvaluatedPoint point(parse_rational(o.s_text));
    const bool holds = verify_theorem1_n1(point, o.order);
    const GradedQSeries direct = direct_one_point(point, o.order);
    switch (cfg.output) {
        case OutputFormat::json:
            emit_json(out, ordered_json{{"s", to_string(point.s())},
                                        {"order", o.order},
                                        {"q0_coefficient", to_string(direct.coeff(0))},
                                        {"holds", holds}});
            break;
        case OutputFormat::csv:
            out << "s;order;holds\n" << to_string(point.s()) << ";" << o.order << ";" << (holds ? "true" : "false") << "\n";
            break;
        case OutputFormat::plain:
            out << (holds ? "PASS" : "FAIL") << "  Theta(s) F(s) = Theta'(0) at s = " << to_string(point.s())
                << " up to q^" << o.order << "\n";
            break;
    }
    return holds ? exit_code::ok : exit_code::verification_failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Masur-Veech volumes of strata of abelian differentials via covering counts", "stratavol"};
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    app.add_option("--config", o.config_path, "JSON config file (cache_dir, caps, output)");
    auto* output_opt = app.add_option("--output", o.output, "json | csv | plain")
                           ->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--threads", o.threads, "worker threads for the parallel reductions")->check(CLI::Range(1, 256));
    app.add_flag("--approx", o.approx, "append a labelled decimal approximation");
    app.add_flag("--no-cache", o.no_cache, "do not read or write the character cache");

    auto* volume = app.add_subcommand("volume", "volume of the stratum H(mu), labelled zeros");
    volume->add_option("mu", o.list, "zero orders, e.g. 3,1")->required();
    volume->add_flag("--cross-check", o.cross_check, "also run the general route and require agreement");

    auto* cumulant = app.add_subcommand("cumulant", "elementary cumulant <<m>>");
    cumulant->add_option("m", o.list, "e.g. 4,2")->required();

    auto* cconst = app.add_subcommand("cconst", "leading constant c(m) of connected covering counts");
    cconst->add_option("m", o.list, "cycle lengths >= 2, e.g. 4,2")->required();

    auto* fk = app.add_subcommand("fk", "top-weight power-sum expansion of f_k");
    fk->alias("fk-expand");
    fk->add_option("k", o.k, "k >= 2")->required();

    auto* covers = app.add_subcommand("covers", "covering counts of the torus by degree");
    covers->add_option("profile", o.list, "cycle lengths >= 2, e.g. 2,2")->required();
    covers->add_option("--dmax", o.dmax, "largest degree");
    covers->add_flag("--connected", o.connected, "connected coverings only");
    covers->add_flag("--no-unramified", o.no_unramified, "coverings without unramified components");

    auto* verify = app.add_subcommand("verify", "run a named property suite");
    std::string suites_help;
    for (const auto& n : suite_names()) suites_help += (suites_help.empty() ? "" : ", ") + n;
    verify->add_option("suite", o.suite, suites_help)->required();

    auto* simple = app.add_subcommand("simple-table", "c(2,...,2) from the closed form");
    simple->add_option("--nmax", o.nmax, "largest number of simple branch points");

    auto* npoint = app.add_subcommand("npoint-check", "one-point theta identity at s = e^{x/2}");
    npoint->add_option("--s", o.s_text, "rational s with |s| > 1");
    npoint->add_option("--order", o.order, "truncation order in q");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::domain_error;
    }

    try {
        Config cfg = o.config_path.empty() ? Config{} : load_config(o.config_path);
        if (output_opt->count()) cfg.output = parse_format(o.output);
        set_worker_threads(o.threads);
        set_bernoulli_memo_cap(cfg.caps.bernoulli_max);

        std::optional<std::filesystem::path> cache_dir;
        if (!o.no_cache) {
            if (std::getenv("STRATAVOL_CACHE") || !cfg.cache_dir)
                cache_dir = default_cache_directory();
            else
                cache_dir = cfg.cache_dir;
        }
        CacheSession cache(cache_dir);

        if (*volume) return cmd_volume(o, cfg, out);
        if (*cumulant) return cmd_cumulant(o, cfg, out);
        if (*cconst) return cmd_cconst(o, cfg, out);
        if (*fk) return cmd_fk(o, cfg, out);
        if (*covers) return cmd_covers(o, cfg, out);
        if (*verify) return cmd_verify(o, cfg, out);
        if (*simple) return cmd_simple_table(o, cfg, out);
        if (*npoint) return cmd_npoint_check(o, cfg, out);
        return exit_code::domain_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::domain_error;
    } catch (const ResourceError& e) {
        err << "resource cap: " << e.what() << "\n";
        return exit_code::resource_cap;
    } catch (const std::logic_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return exit_code::verification_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::verification_failed;
    }
}

}  // namespace stratavol
