#include "partfn/cli.hpp"

#include "partfn/asymptotics.hpp"
#include "partfn/dedekind.hpp"
#include "partfn/errors.hpp"
#include "partfn/exact_partition.hpp"
#include "partfn/farey.hpp"
#include "partfn/rational.hpp"
#include "partfn/series.hpp"
#include "partfn/special_functions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace partfn::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr unsigned kDefaultBits = 128;
constexpr int kTermDigits = 20;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VerificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename Int>
Int parse_integer(const std::string& text, const char* what) {
    Int value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw UsageError(std::string(what) + ": expected an integer, got '" + text + "'");
    }
    return value;
}

std::uint64_t parse_positive(const std::string& text, const char* what, bool allow_zero = false) {
    if (!text.empty() && text.front() == '-') {
        throw UsageError(std::string(what) + " must be nonnegative, got '" + text + "'");
    }
    const auto value = parse_integer<std::uint64_t>(text, what);
    if (!allow_zero && value == 0) throw UsageError(std::string(what) + " must be >= 1");
    return value;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_positive(item, "list entry"));
    if (out.empty()) throw UsageError("--list needs at least one value");
    return out;
}

OutputFormat resolve(OutputFormat requested, OutputFormat fallback) {
    return requested == OutputFormat::automatic ? fallback : requested;
}

unsigned bits_or_default(const CliConfig& cfg) { return cfg.precision_bits.value_or(kDefaultBits); }

std::optional<std::filesystem::path> cache_location(const CliConfig& cfg) {
    if (cfg.cache_path) return cfg.cache_path;
    if (const char* env = std::getenv(kCacheEnvVar); env != nullptr && *env != '\0') return std::filesystem::path(env);
    return std::nullopt;
}

int cmd_exact(const CliConfig& cfg, const std::string& n_text, std::ostream& out) {
    const std::uint64_t n = parse_positive(n_text, "n", true);
    const auto location = cache_location(cfg);
    PartitionCache cache;
    if (location && std::filesystem::exists(*location)) cache = cache_load(*location);
    const std::size_t before = cache.size();
    const PartitionValue& value = p_exact(n, cache);
    if (location && cache.size() != before) cache_save(cache, *location);

    if (resolve(cfg.output_format, OutputFormat::plain) == OutputFormat::json) {
        out << ordered_json{{"n", n}, {"p", value.get_str()}}.dump() << '\n';
    } else {
        out << value.get_str() << '\n';
    }
    return kExitOk;
}

ordered_json series_json(const SeriesReport& report) {
    ordered_json terms = ordered_json::array();
    for (const SeriesTerm& t : report.terms) {
        terms.push_back({{"k", t.k}, {"a_k", t.a_k.to_scientific(kTermDigits)}, {"r_k", t.r_k.to_scientific(kTermDigits)}});
    }
    return {
        {"n", report.n},
        {"prec", report.prec},
        {"n_terms_used", report.n_terms_used},
        {"partial_sum", report.partial_sum.to_fixed(kTermDigits)},
        {"rounded", report.rounded.get_str()},
        {"gap", report.gap.to_scientific(kTermDigits)},
        {"terms", std::move(terms)},
    };
}

int cmd_series(const CliConfig& cfg, const std::string& n_text, std::optional<std::int64_t> initial_terms,
               std::ostream& out) {
    const std::uint64_t n = parse_positive(n_text, "n");
    SeriesOptions opts;
    opts.initial_terms = initial_terms;
    opts.prec = cfg.precision_bits;
    const SeriesReport report = p_series(n, opts);
    switch (resolve(cfg.output_format, OutputFormat::json)) {
        case OutputFormat::json:
            out << series_json(report).dump(2) << '\n';
            break;
        case OutputFormat::csv:
            out << "k,a_k,r_k\n";
            for (const SeriesTerm& t : report.terms) {
                out << t.k << ',' << t.a_k.to_scientific(kTermDigits) << ',' << t.r_k.to_scientific(kTermDigits) << '\n';
            }
            break;
        default:
            out << report.rounded.get_str() << '\n';
    }
    return kExitOk;
}

void write_rows(const std::vector<AsymptoticRow>& rows, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            arr.push_back({{"n", r.n},
                           {"p_n", r.p_n.get_str()},
                           {"L_n", r.l_n.to_scientific(kTermDigits)},
                           {"eps_percent", r.eps_display()}});
        }
        out << arr.dump(2) << '\n';
        return;
    }
    out << "n,p_n,L_n,eps_percent\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.p_n.get_str() << ',' << r.l_n.to_scientific(kTermDigits) << ',' << r.eps_display()
            << '\n';
    }
}

int cmd_asym(const CliConfig& cfg, const std::string& n_text, std::ostream& out) {
    const std::uint64_t n = parse_positive(n_text, "n");
    PartitionCache cache;
    const auto rows = relative_error_table({n}, cache, PrecisionContext(bits_or_default(cfg)));
    const OutputFormat format = resolve(cfg.output_format, OutputFormat::plain);
    if (format == OutputFormat::plain) {
        out << "L_n " << rows[0].l_n.to_scientific(kTermDigits) << '\n';
        out << "eps_percent " << rows[0].eps_display() << '\n';
    } else {
        write_rows(rows, format, out);
    }
    return kExitOk;
}

int cmd_table(const CliConfig& cfg, const std::string& set, const std::string& list, std::ostream& out) {
    if (set.empty() == list.empty()) throw UsageError("table: give exactly one of --set paper or --list n1,n2,...");
    std::vector<std::uint64_t> ns;
    if (!set.empty()) {
        if (set != "paper") throw UsageError("table: unknown set '" + set + "'");
        ns = reference_table_ns();
    } else {
        ns = parse_list(list);
    }
    PartitionCache cache;
    if (const auto location = cache_location(cfg); location && std::filesystem::exists(*location)) {
        cache = cache_load(*location);
    }
    const auto rows = relative_error_table(ns, cache, PrecisionContext(bits_or_default(cfg)));
    write_rows(rows, resolve(cfg.output_format, OutputFormat::csv), out);
    return kExitOk;
}

int cmd_farey(const CliConfig& cfg, const std::string& order_text, std::ostream& out) {
    const auto order = static_cast<std::int64_t>(parse_positive(order_text, "N"));
    const FareySequence seq = farey(order);
    if (resolve(cfg.output_format, OutputFormat::csv) == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const Fraction& f : seq.entries) arr.push_back({{"h", f.h}, {"k", f.k}});
        out << arr.dump() << '\n';
        return kExitOk;
    }
    out << "h,k\n";
    for (const Fraction& f : seq.entries) out << f.h << ',' << f.k << '\n';
    return kExitOk;
}

int cmd_ford(const CliConfig& cfg, const std::string& order_text, std::ostream& out) {
    const auto order = static_cast<std::int64_t>(parse_positive(order_text, "N"));
    const auto arcs = path(order);
    const auto chord_list = chords(order);
    const bool json = resolve(cfg.output_format, OutputFormat::csv) == OutputFormat::json;
    ordered_json arr = ordered_json::array();
    if (!json) out << "h,k,k1,k2,w1_re,w1_im,w2_re,w2_im\n";
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Fraction& f = arcs[i].frac;
        const WChord& c = chord_list[i];
        if (json) {
            arr.push_back({{"h", f.h},
                           {"k", f.k},
                           {"k1", c.k1},
                           {"k2", c.k2},
                           {"w1_re", c.w1.re.to_string()},
                           {"w1_im", c.w1.im.to_string()},
                           {"w2_re", c.w2.re.to_string()},
                           {"w2_im", c.w2.im.to_string()}});
        } else {
            out << f.h << ',' << f.k << ',' << c.k1 << ',' << c.k2 << ',' << c.w1.re.to_string() << ','
                << c.w1.im.to_string() << ',' << c.w2.re.to_string() << ',' << c.w2.im.to_string() << '\n';
        }
    }
    if (json) out << arr.dump() << '\n';
    return kExitOk;
}

int cmd_dedekind(const CliConfig& cfg, const std::string& h_text, const std::string& k_text, std::ostream& out) {
    const auto h = parse_integer<std::int64_t>(h_text, "h");
    const auto k = parse_integer<std::int64_t>(k_text, "k");
    if (k < 1) throw UsageError("k must be >= 1");
    const ExactRational s = dedekind_sum(h, k);
    if (resolve(cfg.output_format, OutputFormat::plain) == OutputFormat::json) {
        out << ordered_json{{"h", h}, {"k", k}, {"s", s.to_string()}}.dump() << '\n';
    } else {
        out << s.to_string() << '\n';
    }
    return kExitOk;
}

int decimals_for(unsigned bits) { return std::max(1, static_cast<int>(bits * 0.30103) - 4); }

int cmd_ak(const CliConfig& cfg, const std::string& k_text, const std::string& n_text, std::ostream& out) {
    const auto k = static_cast<std::int64_t>(parse_positive(k_text, "k"));
    const std::uint64_t n = parse_positive(n_text, "n");
    const unsigned bits = bits_or_default(cfg);
    const AkValue value = a_k(k, n, PrecisionContext(bits));
    const std::string text = value.value.to_fixed(decimals_for(bits));
    if (resolve(cfg.output_format, OutputFormat::plain) == OutputFormat::json) {
        out << ordered_json{{"k", k}, {"n", n}, {"a_k", text}}.dump() << '\n';
    } else {
        out << text << '\n';
    }
    return kExitOk;
}

int cmd_bessel(const CliConfig& cfg, const std::string& x_text, std::ostream& out) {
    const unsigned bits = bits_or_default(cfg);
    const PrecisionContext ctx(bits);
    Real x(bits);
    try {
        x = Real::parse(x_text, bits);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (x.sign() <= 0) throw UsageError("x must be > 0");
    const Real series = bessel_i_series(1.5, x, ctx);
    const Real closed = bessel_i_3_2_closed(x, ctx);
    const Real diff = abs(series - closed);
    const int digits = decimals_for(bits);
    if (resolve(cfg.output_format, OutputFormat::plain) == OutputFormat::json) {
        out << ordered_json{{"x", x_text},
                            {"series", series.to_scientific(digits)},
                            {"closed", closed.to_scientific(digits)},
                            {"difference", diff.to_scientific(6)}}
                   .dump()
            << '\n';
    } else {
        out << "series " << series.to_scientific(digits) << '\n';
        out << "closed " << closed.to_scientific(digits) << '\n';
        out << "difference " << diff.to_scientific(6) << '\n';
    }
    return kExitOk;
}

// Deterministic sample points: coordinates are multiples of 1/1000.
class SampleSource {
public:
    SampleSource() : rng_(0x5eed2024ULL) {}

    mpq_class uniform(long lo_milli, long hi_milli) {
        std::uniform_int_distribution<long> dist(lo_milli, hi_milli);
        return make_fraction(dist(rng_), 1000);
    }
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        std::uniform_int_distribution<std::int64_t> dist(lo, hi);
        return dist(rng_);
    }

private:
    std::mt19937_64 rng_;
};

Complex exact_point(const mpq_class& re, const mpq_class& im, unsigned bits) {
    return {Real(re, bits), Real(im, bits)};
}

int cmd_verify(const CliConfig& cfg, const std::string& which, int samples, std::ostream& out) {
    if (which != "eta" && which != "ftransform") throw UsageError("verify: expected 'eta' or 'ftransform'");
    if (samples < 1) throw UsageError("--samples must be >= 1");
    const unsigned bits = bits_or_default(cfg);
    const PrecisionContext ctx(bits);
    const Real threshold = exp2i(-static_cast<long>(bits / 2), bits);
    SampleSource source;
    Real worst(0L, bits);
    int failures = 0;

    const auto record = [&](const std::string& label, const Real& residual) {
        const bool ok = residual < threshold;
        if (!ok) ++failures;
        if (residual > worst) worst = residual;
        out << label << " residual=" << residual.to_scientific(6) << (ok ? " ok" : " FAIL") << '\n';
    };

    if (which == "eta") {
        for (int i = 0; i < samples; ++i) {
            ModularMatrix m{};
            mpq_class tx, ty;
            if (i == 0) {
                m = {0, -1, 1, 0};
                tx = 0, ty = 1;
            } else if (i == 1) {
                m = {1, 0, 1, 1};
                tx = 0, ty = 1;
            } else {
                std::int64_t c = 0, d = 0;
                do {
                    c = source.integer(1, 4);
                    d = source.integer(-4, 4);
                } while (std::gcd(c, d) != 1);
                m = complete_modular_matrix(c, d);
                tx = source.uniform(-500, 500);
                ty = source.uniform(600, 1600);
            }
            const auto report = verify_eta(m, exact_point(tx, ty, bits), ctx);
            std::ostringstream label;
            label << "eta (" << m.a << ',' << m.b << ',' << m.c << ',' << m.d << ") tau=" << tx.get_str() << '+'
                  << ty.get_str() << 'i';
            record(label.str(), report.residual);
        }
    } else {
        static constexpr std::int64_t fixed[3][2] = {{1, 1}, {1, 2}, {1, 3}};
        static const mpq_class fixed_z[3] = {mpq_class(1), make_fraction(1, 2), mpq_class(1)};
        for (int i = 0; i < samples; ++i) {
            std::int64_t h = 0, k = 0;
            mpq_class zx, zy;
            if (i < 3) {
                h = fixed[i][0];
                k = fixed[i][1];
                zx = fixed_z[i];
                zy = 0;
            } else {
                do {
                    k = source.integer(1, 6);
                    h = source.integer(1, k);
                } while (std::gcd(h, k) != 1);
                zx = source.uniform(500, 2000);
                zy = source.uniform(-1000, 1000);
            }
            const Real residual = verify_F_transform(h, k, exact_point(zx, zy, bits), ctx);
            std::ostringstream label;
            label << "ftransform h=" << h << " k=" << k << " z=" << zx.get_str() << (zy < 0 ? "" : "+") << zy.get_str()
                  << 'i';
            record(label.str(), residual);
        }
    }
    out << "max_residual=" << worst.to_scientific(6) << " threshold=2^-" << bits / 2 << " samples=" << samples
        << " failures=" << failures << '\n';
    if (failures > 0) throw VerificationFailed(std::to_string(failures) + " residual(s) above threshold");
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact, series and asymptotic evaluation of the partition function p(n)", "partfn"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    unsigned prec = 0;
    std::string cache_path;
    std::string format = "auto";
    app.add_option("--prec", prec, "Working precision in bits (>= 64)")->check(CLI::Range(64U, 1U << 24));
    app.add_option("--cache", cache_path, std::string("Cache file for exact values (default: $") + kCacheEnvVar + ")");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"auto", "plain", "csv", "json"}));

    std::function<int()> action;
    std::string a1, a2;

    auto* exact = app.add_subcommand("exact", "p(n) from the pentagonal recurrence");
    exact->add_option("n", a1)->required();
    exact->callback([&] { action = [&] { return cmd_exact(cfg, a1, out); }; });

    std::optional<std::int64_t> initial_terms;
    auto* series = app.add_subcommand("series", "p(n) from the convergent series with certified rounding");
    series->add_option("n", a1)->required();
    series->add_option("--terms", initial_terms, "Initial number of terms")->check(CLI::PositiveNumber);
    series->callback([&] { action = [&] { return cmd_series(cfg, a1, initial_terms, out); }; });

    auto* asym = app.add_subcommand("asym", "Leading asymptotic L(n) and its relative error");
    asym->add_option("n", a1)->required();
    asym->callback([&] { action = [&] { return cmd_asym(cfg, a1, out); }; });

    std::string set, list;
    auto* table = app.add_subcommand("table", "Exact values, L(n) and relative errors as CSV");
    auto* set_opt = table->add_option("--set", set, "Named n grid: paper = 10, 50, 100, ..., 12000, 15000");
    table->add_option("--list", list, "Comma separated n values")->excludes(set_opt);
    table->callback([&] { action = [&] { return cmd_table(cfg, set, list, out); }; });

    auto* farey_cmd = app.add_subcommand("farey", "Farey sequence F_N as CSV");
    farey_cmd->add_option("N", a1)->required();
    farey_cmd->callback([&] { action = [&] { return cmd_farey(cfg, a1, out); }; });

    auto* ford = app.add_subcommand("ford", "Path arcs of P(N) with their w-plane chords");
    ford->add_option("N", a1)->required();
    ford->callback([&] { action = [&] { return cmd_ford(cfg, a1, out); }; });

    auto* dedekind = app.add_subcommand("dedekind", "Exact Dedekind sum s(h,k)");
    dedekind->add_option("h_value", a1, "h (may be negative)")->required();
    dedekind->add_option("k_value", a2, "k >= 1")->required();
    dedekind->callback([&] { action = [&] { return cmd_dedekind(cfg, a1, a2, out); }; });

    auto* ak = app.add_subcommand("ak", "A_k(n)");
    ak->add_option("k", a1)->required();
    ak->add_option("n", a2)->required();
    ak->callback([&] { action = [&] { return cmd_ak(cfg, a1, a2, out); }; });

    auto* bessel = app.add_subcommand("bessel", "I_{3/2}(x) by series and closed form");
    bessel->add_option("x", a1)->required();
    bessel->callback([&] { action = [&] { return cmd_bessel(cfg, a1, out); }; });

    int samples = 20;
    auto* verify = app.add_subcommand("verify", "Numerical check of the eta and F transformation laws");
    verify->add_option("which", a1, "eta | ftransform")->required();
    verify->add_option("--samples", samples, "Number of sample points");
    verify->callback([&] { action = [&] { return cmd_verify(cfg, a1, samples, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (prec != 0) cfg.precision_bits = prec;
    if (!cache_path.empty()) cfg.cache_path = cache_path;
    if (format == "plain") cfg.output_format = OutputFormat::plain;
    if (format == "csv") cfg.output_format = OutputFormat::csv;
    if (format == "json") cfg.output_format = OutputFormat::json;

    try {
        return action ? action() : kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const VerificationFailed& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace partfn::cli
