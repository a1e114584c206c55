#ifndef INDEL_CLI_HPP
#define INDEL_CLI_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "indel/bounds.hpp"
#include "indel/channels.hpp"
#include "indel/codefile.hpp"
#include "indel/rational.hpp"
#include "indel/vt.hpp"
#include "indel/word.hpp"

namespace indel {
namespace cli {

struct FigureSpec {
    std::string id;  // usc-bound | uic-bound | udc-bound | vt-weight
    long long n = 0;
    long long q = 2;
    long long d = 1;
    int a = 0;
    long long t_min = 1;
    long long t_max = 0;

    void validate() const {
        if (t_min > t_max) throw std::invalid_argument("figure: empty t range");
        if (t_min < 0) throw std::invalid_argument("figure: t must be >= 0");
        if (n < 1) throw std::invalid_argument("figure: n must be >= 1");
    }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::string fmt_value(const Rational& v, int precision) {
    if (boost::multiprecision::denominator(v) == 1)
        return boost::multiprecision::numerator(v).str();
    return to_fraction_string(v) + " ≈ " + to_decimal_string(v, precision);
}

inline std::string render_bound(const std::string& kind, const BoundQuery& query, int precision) {
    query.validate();
    Rational value;
    if (kind == "usc") {
        value = bound_usc(query.n, query.q, query.t);
    } else if (kind == "uic") {
        value = bound_uic(query.n, query.q, query.t);
    } else if (kind == "udc") {
        if (!query.d) throw std::invalid_argument("bound udc: --d is required");
        value = bound_udc(query.n, query.q, query.t, *query.d);
    } else if (kind == "weight-uic-0n1n") {
        if (!query.w) throw std::invalid_argument("bound weight-uic-0n1n: --w is required");
        value = weight_bound_uic_0n1n(query.n, query.t, *query.w);
    } else if (kind == "weight-uic-0n") {
        if (!query.w) throw std::invalid_argument("bound weight-uic-0n: --w is required");
        value = weight_bound_uic_0n(query.n, query.q, query.t, *query.w);
    } else {  // weight-udc-0n1n
        if (!query.w) throw std::invalid_argument("bound weight-udc-0n1n: --w is required");
        value = weight_bound_udc_0n1n(query.n, query.t, *query.w);
    }
    return fmt_value(value, precision) + "\n";
}

struct ExactArgs {
    std::string code_path;
    std::string channel;
    int t = 0;
    bool per_codeword = false;
    bool mc = false;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
};

inline std::string render_exact(const ExactArgs& args, int precision) {
    const Code code = load_code_file(args.code_path);
    const ChannelKind kind = ChannelKind::parse(args.channel, args.t);
    std::ostringstream csv;

    if (args.mc) {
        if (kind.kind != ChannelKind::Kind::UIC && kind.kind != ChannelKind::Kind::UDC)
            throw std::invalid_argument("exact --mc: only uic and udc can be sampled");
        if (kind.is_deletion() && kind.t > static_cast<int>(code.n()))
            throw std::domain_error("exact: t exceeds code length for a deletion channel");
        csv << "codeword,favorable,total,f,mode\n";
        Rational w, sum = 0;
        for (std::size_t i = 0; i < code.words().size(); ++i) {
            const Word& c = code.words()[i];
            const std::uint64_t substream = splitmix64(args.seed + 0x9E3779B97F4A7C15ull * (i + 1));
            const Rational f = monte_carlo_f(c, code, kind, args.trials, substream);
            sum += f;
            if (i == 0 || f < w) w = f;
            if (args.per_codeword)
                csv << c.to_digits() << ","
                    << boost::multiprecision::numerator(f) * (Integer(args.trials) /
                                                              boost::multiprecision::denominator(f))
                    << "," << args.trials << "," << to_decimal_string(f, precision) << ",mc\n";
        }
        const Rational u = sum / static_cast<long long>(code.M());
        csv << "W," << boost::multiprecision::numerator(w) << ","
            << boost::multiprecision::denominator(w) << "," << to_decimal_string(w, precision)
            << ",mc\n";
        csv << "U," << boost::multiprecision::numerator(u) << ","
            << boost::multiprecision::denominator(u) << "," << to_decimal_string(u, precision)
            << ",mc\n";
        return csv.str();
    }

    const DecodingReport rep = report(code, kind);
    csv << "codeword,favorable,total,f\n";
    if (args.per_codeword) {
        for (const CodewordStats& row : rep.per_codeword)
            csv << row.codeword.to_digits() << "," << row.favorable << "," << row.total << ","
                << to_decimal_string(row.f, precision) << "\n";
    }
    csv << "W," << boost::multiprecision::numerator(rep.W) << ","
        << boost::multiprecision::denominator(rep.W) << "," << to_decimal_string(rep.W, precision)
        << "\n";
    csv << "U," << boost::multiprecision::numerator(rep.U) << ","
        << boost::multiprecision::denominator(rep.U) << "," << to_decimal_string(rep.U, precision)
        << "\n";
    return csv.str();
}

inline std::string render_vt_gen(const VTParams& params) {
    std::ostringstream outstream;
    const Code code = vt_code(params);
    for (const Word& w : code.words()) outstream << w.to_digits() << "\n";
    return outstream.str();
}

inline std::string render_vt_decode(const VTParams& params, const std::string& received) {
    const Word r = Word::from_digits(received, Alphabet(2));
    const int len = static_cast<int>(r.size());
    if (len == params.n - 1) return decode_one_deletion(params, r).to_digits() + "\n";
    if (len == params.n + 1) {
        try {
            return decode_one_insertion(params, r).to_digits() + "\n";
        } catch (const std::invalid_argument&) {
            return "NONE\n";
        }
    }
    if (len == params.n + 2) {
        const TwoInsertionScan scan = decode_two_insertions_scan(params, r);
        switch (scan.outcome) {
            case TwoInsertionScan::Outcome::none: return "NONE\n";
            case TwoInsertionScan::Outcome::unique: return scan.candidates[0].to_digits() + "\n";
            case TwoInsertionScan::Outcome::ambiguous: {
                std::string line = "AMBIGUOUS:";
                for (std::size_t i = 0; i < scan.candidates.size(); ++i)
                    line += (i ? "," : "") + scan.candidates[i].to_digits();
                return line + "\n";
            }
        }
    }
    throw std::invalid_argument("vt decode: received length must be n-1, n+1, or n+2");
}

inline std::string render_vt_sweep(int n, const std::string& channel, int t, int precision) {
    std::ostringstream csv;
    csv << "a,M,W,U,W_dec,U_dec\n";
    for (int a = 0; a <= n; ++a) {
        const Code code = vt_code(VTParams(n, a));
        const DecodingReport rep = report(code, ChannelKind::parse(channel, t));
        csv << a << "," << code.M() << "," << to_fraction_string(rep.W) << ","
            << to_fraction_string(rep.U) << "," << to_decimal_string(rep.W, precision) << ","
            << to_decimal_string(rep.U, precision) << "\n";
    }
    return csv.str();
}

inline std::string render_figure(const FigureSpec& spec, int precision) {
    spec.validate();
    std::ostringstream csv;
    if (spec.id == "usc-bound" || spec.id == "uic-bound" || spec.id == "udc-bound") {
        csv << "t,bound,bound_frac\n";
        for (long long t = spec.t_min; t <= spec.t_max; ++t) {
            const Rational bound = spec.id == "usc-bound" ? bound_usc(spec.n, spec.q, t)
                                   : spec.id == "uic-bound"
                                       ? bound_uic(spec.n, spec.q, t)
                                       : bound_udc(spec.n, spec.q, t, spec.d);
            csv << t << "," << to_decimal_string(bound, precision) << ","
                << to_fraction_string(bound) << "\n";
        }
        return csv.str();
    }
    if (spec.id != "vt-weight") throw std::invalid_argument("figure: unknown figure id " + spec.id);

    const Code code = vt_code(VTParams(static_cast<int>(spec.n), spec.a));
    csv << "t,weight,bound,f_exact_min,f_exact_max,bound_frac,f_exact_min_frac,f_exact_max_frac\n";
    for (long long t = spec.t_min; t <= spec.t_max; ++t) {
        const DecodingReport rep = report(code, ChannelKind(ChannelKind::Kind::UIC,
                                                            static_cast<int>(t)));
        std::map<int, std::pair<Rational, Rational>> by_weight;  // weight -> (min, max)
        for (const CodewordStats& row : rep.per_codeword) {
            int weight = 0;
            for (Symbol s : row.codeword.symbols()) weight += s;
            auto [it, inserted] = by_weight.try_emplace(weight, row.f, row.f);
            if (!inserted) {
                if (row.f < it->second.first) it->second.first = row.f;
                if (row.f > it->second.second) it->second.second = row.f;
            }
        }
        for (const auto& [weight, f_range] : by_weight) {
            const bool bounded = weight >= 1 && weight <= spec.n - 1 && t >= 1 && t <= spec.n - 1;
            const Rational bound = bounded ? weight_bound_uic_0n1n(spec.n, t, weight) : Rational(0);
            csv << t << "," << weight << ","
                << (bounded ? to_decimal_string(bound, precision) : std::string{}) << ","
                << to_decimal_string(f_range.first, precision) << ","
                << to_decimal_string(f_range.second, precision) << ","
                << (bounded ? to_fraction_string(bound) : std::string{}) << ","
                << to_fraction_string(f_range.first) << "," << to_fraction_string(f_range.second)
                << "\n";
        }
    }
    return csv.str();
}

}  // namespace detail

// Runs the CLI against `args` (without the program name). Output goes to
// `out` or to the --out file; diagnostics go to `err`. Returns the process
// exit code: 0 success, 2 usage/parse error, 3 domain error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact unique-decoding probabilities and bounds for insertion/deletion channels",
                 "indel"};
    int precision = 6;
    std::string out_path;
    app.add_option("--precision", precision, "decimal digits for printed values")
        ->capture_default_str()
        ->check(CLI::Range(0, 1000));
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.require_subcommand(1);

    std::string body;

    // bound <kind>
    CLI::App* bound = app.add_subcommand("bound", "evaluate a closed-form upper bound");
    bound->require_subcommand(1);
    bound->fallthrough();
    static const std::vector<std::string> kBoundKinds = {
        "usc", "uic", "udc", "weight-uic-0n1n", "weight-uic-0n", "weight-udc-0n1n"};
    auto query = std::make_shared<BoundQuery>();
    auto d_value = std::make_shared<long long>(0);
    auto w_value = std::make_shared<long long>(0);
    for (const std::string& kind : kBoundKinds) {
        CLI::App* sub = bound->add_subcommand(kind);
        sub->fallthrough();
        sub->add_option("--n", query->n, "word length")->required();
        sub->add_option("--t", query->t, "number of errors")->required();
        if (kind == "usc" || kind == "uic" || kind == "weight-uic-0n")
            sub->add_option("--q", query->q, "alphabet size")->capture_default_str();
        if (kind == "udc") {
            sub->add_option("--q", query->q, "alphabet size (unused; bound is alphabet-free)")
                ->capture_default_str();
            sub->add_option("--d", *d_value, "half the guaranteed indel distance")->required();
        }
        if (kind.rfind("weight-", 0) == 0)
            sub->add_option("--w", *w_value, "codeword weight")->required();
        sub->callback([&body, &precision, kind, query, d_value, w_value, sub]() {
            BoundQuery q = *query;
            if (const auto* opt = sub->get_option_no_throw("--d"); opt && opt->count())
                q.d = *d_value;
            if (const auto* opt = sub->get_option_no_throw("--w"); opt && opt->count())
                q.w = *w_value;
            body = detail::render_bound(kind, q, precision);
        });
    }

    // exact
    auto exact_args = std::make_shared<detail::ExactArgs>();
    CLI::App* exact = app.add_subcommand("exact", "exact channel report for a code file");
    exact->fallthrough();
    exact->add_option("--code", exact_args->code_path, "code file (q=<int> n=<int> header)")
        ->required();
    exact->add_option("--channel", exact_args->channel, "usc | uic | udc | ubc")->required();
    exact->add_option("--t", exact_args->t, "number of errors")->required();
    exact->add_flag("--per-codeword", exact_args->per_codeword, "emit one row per codeword");
    exact->add_flag("--mc", exact_args->mc, "Monte Carlo sampling instead of exact enumeration");
    exact->add_option("--trials", exact_args->trials, "Monte Carlo trials")->capture_default_str();
    exact->add_option("--seed", exact_args->seed, "Monte Carlo seed")->capture_default_str();
    exact->callback(
        [&body, &precision, exact_args]() { body = detail::render_exact(*exact_args, precision); });

    // vt gen | decode | sweep
    CLI::App* vt = app.add_subcommand("vt", "Varshamov-Tenengolts tooling");
    vt->require_subcommand(1);
    vt->fallthrough();
    auto vt_n = std::make_shared<int>(1);
    auto vt_a = std::make_shared<int>(0);
    auto vt_received = std::make_shared<std::string>();
    auto vt_channel = std::make_shared<std::string>();
    auto vt_t = std::make_shared<int>(0);

    CLI::App* vt_gen = vt->add_subcommand("gen", "list the codewords of VT_a(n)");
    vt_gen->fallthrough();
    vt_gen->add_option("--n", *vt_n, "code length")->required();
    vt_gen->add_option("--a", *vt_a, "checksum residue")->capture_default_str();
    vt_gen->callback(
        [&body, vt_n, vt_a]() { body = detail::render_vt_gen(VTParams(*vt_n, *vt_a)); });

    CLI::App* vt_decode = vt->add_subcommand("decode", "decode a received word");
    vt_decode->fallthrough();
    vt_decode->add_option("--n", *vt_n, "code length")->required();
    vt_decode->add_option("--a", *vt_a, "checksum residue")->capture_default_str();
    vt_decode->add_option("--received", *vt_received, "received word (length n-1, n+1, or n+2)")
        ->required();
    vt_decode->callback([&body, vt_n, vt_a, vt_received]() {
        body = detail::render_vt_decode(VTParams(*vt_n, *vt_a), *vt_received);
    });

    CLI::App* vt_sweep = vt->add_subcommand("sweep", "report W and U for every residue a");
    vt_sweep->fallthrough();
    vt_sweep->add_option("--n", *vt_n, "code length")->required();
    vt_sweep->add_option("--channel", *vt_channel, "usc | uic | udc | ubc")->required();
    vt_sweep->add_option("--t", *vt_t, "number of errors")->required();
    vt_sweep->callback([&body, &precision, vt_n, vt_channel, vt_t]() {
        body = detail::render_vt_sweep(*vt_n, *vt_channel, *vt_t, precision);
    });

    // figure <id>
    CLI::App* figure = app.add_subcommand("figure", "emit CSV curve data");
    figure->require_subcommand(1);
    figure->fallthrough();
    auto spec = std::make_shared<FigureSpec>();
    auto vt_weight_t_max_set = std::make_shared<bool>(false);
    for (const std::string id : {"usc-bound", "uic-bound", "udc-bound", "vt-weight"}) {
        CLI::App* sub = figure->add_subcommand(id);
        sub->fallthrough();
        sub->add_option("--n", spec->n, "word length")->required();
        sub->add_option("--t-min", spec->t_min, "first t")->capture_default_str();
        if (id == "usc-bound" || id == "uic-bound")
            sub->add_option("--q", spec->q, "alphabet size")->capture_default_str();
        if (id == "udc-bound")
            sub->add_option("--d", spec->d, "half the guaranteed indel distance")->required();
        if (id == "vt-weight") {
            sub->add_option("--a", spec->a, "checksum residue")->capture_default_str();
            sub->add_option("--t-max", spec->t_max, "last t (default n-1)");
        } else {
            sub->add_option("--t-max", spec->t_max, "last t")->required();
        }
        sub->callback([&body, &precision, id, spec, sub]() {
            FigureSpec s = *spec;
            s.id = id;
            if (id == "vt-weight" && sub->count("--t-max") == 0) s.t_max = s.n - 1;
            body = detail::render_figure(s, precision);
        });
    }

    try {
        std::vector<const char*> argv;
        argv.push_back("indel");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open output file: " << out_path << "\n";
            return 2;
        }
        file << body;
    } else {
        out << body;
    }
    return 0;
}

}  // namespace cli
}  // namespace indel

#endif
