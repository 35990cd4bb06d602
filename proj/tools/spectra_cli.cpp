// Command-line front end: field construction, spectra, closed forms,
// verification, curve counts and coset partitions.
//
// Exit codes: 0 success, 1 usage error, 2 budget or applicability error,
// 3 verification mismatch.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectra/closed_form.hpp"
#include "spectra/coset.hpp"
#include "spectra/curve.hpp"
#include "spectra/field.hpp"
#include "spectra/spectral.hpp"
#include "spectra/spectrum.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Options {
    std::uint32_t p = 0;
    std::uint32_t n = 0;  // exactly one of n / m
    std::uint32_t m = 0;
    std::uint64_t d = 0;  // exactly one of d / s
    std::uint64_t s = 0;
    std::string format = "json";
    unsigned threads = 1;
    std::uint64_t max_elements = std::uint64_t{1} << 26;
    std::uint64_t max_pairs = std::uint64_t{1} << 34;
    std::vector<std::uint32_t> poly;
    std::int64_t psi = -1;
    std::string kind = "ds";
    // curve options
    std::uint64_t n1 = 1, n2 = 1;
    std::uint64_t alpha = 1, beta = 1;
    std::string config_path;
};

void apply_config(const CLI::App& app, Options& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + opt.config_path);
    json cfg = json::parse(in);
    auto take = [&](const char* flag, const char* key, auto& field) {
        if (cfg.contains(key) && app.count(flag) == 0) field = cfg.at(key);
    };
    take("--threads", "threads", opt.threads);
    take("--format", "format", opt.format);
    take("--max-elements", "max_elements", opt.max_elements);
    take("--max-pairs", "max_pairs", opt.max_pairs);
}

void apply_env(const CLI::App& app, Options& opt) {
    if (const char* env = std::getenv("SPECTRA_BUDGET_PAIRS"); env && app.count("--max-pairs") == 0)
        opt.max_pairs = std::stoull(env);
}

spectra::Field build_field_from(const Options& opt) {
    std::uint32_t n = opt.n ? opt.n : 2 * opt.m;
    std::optional<spectra::Elem> psi;
    if (opt.psi >= 0) psi = static_cast<spectra::Elem>(opt.psi);
    return spectra::Field::build(opt.p, n, opt.poly.empty() ? nullptr : &opt.poly, psi,
                                 {opt.max_elements});
}

std::uint64_t exponent_from(const Options& opt, const spectra::Field& fs) {
    if (opt.d) return opt.d;
    std::uint64_t pm = 1;
    for (std::uint32_t i = 0; i < opt.m; ++i) pm *= fs.p();
    return opt.s * (pm - 1);
}

void print_spectrum(const spectra::Spectrum& sp, const Options& opt,
                    const std::string& branch = {}) {
    if (opt.format == "csv") {
        std::cout << "value,frequency\n";
        for (auto [v, f] : sp.entries) std::cout << v << ',' << f << '\n';
        return;
    }
    if (opt.format == "table") {
        std::cout << (sp.kind == spectra::SpectrumKind::differential ? "differential"
                                                                     : "boomerang")
                  << " spectrum";
        if (!branch.empty()) std::cout << "  [" << branch << "]";
        std::cout << '\n';
        for (auto [v, f] : sp.entries) std::cout << "  " << v << " -> " << f << '\n';
        return;
    }
    ordered_json j = spectra::spectrum_to_json(sp);
    if (!branch.empty()) j["branch"] = branch;
    std::cout << j.dump(2) << '\n';
}

int run_spectrum(const Options& opt, bool boomerang) {
    auto fs = build_field_from(opt);
    auto pm = opt.s ? spectra::PowerMap::from_sm(fs, opt.s, opt.m)
                    : spectra::PowerMap::from_exponent(fs, opt.d);
    spectra::Spectrum sp = boomerang
                               ? spectra::boomerang_spectrum(pm, opt.threads, {opt.max_pairs})
                               : spectra::differential_spectrum(pm, opt.threads);
    print_spectrum(sp, opt);
    return 0;
}

int run_closed(const Options& opt, bool boomerang) {
    auto cf = spectra::case_flags(opt.p, opt.m, opt.s);
    auto sp = boomerang ? spectra::closed_form_bs(cf) : spectra::closed_form_ds(cf);
    print_spectrum(sp, opt, spectra::branch_name(cf.branch));
    return 0;
}

int run_verify(const Options& opt) {
    auto cf = spectra::case_flags(opt.p, opt.m, opt.s);
    auto fs = build_field_from(opt);
    auto pmap = spectra::PowerMap::from_sm(fs, opt.s, opt.m);
    bool boomerang = opt.kind == "bs";
    spectra::Spectrum brute =
        boomerang ? spectra::boomerang_spectrum(pmap, opt.threads, {opt.max_pairs})
                  : spectra::differential_spectrum(pmap, opt.threads);
    spectra::Spectrum closed =
        boomerang ? spectra::closed_form_bs(cf) : spectra::closed_form_ds(cf);

    if (brute == closed) {
        ordered_json j{{"match", true},
                       {"branch", spectra::branch_name(cf.branch)},
                       {"spectrum", spectra::spectrum_to_json(brute)}};
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "verification mismatch (p=" << opt.p << ", m=" << opt.m << ", s=" << opt.s
              << ", kind=" << opt.kind << ")\n";
    auto all_keys = brute.entries;
    all_keys.insert(closed.entries.begin(), closed.entries.end());
    for (auto [v, unused] : all_keys) {
        auto b = brute.entries.count(v) ? brute.entries.at(v) : 0;
        auto c = closed.entries.count(v) ? closed.entries.at(v) : 0;
        if (b != c)
            std::cout << "  value " << v << ": enumerated " << b << ", closed form " << c
                      << '\n';
    }
    return 3;
}

int run_curve(const Options& opt) {
    auto fs = build_field_from(opt);
    auto ci = spectra::make_curve(fs, opt.m, static_cast<spectra::Elem>(opt.alpha),
                                  static_cast<spectra::Elem>(opt.beta), opt.n1, opt.n2);
    auto c = spectra::classify_case(ci);  // UncoveredCase propagates as exit 2
    std::uint64_t closed = spectra::count_points_closed_form(ci);
    std::uint64_t brute = spectra::count_points_bruteforce(ci);
    ordered_json j{{"case", spectra::curve_case_name(c)},
                   {"N", closed},
                   {"bruteforce", brute},
                   {"match", closed == brute}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_partition(const Options& opt) {
    auto fs = build_field_from(opt);
    std::cout << spectra::partition_csv(fs, opt.m, opt.s);
    return 0;
}

int run_field_info(const Options& opt) {
    auto fs = build_field_from(opt);
    ordered_json j = fs.to_json();
    j["order"] = fs.order();
    std::cout << j.dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Power-mapping spectral analyzer over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Options opt;

    app.add_option("--threads", opt.threads, "worker count")->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--max-elements", opt.max_elements, "field element budget");
    app.add_option("--max-pairs", opt.max_pairs, "pair enumeration budget");
    app.add_option("--config", opt.config_path, "JSON config file");

    auto add_field_opts = [&](CLI::App* cmd, bool need_exponent) {
        cmd->add_option("--p", opt.p, "prime characteristic")->required();
        auto* on = cmd->add_option("--n", opt.n, "extension degree");
        auto* om = cmd->add_option("--m", opt.m, "half degree (n = 2m)");
        on->excludes(om);
        cmd->add_option("--poly", opt.poly, "modulus override, constant term first");
        cmd->add_option("--psi", opt.psi, "primitive element override");
        if (need_exponent) {
            auto* od = cmd->add_option("--d", opt.d, "exponent d");
            auto* os = cmd->add_option("--s", opt.s, "parameter s (d = s(p^m-1))");
            od->excludes(os);
        }
    };

    auto* c_ds = app.add_subcommand("ds", "differential spectrum by enumeration");
    add_field_opts(c_ds, true);
    auto* c_bs = app.add_subcommand("bs", "boomerang spectrum by enumeration");
    add_field_opts(c_bs, true);

    auto* c_dsc = app.add_subcommand("ds-closed", "closed-form differential spectrum");
    c_dsc->add_option("--p", opt.p)->required();
    c_dsc->add_option("--m", opt.m)->required();
    c_dsc->add_option("--s", opt.s)->required();
    auto* c_bsc = app.add_subcommand("bs-closed", "closed-form boomerang spectrum");
    c_bsc->add_option("--p", opt.p)->required();
    c_bsc->add_option("--m", opt.m)->required();
    c_bsc->add_option("--s", opt.s)->required();

    auto* c_verify = app.add_subcommand("verify", "enumerate and diff against the closed form");
    add_field_opts(c_verify, false);
    c_verify->add_option("--s", opt.s, "parameter s")->required();
    c_verify->add_option("--kind", opt.kind, "ds or bs")->check(CLI::IsMember({"ds", "bs"}));

    auto* c_curve = app.add_subcommand("curve", "affine curve point count");
    add_field_opts(c_curve, false);
    c_curve->add_option("--n1", opt.n1)->required();
    c_curve->add_option("--n2", opt.n2)->required();
    c_curve->add_option("--alpha", opt.alpha)->required();
    c_curve->add_option("--beta", opt.beta)->required();

    auto* c_part = app.add_subcommand("partition", "coset partition table (CSV)");
    add_field_opts(c_part, false);
    c_part->add_option("--s", opt.s, "parameter s")->required();

    auto* c_info = app.add_subcommand("field-info", "field construction summary");
    add_field_opts(c_info, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        apply_config(app, opt);
        apply_env(app, opt);

        // commands that need a field require one of n / m; exponent commands need d or s
        if (c_verify->parsed() || c_part->parsed()) {
            if (!opt.m) {
                std::cerr << "error: this command requires --m\n";
                return 1;
            }
        }
        if ((c_ds->parsed() || c_bs->parsed())) {
            if (!opt.n && !opt.m) {
                std::cerr << "error: one of --n / --m is required\n";
                return 1;
            }
            if (!opt.d && !opt.s) {
                std::cerr << "error: one of --d / --s is required\n";
                return 1;
            }
            if (opt.s && !opt.m) {
                std::cerr << "error: --s requires --m\n";
                return 1;
            }
        }
        if ((c_curve->parsed() || c_info->parsed()) && !opt.n && !opt.m) {
            std::cerr << "error: one of --n / --m is required\n";
            return 1;
        }
        if (c_curve->parsed() && !opt.m) {
            std::cerr << "error: curve requires --m\n";
            return 1;
        }

        if (c_ds->parsed()) return run_spectrum(opt, false);
        if (c_bs->parsed()) return run_spectrum(opt, true);
        if (c_dsc->parsed()) return run_closed(opt, false);
        if (c_bsc->parsed()) return run_closed(opt, true);
        if (c_verify->parsed()) return run_verify(opt);
        if (c_curve->parsed()) return run_curve(opt);
        if (c_part->parsed()) return run_partition(opt);
        if (c_info->parsed()) return run_field_info(opt);
        return 1;
    } catch (const spectra::FieldTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const spectra::PairBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const spectra::NotApplicable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const spectra::UncoveredCase& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const spectra::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
