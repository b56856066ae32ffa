// csd: rank-2 cluster scattering diagram tables, evaluation, and checks.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "csd/errors.hpp"
#include "csd/formulas.hpp"
#include "csd/ordering.hpp"
#include "csd/table_io.hpp"
#include "csd/verify.hpp"

namespace {

using namespace csd;

struct Options {
    int degree = 7;
    long delta1 = 1;
    long delta2 = 1;
    long grid = 4;
    int level = -1; // default: table degree
    long delta = 2; // reineke
    int k_max = -1; // reineke; default degree / 2
    std::string cache;
    std::string out;
    std::string format = "json";
};

void emit(const std::string& content, const std::string& out) {
    if (out.empty())
        std::cout << content;
    else
        atomic_write(out, content);
}

// Load the cache when present, extend it to the requested degree, and keep
// the extension for the next run.
ExponentTable obtain_table(const Options& opt) {
    ExponentTable table;
    bool from_cache = false;
    if (!opt.cache.empty() && std::filesystem::exists(opt.cache)) {
        table = load_table(opt.cache);
        from_cache = true;
    } else {
        table = seed_table();
    }
    if (table.max_degree < opt.degree) {
        while (table.max_degree < opt.degree) {
            table = advance_degree(table);
            if (opt.degree > 7)
                std::cerr << "degree " << table.max_degree << " / " << opt.degree << "\n";
        }
        if (!opt.cache.empty()) save_table(table, opt.cache);
    } else if (!from_cache && !opt.cache.empty()) {
        save_table(table, opt.cache);
    }
    return table.max_degree > opt.degree ? truncate_table(table, opt.degree) : table;
}

int cmd_table(const Options& opt) {
    ExponentTable table = obtain_table(opt);
    if (opt.format == "csv")
        emit(table_to_csv(table), opt.out);
    else if (opt.format == "latex")
        emit(table_to_latex(table), opt.out);
    else
        emit(table_to_json(table).dump(2) + "\n", opt.out);
    return 0;
}

int cmd_eval(const Options& opt) {
    std::vector<WallRecord> walls = eval_walls(obtain_table(opt), opt.delta1, opt.delta2);
    if (opt.format == "csv")
        emit(walls_to_csv(walls), opt.out);
    else
        emit(walls_to_json(walls).dump(2) + "\n", opt.out);
    return 0;
}

int cmd_verify(const Options& opt) {
    ExponentTable table = obtain_table(opt);
    int level = opt.level < 0 ? table.max_degree : opt.level;
    std::vector<CheckResult> report = run_verification(table, opt.grid, level, true);
    bool all_pass = true;
    std::ostringstream os;
    for (const CheckResult& r : report) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.pass && !r.detail.empty()) os << "  [" << r.detail << "]";
        os << "\n";
        all_pass = all_pass && r.pass;
    }
    os << (all_pass ? "verification passed\n" : "verification FAILED\n");
    emit(os.str(), opt.out);
    return all_pass ? 0 : 1;
}

int cmd_reineke(const Options& opt) {
    ExponentTable table = obtain_table(opt);
    int k_max = opt.k_max < 0 ? table.max_degree / 2 : opt.k_max;
    std::ostringstream os;
    std::vector<Rational> lhs = reineke_table_series(table, opt.delta, k_max);
    std::vector<Rational> rhs = reineke_closed_series(opt.delta, k_max);
    os << "delta = " << opt.delta << ", up to t^" << k_max << "\n";
    os << "table series:      ";
    for (const Rational& c : lhs) os << c << " ";
    os << "\nclosed-form series:";
    for (const Rational& c : rhs) os << " " << c;
    os << "\n";
    bool pass = lhs == rhs;
    os << (pass ? "PASS\n" : "FAIL\n");
    emit(os.str(), opt.out);
    return pass ? 0 : 1;
}

int cmd_plot_data(const Options& opt) {
    std::vector<WallRecord> walls = eval_walls(obtain_table(opt), opt.delta1, opt.delta2);
    if (opt.format == "csv")
        emit(plot_data_csv(walls), opt.out);
    else
        emit(plot_data_json(walls, opt.delta1, opt.delta2).dump(2) + "\n", opt.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-2 cluster scattering diagram toolkit"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* sub) {
        sub->add_option("--degree", opt.degree, "table degree (default 7)")->check(CLI::Range(2, 1 << 20));
        sub->add_option("--cache", opt.cache, "table cache file (read and extend)");
        sub->add_option("--out", opt.out, "output file (default stdout)");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "latex"}));
    };

    CLI::App* table = app.add_subcommand("table", "compute a wall-exponent table");
    add_common(table);

    CLI::App* eval = app.add_subcommand("eval", "evaluate walls at (delta1, delta2)");
    add_common(eval);
    eval->add_option("--delta1", opt.delta1)->check(CLI::NonNegativeNumber);
    eval->add_option("--delta2", opt.delta2)->check(CLI::NonNegativeNumber);

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify);
    verify->add_option("--grid", opt.grid, "oracle grid bound (default 4)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--level", opt.level, "oracle group level (default: table degree)");

    CLI::App* reineke = app.add_subcommand("reineke", "Reineke series cross-check on the (1,1) ray");
    add_common(reineke);
    reineke->add_option("--delta1", opt.delta, "symmetric delta (default 2)")
        ->check(CLI::PositiveNumber);
    reineke->add_option("--kmax", opt.k_max, "series degree (default: table degree / 2)");

    CLI::App* plot = app.add_subcommand("plot-data", "emit plot-ready ray data");
    add_common(plot);
    plot->add_option("--delta1", opt.delta1)->check(CLI::NonNegativeNumber);
    plot->add_option("--delta2", opt.delta2)->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
        if (table->parsed()) return cmd_table(opt);
        if (eval->parsed()) return cmd_eval(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (reineke->parsed()) return cmd_reineke(opt);
        if (plot->parsed()) return cmd_plot_data(opt);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    } catch (const CacheCorruptError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
