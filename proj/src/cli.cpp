#include "cubeladder/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cubeladder/cf_engine.hpp"
#include "cubeladder/errors.hpp"
#include "cubeladder/ladder.hpp"
#include "cubeladder/stats.hpp"
#include "cubeladder/table.hpp"
#include "cubeladder/verify.hpp"

namespace cubeladder::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* columns_help = R"(CSV columns (header row always present):
  expand   n,b,p_prev,q_prev
  ladder   n,k,r,s,t,b_n,B_k,combination        (combination = r*b_n - s*B_k)
  verify   check,status,cases,failures,detail
  stats    k,count,empirical,expected,deviation
  figure 1|2  kind,side,index,quotient,n,k      (kind = rung | connection)
  figure 3    ordinal,n,k,n_minus_k
Summaries (connection counts, deviations, verdicts) are written to stderr;
in JSON output they also appear under "meta". Big integers are decimal strings.
Exit codes: 0 success, 1 failed check or empty sample, 2 usage or input error.)";

struct Options {
    std::int64_t m = 0;
    int power = 1;
    std::size_t length = 0;
    std::string format = "csv";
    std::optional<std::string> out_path;
    std::uint64_t cutoff = default_cutoff;
    int which = 0;
};

std::string str(std::size_t v) { return std::to_string(v); }

Json base_meta(const std::string& command, const Options& opt) {
    Json meta;
    meta["command"] = command;
    meta["m"] = opt.m;
    meta["power"] = opt.power;
    meta["length"] = opt.length;
    meta["version"] = version;
    return meta;
}

void emit(const Table& table, const Json& meta, const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        write_json(table, meta, out);
    } else {
        write_csv(table, out);
    }
}

int cmd_expand(const Options& opt, std::ostream& out, std::ostream&) {
    const Expansion exp = expand(Surd(opt.m, opt.power), opt.length);
    Table table{{{"n", ColumnKind::index},
                 {"b", ColumnKind::bigint},
                 {"p_prev", ColumnKind::bigint},
                 {"q_prev", ColumnKind::bigint}},
                {}};
    for (const Triplet& tr : exp.triplets()) {
        table.add_row({str(tr.n), to_decimal(tr.b), to_decimal(tr.p_prev), to_decimal(tr.q_prev)});
    }
    emit(table, base_meta("expand", opt), opt, out);
    return ok;
}

int cmd_ladder(const Options& opt, std::ostream& out, std::ostream& err) {
    const Ladder ladder = build_ladder(opt.m, opt.length);
    const auto& conns = ladder.connections();
    Table table{{{"n", ColumnKind::index},
                 {"k", ColumnKind::index},
                 {"r", ColumnKind::bigint},
                 {"s", ColumnKind::bigint},
                 {"t", ColumnKind::bigint},
                 {"b_n", ColumnKind::bigint},
                 {"B_k", ColumnKind::bigint},
                 {"combination", ColumnKind::bigint}},
                {}};
    for (const Connection& c : conns) {
        table.add_row({str(c.n), str(c.k), to_decimal(c.r), to_decimal(c.s), to_decimal(c.t),
                       to_decimal(ladder.xi().b(c.n)), to_decimal(ladder.eta().b(c.k)),
                       to_decimal(quotient_combination(c, ladder.xi(), ladder.eta()))});
    }

    std::size_t pairs = 0, pairs_ok = 0, triples = 0, triples_ok = 0;
    auto consecutive = [](const Connection& a, const Connection& b) { return b.n == a.n + 1 && b.k == a.k + 1; };
    for (std::size_t i = 1; i < conns.size(); ++i) {
        if (!consecutive(conns[i - 1], conns[i])) continue;
        ++pairs;
        pairs_ok += exchange_check(conns[i - 1], conns[i]) ? 1 : 0;
        if (i >= 2 && consecutive(conns[i - 2], conns[i - 1])) {
            ++triples;
            triples_ok += middle_zero_check(conns[i - 2], conns[i - 1], conns[i], ladder.xi(), ladder.eta()) ? 1 : 0;
        }
    }

    Json meta = base_meta("ladder", opt);
    meta.erase("power");
    meta["connections"] = conns.size();
    meta["consecutive_pairs"] = pairs;
    meta["exchange_passed"] = pairs_ok;
    meta["consecutive_triples"] = triples;
    meta["middle_zero_passed"] = triples_ok;
    emit(table, meta, opt, out);

    err << "connections=" << conns.size() << " consecutive_pairs=" << pairs << " exchange_passed=" << pairs_ok
        << " consecutive_triples=" << triples << " middle_zero_passed=" << triples_ok << '\n';
    return ok;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    const VerificationReport report = verify_all(opt.m, opt.length);
    Table table{{{"check", ColumnKind::text},
                 {"status", ColumnKind::text},
                 {"cases", ColumnKind::index},
                 {"failures", ColumnKind::index},
                 {"detail", ColumnKind::text}},
                {}};
    for (const CheckResult& check : report.checks) {
        std::string detail;
        for (std::size_t i = 0; i < check.failures.size() && i < 5; ++i) {
            detail += (i ? ";" : "") + check.failures[i];
        }
        std::replace(detail.begin(), detail.end(), ',', ' ');
        table.add_row({check.name, check.passed() ? "pass" : "fail", str(check.cases), str(check.failures.size()),
                       detail});
        for (const std::string& f : check.failures) err << "FAIL " << check.name << ' ' << f << '\n';
    }

    Json meta = base_meta("verify", opt);
    meta.erase("power");
    meta["oracle_length"] = report.oracle_length;
    meta["failures"] = report.failure_count();
    meta["passed"] = report.passed();
    emit(table, meta, opt, out);

    err << "verify m=" << opt.m << " length=" << opt.length << " checks=" << report.checks.size()
        << " failures=" << report.failure_count() << " result=" << (report.passed() ? "PASS" : "FAIL") << '\n';
    return report.passed() ? ok : check_failed;
}

int cmd_stats(const Options& opt, std::ostream& out, std::ostream& err) {
    QuotientStream stream(Surd(opt.m, opt.power));
    stream.next();  // b_0 is the integer part, not a Gauss-map quotient
    QuotientHistogram hist;
    hist.cutoff = opt.cutoff;
    for (std::size_t n = 1; n <= opt.length; ++n) hist.add(stream.next());

    const KuzminComparison cmp = kuzmin_distance(hist);
    Table table{{{"k", ColumnKind::index},
                 {"count", ColumnKind::index},
                 {"empirical", ColumnKind::real},
                 {"expected", ColumnKind::real},
                 {"deviation", ColumnKind::real}},
                {}};
    for (const KuzminRow& row : cmp.rows) {
        table.add_row({str(row.k), str(row.count), format_real(row.empirical), format_real(row.expected),
                       format_real(row.deviation)});
    }

    Json meta = base_meta("stats", opt);
    meta["cutoff"] = opt.cutoff;
    meta["samples"] = hist.total;
    meta["tail_count"] = hist.tail;
    meta["tail_empirical"] = cmp.tail_empirical;
    meta["tail_expected"] = cmp.tail_expected;
    meta["max_deviation"] = cmp.max_deviation;
    meta["total_variation"] = cmp.total_variation;
    emit(table, meta, opt, out);

    err << "samples=" << hist.total << " tail_count=" << hist.tail << " tail_empirical="
        << format_real(cmp.tail_empirical) << " tail_expected=" << format_real(cmp.tail_expected)
        << " max_deviation=" << format_real(cmp.max_deviation) << " total_variation="
        << format_real(cmp.total_variation) << '\n';
    return ok;
}

int cmd_figure(Options opt, std::ostream& out, std::ostream& err) {
    opt.m = opt.which == 2 ? 6 : 2;
    const Ladder ladder = build_ladder(opt.m, opt.length);
    const auto& conns = ladder.connections();
    if (!noncrossing_check(ladder)) {
        err << "error: exported ladder crosses itself\n";
        return check_failed;
    }

    Json meta = base_meta("figure", opt);
    meta.erase("power");
    meta["figure"] = opt.which;
    meta["connections"] = conns.size();

    Table table;
    if (opt.which == 3) {
        table.columns = {{"ordinal", ColumnKind::index},
                         {"n", ColumnKind::index},
                         {"k", ColumnKind::index},
                         {"n_minus_k", ColumnKind::index}};
        for (std::size_t i = 0; i < conns.size(); ++i) {
            const long diff = static_cast<long>(conns[i].n) - static_cast<long>(conns[i].k);
            table.add_row({str(i + 1), str(conns[i].n), str(conns[i].k), std::to_string(diff)});
        }
    } else {
        table.columns = {{"kind", ColumnKind::text},     {"side", ColumnKind::text},
                         {"index", ColumnKind::index},   {"quotient", ColumnKind::bigint},
                         {"n", ColumnKind::index},       {"k", ColumnKind::index}};
        for (const Expansion* exp : {&ladder.xi(), &ladder.eta()}) {
            const std::string side = exp->surd().power() == 1 ? "xi" : "eta";
            for (const Triplet& tr : exp->triplets()) {
                table.add_row({"rung", side, str(tr.n), to_decimal(tr.b), "", ""});
            }
        }
        for (const Connection& c : conns) table.add_row({"connection", "", "", "", str(c.n), str(c.k)});
    }
    emit(table, meta, opt, out);
    err << "figure=" << opt.which << " m=" << opt.m << " length=" << opt.length << " connections=" << conns.size()
        << '\n';
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Continued-fraction ladders of (cbrt m, cbrt m^2) with exact arithmetic", "cubeladder"};
    app.footer(columns_help);
    app.require_subcommand(1);
    app.set_version_flag("--version", version);

    Options opt;
    bool length_given = false;
    auto add_common = [&](CLI::App* sub, bool with_m) {
        if (with_m) sub->add_option("--m", opt.m, "radicand, a noncube integer >= 2")->required();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--out", opt.out_path, "output file (default: stdout)");
    };
    auto add_power = [&](CLI::App* sub) {
        sub->add_option("--power", opt.power, "1 for cbrt(m), 2 for cbrt(m^2)")
            ->check(CLI::IsMember({1, 2}))
            ->capture_default_str();
    };

    CLI::App* expand_cmd = app.add_subcommand("expand", "dump the triplets (n, b_n, p_{n-1}, q_{n-1}) for n = 0..N");
    add_common(expand_cmd, true);
    add_power(expand_cmd);
    expand_cmd->add_option("--length", opt.length, "last triplet index N")->required();

    CLI::App* ladder_cmd = app.add_subcommand("ladder", "list the connections with n, k <= N and their certificates");
    add_common(ladder_cmd, true);
    ladder_cmd->add_option("--length", opt.length, "ladder length N")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run every identity and ladder check; exit 1 on any failure");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--length", opt.length, "ladder length N")->required();

    CLI::App* stats_cmd = app.add_subcommand("stats", "compare b_1..b_N against the Kuzmin law");
    add_common(stats_cmd, true);
    add_power(stats_cmd);
    stats_cmd->add_option("--length", opt.length, "number of partial quotients N")->required();
    stats_cmd->add_option("--cutoff", opt.cutoff, "largest quotient with its own row")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* figure_cmd = app.add_subcommand("figure", "export figure data (1: m=2 ladder, 2: m=6 ladder, 3: n-k, m=2)");
    add_common(figure_cmd, false);
    figure_cmd->add_option("--which", opt.which, "figure id")->required()->check(CLI::IsMember({1, 2, 3}));
    figure_cmd->add_option("--length", opt.length, "ladder length N (default 1000)")
        ->each([&](const std::string&) { length_given = true; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (opt.out_path) {
        file = std::make_unique<std::ofstream>(*opt.out_path, std::ios::binary);
        if (!*file) {
            err << "error: cannot open " << *opt.out_path << " for writing\n";
            return usage_error;
        }
        sink = file.get();
    }

    try {
        if (*expand_cmd) return cmd_expand(opt, *sink, err);
        if (*ladder_cmd) return cmd_ladder(opt, *sink, err);
        if (*verify_cmd) return cmd_verify(opt, *sink, err);
        if (*stats_cmd) return cmd_stats(opt, *sink, err);
        if (!length_given) opt.length = 1000;
        return cmd_figure(opt, *sink, err);
    } catch (const CubeError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const EmptyHistogram& e) {
        err << "error: " << e.what() << '\n';
        return check_failed;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return check_failed;
    }
}

}  // namespace cubeladder::cli
