#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "isogsum/charsums.hpp"
#include "isogsum/classnumber.hpp"
#include "isogsum/congruence.hpp"
#include "isogsum/curves.hpp"
#include "isogsum/error.hpp"

namespace isogsum::cli {

parameter parameter::parse(std::string const & text)
{
    auto to_int = [&](std::string const & s) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (std::exception const &) {
            used = 0;
        }
        if (s.empty() || used != s.size())
            throw error(errc::invalid_argument, "not an integer or n/d: '" + text + "'");
        return static_cast<std::int64_t>(v);
    };
    parameter out;
    auto const slash = text.find('/');
    if (slash == std::string::npos) {
        out.num = to_int(text);
        return out;
    }
    out.num = to_int(text.substr(0, slash));
    out.den = to_int(text.substr(slash + 1));
    if (out.den == 0)
        throw error(errc::invalid_argument, "zero denominator in '" + text + "'");
    if (out.den < 0) {
        out.num = -out.num;
        out.den = -out.den;
    }
    auto const g = std::gcd(out.num, out.den);
    out.num /= g;
    out.den /= g;
    return out;
}

std::optional<field_element> parameter::at(prime p) const
{
    field_element const d(den, p);
    if (d.is_zero())
        return std::nullopt;
    return field_element(num, p) / d;
}

std::string parameter::str() const
{
    return is_integer() ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

struct row
{
    sum_report report;
    std::string note;
    std::vector<std::string> preamble;
};

struct slot
{
    bool ready = false;
    std::vector<row> rows;
    std::exception_ptr failure;
};

/* Evaluates job on every prime with a worker pool; rows are handed to emit
 * in ascending prime order as soon as they are available. */
void sweep(std::vector<prime> const & primes, unsigned workers,
           std::function<std::vector<row>(prime)> const & job,
           std::function<void(row const &)> const & emit)
{
    std::vector<slot> slots(primes.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next { 0 };

    auto work = [&] {
        for (std::size_t i; (i = next++) < primes.size();) {
            slot s;
            try {
                s.rows = job(primes[i]);
            } catch (...) {
                s.failure = std::current_exception();
            }
            s.ready = true;
            {
                std::lock_guard lock(mu);
                slots[i] = std::move(s);
            }
            cv.notify_all();
        }
    };

    std::vector<std::jthread> pool;
    unsigned const n = std::max(1u, std::min<unsigned>(workers,
                static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1))));
    for (unsigned t = 0; t < n; ++t)
        pool.emplace_back(work);

    for (std::size_t i = 0; i < primes.size(); ++i) {
        slot s;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return slots[i].ready; });
            s = std::move(slots[i]);
        }
        if (s.failure) {
            next = primes.size();
            std::rethrow_exception(s.failure);
        }
        for (auto const & r : s.rows)
            emit(r);
    }
}

std::vector<prime> primes_in(std::int64_t lo, std::int64_t hi)
{
    std::vector<prime> out;
    for (std::int64_t p = std::max<std::int64_t>(lo, 5); p <= hi; ++p) {
        if (is_prime(static_cast<std::uint64_t>(p)))
            out.emplace_back(p);
    }
    return out;
}

std::string join_points(std::vector<curve_point> const & pts)
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < pts.size(); ++i)
        os << (i ? ", " : "") << pts[i];
    os << "}";
    return os.str();
}

class printer
{
    std::ostream & out_;
    output_format format_;
    bool header_done_ = false;

    public:

    std::size_t rows = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;

    printer(std::ostream & out, output_format f) : out_(out), format_(f) {}

    void section(std::string const & title)
    {
        out_ << "# " << title << "\n";
        if (format_ == output_format::table)
            header_done_ = false;
    }

    void header()
    {
        if (header_done_)
            return;
        header_done_ = true;
        if (format_ == output_format::tsv)
            out_ << "p\ta\tb\tS\tquotient\thstar\terror\tdivisible\tidentity\n";
        else
            out_ << fmt::format("{:>10} {:>10} {:>10} {:>14} {:>9} {:>6} {:>6} {:>4} {:>4}\n",
                                "p", "a", "b", "S", "quotient", "hstar", "error",
                                "div", "id");
    }

    void emit(row const & r)
    {
        for (auto const & line : r.preamble)
            out_ << "# " << line << "\n";
        header();
        auto const & s = r.report;
        if (format_ == output_format::tsv) {
            out_ << s.p << '\t' << s.a << '\t' << s.b << '\t' << s.sum << '\t'
                 << s.quotient << '\t' << s.hstar << '\t' << s.error << '\t'
                 << int(s.divisible) << '\t' << int(s.identity_holds) << '\n';
        } else {
            out_ << fmt::format("{:>10} {:>10} {:>10} {:>14} {:>9} {:>6} {:>6} {:>4} {:>4}",
                                s.p, s.a, s.b, s.sum, s.quotient, s.hstar, s.error,
                                s.divisible ? "yes" : "NO",
                                s.identity_holds ? "yes" : "NO");
            if (!r.note.empty())
                out_ << "  " << r.note;
            out_ << '\n';
        }
        ++rows;
        (s.passed() ? passed : failed) += 1;
    }

    void summary()
    {
        out_ << "# rows=" << rows << " passed=" << passed << " failed=" << failed
             << " skipped=" << skipped << "\n";
    }
};

std::vector<row> dirichlet_row(prime p)
{
    row r;
    auto & s = r.report;
    s.p = p.signed_value();
    s.sum = dirichlet_sum(p);
    s.hstar = hp_star(p);
    s.divisible = s.sum % s.p == 0;
    s.quotient = s.divisible ? -(s.sum / s.p) : 0;
    s.identity_holds = s.divisible && s.quotient == s.hstar;
    return { r };
}

std::vector<row> lemma_rows(prime p, std::optional<std::int64_t> k)
{
    std::vector<row> rows;
    auto one = [&](std::int64_t kk) {
        row r;
        auto & s = r.report;
        s.p = p.signed_value();
        s.a = kk;
        s.hstar = delta(kk, p);
        try {
            s.sum = quad_lemma_sum(kk, p);
        } catch (error const & e) {
            if (e.code() != errc::identity_failed)
                throw;
            r.note = e.what();
            rows.push_back(r);
            return;
        }
        s.divisible = s.sum % s.p == 0;
        s.quotient = s.divisible ? -(s.sum / s.p) : 0;
        s.identity_holds = s.divisible && s.quotient == s.hstar;
        rows.push_back(r);
    };
    if (k) {
        if (field_element(*k, p).is_zero())
            return rows;
        one(*k);
    } else {
        for (std::int64_t kk = 1; kk < p.signed_value(); ++kk)
            one(kk);
    }
    return rows;
}

std::vector<row> pair_row(prime p, parameter const & a, parameter const & b,
                          bool dual)
{
    auto fa = a.at(p);
    auto fb = b.at(p);
    if (!fa || !fb || !good_reduction_pair(*fa, *fb))
        return {};
    row r;
    if (a.is_integer() && b.is_integer())
        r.report = dual ? s_tau_hat(a.num, b.num, p) : s_tau(a.num, b.num, p);
    else
        r.report = dual ? s_tau_hat(*fa, *fb) : s_tau(*fa, *fb);
    return { r };
}

std::vector<row> cm_row(prime p, cm_case c, bool show_points)
{
    if (!cm_split(c, p))
        return {};
    auto const rep = cm_weighted_sum(c, p);
    row r;
    r.report = rep.report;
    if (c == cm_case::minus7)
        r.note = fmt::format("xi={} unshifted={}{}", rep.xi, rep.unshifted_sum,
                             rep.unshifted_matches ? "" : " (unshifted identity fails)");
    if (show_points) {
        cm_endomorphism const phi(c, p);
        r.preamble.push_back("p=" + std::to_string(p.value()) + " E(F_p) = "
                             + join_points(enumerate_points(phi.curve())));
        r.preamble.push_back("p=" + std::to_string(p.value()) + " phi(E(F_p)) = "
                             + join_points(phi.image()));
    }
    return { r };
}

void run_sweep(run_config const & cfg, printer & pr,
               std::function<std::vector<row>(prime)> const & job)
{
    auto const primes = primes_in(cfg.lo, cfg.hi);
    sweep(primes, cfg.workers, job, [&](row const & r) { pr.emit(r); });
}

std::size_t count_skipped(run_config const & cfg,
                          std::function<bool(prime)> const & applicable)
{
    std::size_t n = 0;
    for (auto const p : primes_in(cfg.lo, cfg.hi))
        n += applicable(p) ? 0 : 1;
    return n;
}

bool pair_applicable(prime p, parameter const & a, parameter const & b)
{
    auto fa = a.at(p);
    auto fb = b.at(p);
    return fa && fb && good_reduction_pair(*fa, *fb);
}

void do_pair(run_config const & cfg, printer & pr, bool dual)
{
    pr.section(std::string(dual ? "dual" : "main") + " a=" + cfg.a.str()
               + " b=" + cfg.b.str());
    run_sweep(cfg, pr, [&](prime p) { return pair_row(p, cfg.a, cfg.b, dual); });
    pr.skipped += count_skipped(cfg, [&](prime p) {
        return pair_applicable(p, cfg.a, cfg.b);
    });
}

void do_cm(run_config const & cfg, printer & pr, cm_case c)
{
    pr.section("cm case=" + std::string(to_string(c)));
    run_sweep(cfg, pr, [&](prime p) { return cm_row(p, c, cfg.show_points); });
    pr.skipped += count_skipped(cfg, [&](prime p) { return cm_split(c, p); });
}

int do_search(run_config const & cfg, std::ostream & out)
{
    auto const rep = vanishing_residues(cfg.a.num, cfg.b.num);
    out << "mod " << rep.modulus << ":";
    for (auto r : rep.residues)
        out << " " << r;
    if (rep.residues.empty())
        out << " none";
    out << "\n";
    out << "# working modulus " << rep.working_modulus << ", witnesses "
        << rep.witnesses.size() << " primes up to " << rep.exhaustive_below << "\n";
    for (auto const & e : rep.excluded) {
        if (e.good_reduction)
            out << "# excluded p=" << e.p << " (p <= |a|) R=" << e.error << "\n";
        else
            out << "# excluded p=" << e.p << " (bad reduction)\n";
    }
    for (auto r : rep.missing_classes)
        out << "# no witness prime in class " << r << " mod " << rep.working_modulus << "\n";
    for (auto r : rep.periodicity_violations)
        out << "# periodicity violated in class " << r << " mod " << rep.working_modulus << "\n";
    bool const clean = rep.missing_classes.empty() && rep.periodicity_violations.empty();
    return cfg.strict && !clean ? exit_identity_failure : exit_ok;
}

} // namespace

int run(run_config const & cfg, std::ostream & out, std::ostream & err)
{
    try {
        if (cfg.cmd == command::search)
            return do_search(cfg, out);

        printer pr(out, cfg.format);
        switch (cfg.cmd) {
            case command::dirichlet:
                pr.section("dirichlet");
                run_sweep(cfg, pr, dirichlet_row);
                break;
            case command::lemma:
                pr.section("lemma" + (cfg.k ? " k=" + std::to_string(*cfg.k) : std::string()));
                run_sweep(cfg, pr, [&](prime p) { return lemma_rows(p, cfg.k); });
                break;
            case command::main:
                do_pair(cfg, pr, false);
                break;
            case command::dual:
                do_pair(cfg, pr, true);
                break;
            case command::cm:
                do_cm(cfg, pr, *cfg.cm);
                break;
            case command::all:
                pr.section("dirichlet");
                run_sweep(cfg, pr, dirichlet_row);
                do_pair(cfg, pr, false);
                do_pair(cfg, pr, true);
                for (auto c : { cm_case::minus1, cm_case::minus2, cm_case::minus7 })
                    do_cm(cfg, pr, c);
                break;
            case command::search:
                break;
        }
        pr.summary();
        return cfg.strict && pr.failed ? exit_identity_failure : exit_ok;
    } catch (error const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

namespace {

unsigned default_workers()
{
    if (char const * env = std::getenv(workers_env)) {
        try {
            long v = std::stol(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (std::exception const &) {
        }
    }
    return 1;
}

struct raw_options
{
    std::string a, b, primes, cm_case_text, format = "table";
    std::int64_t k = 0;
    unsigned workers = 0;
    bool strict = false;
    bool show_points = false;
};

} // namespace

int main(int argc, char const * const * argv, std::ostream & out, std::ostream & err)
{
    CLI::App app { "Weighted character sums of 2-isogenies and class numbers" , "isogsum" };
    app.require_subcommand(1);
    raw_options raw;
    raw.workers = default_workers();

    struct sub_spec { char const * name; command cmd; char const * help; };
    sub_spec const specs[] = {
        { "dirichlet", command::dirichlet, "Dirichlet's sum versus the forms class number" },
        { "lemma", command::lemma, "sum u ((u^2 + k)/p) versus -p delta_k" },
        { "main", command::main, "S_tau for the pair (a, b)" },
        { "dual", command::dual, "S_tau_hat for the pair (a, b)" },
        { "cm", command::cm, "CM endomorphism sums (--case -1, -2 or -7)" },
        { "search", command::search, "congruence classes where R_{a,b} vanishes" },
        { "all", command::all, "dirichlet, main, dual and every CM case" },
    };
    std::vector<std::pair<CLI::App *, command>> subs;
    std::vector<std::pair<CLI::App *, std::vector<CLI::Option *>>> opts;
    for (auto const & s : specs) {
        CLI::App * sub = app.add_subcommand(s.name, s.help);
        std::vector<CLI::Option *> o;
        o.push_back(sub->add_option("--a", raw.a, "integer or n/d"));
        o.push_back(sub->add_option("--b", raw.b, "integer or n/d"));
        o.push_back(sub->add_option("--primes", raw.primes, "prime range lo..hi (lo > 3)"));
        o.push_back(sub->add_option("--case", raw.cm_case_text, "CM discriminant: -1, -2 or -7"));
        o.push_back(sub->add_option("--k", raw.k, "fixed k for the lemma sum"));
        sub->add_option("--format", raw.format, "table or tsv")
            ->check(CLI::IsMember({ "table", "tsv" }));
        sub->add_option("--workers", raw.workers, std::string("worker threads (default $")
                        + workers_env + " or 1)");
        sub->add_flag("--strict", raw.strict, "exit 1 when any check fails");
        sub->add_flag("--show-points", raw.show_points, "list E(F_p) and the image (cm)");
        subs.emplace_back(sub, s.cmd);
        opts.emplace_back(sub, o);
    }

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i)
        args.emplace_back(argv[i]);

    auto usage = [&](std::string const & msg) {
        err << "error: " << msg << "\n" << app.help();
        return exit_usage;
    };

    try {
        app.parse(args);
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return exit_ok;
    } catch (CLI::ParseError const & e) {
        return usage(e.what());
    }

    run_config cfg;
    CLI::App * active = nullptr;
    std::vector<CLI::Option *> const * active_opts = nullptr;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].first->parsed()) {
            active = subs[i].first;
            cfg.cmd = subs[i].second;
            active_opts = &opts[i].second;
        }
    }
    if (!active)
        return usage("no command given");
    auto given = [&](std::size_t idx) { return (*active_opts)[idx]->count() > 0; };
    bool const has_a = given(0), has_b = given(1), has_primes = given(2),
               has_case = given(3), has_k = given(4);

    bool const takes_pair = cfg.cmd == command::main || cfg.cmd == command::dual
        || cfg.cmd == command::search || cfg.cmd == command::all;
    if ((has_a || has_b) && !takes_pair)
        return usage("--a/--b are not valid with this command");
    if (has_case && cfg.cmd != command::cm)
        return usage("--case is only valid with the cm command");
    if (has_k && cfg.cmd != command::lemma)
        return usage("--k is only valid with the lemma command");
    if (cfg.cmd == command::cm && !has_case)
        return usage("cm needs --case -1, -2 or -7");
    if ((cfg.cmd == command::main || cfg.cmd == command::dual || cfg.cmd == command::search)
            && !(has_a && has_b))
        return usage("this command needs --a and --b");
    if (has_primes && cfg.cmd == command::search)
        return usage("--primes is not used by search");

    try {
        if (has_a)
            cfg.a = parameter::parse(raw.a);
        if (has_b)
            cfg.b = parameter::parse(raw.b);
    } catch (error const & e) {
        return usage(e.what());
    }
    if (cfg.cmd == command::search) {
        if (!cfg.a.is_integer() || !cfg.b.is_integer() || cfg.a.num == 0)
            return usage("search needs integers a != 0 and b");
    }

    if (has_primes) {
        auto const dots = raw.primes.find("..");
        try {
            if (dots == std::string::npos) {
                cfg.lo = cfg.hi = std::stoll(raw.primes);
            } else {
                cfg.lo = std::stoll(raw.primes.substr(0, dots));
                cfg.hi = std::stoll(raw.primes.substr(dots + 2));
            }
        } catch (std::exception const &) {
            return usage("--primes expects lo..hi");
        }
    }
    if (cfg.lo <= 3 || cfg.hi < cfg.lo)
        return usage("--primes needs 3 < lo <= hi");

    if (has_case) {
        if (raw.cm_case_text == "-1")
            cfg.cm = cm_case::minus1;
        else if (raw.cm_case_text == "-2")
            cfg.cm = cm_case::minus2;
        else if (raw.cm_case_text == "-7")
            cfg.cm = cm_case::minus7;
        else
            return usage("--case must be -1, -2 or -7");
    }
    if (has_k)
        cfg.k = raw.k;
    if (raw.workers < 1)
        return usage("--workers must be at least 1");
    cfg.workers = raw.workers;
    cfg.format = raw.format == "tsv" ? output_format::tsv : output_format::table;
    cfg.strict = raw.strict;
    cfg.show_points = raw.show_points;

    return run(cfg, out, err);
}

} // namespace isogsum::cli
