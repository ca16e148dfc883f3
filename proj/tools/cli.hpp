#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "isogsum/cm.hpp"
#include "isogsum/modular.hpp"

namespace isogsum::cli {

enum class command { dirichlet, lemma, main, dual, cm, search, all };
enum class output_format { table, tsv };

/* An integer "n" or a rational "n/d", reduced per prime. */
struct parameter
{
    std::int64_t num = 0;
    std::int64_t den = 1;

    static parameter parse(std::string const & text);
    bool is_integer() const { return den == 1; }
    /* Empty when p divides the denominator. */
    std::optional<field_element> at(prime p) const;
    std::string str() const;
};

struct run_config
{
    command cmd = command::all;
    parameter a { 2, 1 };
    parameter b { -1, 1 };
    std::int64_t lo = 5;
    std::int64_t hi = 100;
    std::optional<cm_case> cm;
    std::optional<std::int64_t> k;
    output_format format = output_format::table;
    unsigned workers = 1;
    bool strict = false;
    bool show_points = false;
};

/* Exit codes. */
inline constexpr int exit_ok = 0;
inline constexpr int exit_identity_failure = 1;
inline constexpr int exit_usage = 2;

/* Environment variable holding the default worker count. */
inline constexpr char const * workers_env = "ISOGSUM_WORKERS";

/* Runs a validated configuration; returns the exit status. */
int run(run_config const & cfg, std::ostream & out, std::ostream & err);

/* Parses argv (argv[0] is the program name) and runs. */
int main(int argc, char const * const * argv, std::ostream & out, std::ostream & err);

} // namespace isogsum::cli
