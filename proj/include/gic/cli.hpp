// SPDX-License-Identifier: Apache-2.0
#ifndef GIC_CLI_HPP
#define GIC_CLI_HPP

#include "gic/finitefield.hpp"
#include "gic/frobenius.hpp"
#include "gic/numkernel.hpp"

#include <json.hpp>
#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

namespace gic {

struct CliOptions {
    mpfr_prec_t prec = 0;  // 0: start norms at bits(Weil bound) + guard
    unsigned long trial_bound = 1000000;
    u64 seed = 0;
    std::optional<u64> prime_bound;  // per-command default when unset
};

/* report = {command, inputs, results, assertions, skipped_primes, timing_ms}.
 * exit_code: 0 all assertions pass, 1 some assertion failed, 2 input error. */
struct CommandResult {
    nlohmann::json report;
    int exit_code = 0;
};

/* "27,9,6" or "27 9 6", constant term first. */
IntPoly parse_poly_list(const std::string &s);

/* The septic y^2 = x^7 - x^6 - 5x^5 + 4x^4 + 5x^3 - x^2 - 5x + 3. */
Curve reference_curve();

CommandResult cmd_charpoly(const Curve &c, u64 p, const CliOptions &o);
CommandResult cmd_galois_cert(const IntPoly &f, const Int &q, const CliOptions &o);
CommandResult cmd_a7_cert(const IntPoly &f, const CliOptions &o);

/* expect_exceptions, when given, becomes an assertion on the set of good
 * primes where certification fails. */
CommandResult cmd_weyl_scan(const Curve &c, u64 pmin, u64 pmax, const CliOptions &o,
                            std::optional<std::vector<u64>> expect_exceptions = std::nullopt);

struct BoundsArgs {
    std::string mode = "main";  // main | grh3 | uncond3
    std::optional<int> g;
    std::optional<long> degK;
    std::optional<Rat> height;
    std::optional<Int> qv;
    double logdisc = 0;
    std::optional<double> lognorm;
    std::optional<double> c;
};
CommandResult cmd_bounds(const BoundsArgs &a, const CliOptions &o);

CommandResult cmd_exclude(const Curve &c, u64 v, const std::vector<std::string> &classes,
                          const CliOptions &o, const std::vector<unsigned> &minuscule_N = {2, 4});

/* End-to-end regression on the reference curve (or on c when given, against
 * the same expected values). */
CommandResult cmd_example12(const CliOptions &o, const std::optional<Curve> &c = std::nullopt);

/* Report without the timing field, dumped with fixed indentation. */
std::string canonical_dump(const nlohmann::json &report);

} // namespace gic

#endif
