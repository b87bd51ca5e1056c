// SPDX-License-Identifier: Apache-2.0
#ifndef GIC_ERRORS_HPP
#define GIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gic {

/* Malformed input, unmet precondition, or an object the caller must not pass.
 * The CLI maps this to exit status 2. */
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* p divides the discriminant (or the leading coefficient) of the model. */
struct BadReduction : InputError {
    unsigned long prime;
    BadReduction(unsigned long p, const std::string &what)
        : InputError(what), prime(p) {}
};

/* Numerical certification failed at the requested precision; retry with more
 * bits.  Never escapes past the escalation cap without becoming fatal. */
struct PrecisionEscalation : std::runtime_error {
    long bits;
    PrecisionEscalation(long b, const std::string &what)
        : std::runtime_error(what), bits(b) {}
};

/* Raised when an internal consistency check fails. */
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace gic

#endif
