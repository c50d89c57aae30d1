/* Exception hierarchy shared by the looksay library.
 *
 * The CLI maps these onto process exit codes: domain/usage problems -> 1,
 * exceeded budgets -> 2, failed internal cross-checks -> 3.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace looksay {

/* Base class for all library errors. */
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/* Invalid input values: empty seed, digit out of range for the base,
 * unsupported base, malformed rule parameters. */
class domain_error : public error {
  public:
    using error::error;
};

/* A configured resource budget (digits per term, element count, iteration
 * count, ...) would be exceeded. */
class budget_error : public error {
  public:
    using error::error;
};

/* An internal consistency check failed (modular cross-check mismatch,
 * non-converging refinement, impossible post-condition). */
class verify_error : public error {
  public:
    using error::error;
};

} // namespace looksay
