#pragma once

#include <stdexcept>
#include <string>

namespace zetamde {

// Bad input: parameter outside its domain, s at a pole of the target function,
// a value table that is not a character, and so on.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct pole_error : domain_error {
    using domain_error::domain_error;
};

struct character_error : domain_error {
    using domain_error::domain_error;
};

// An oracle could not certify its tail bound within the term budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal assertion: a series or plan failed to reach working precision.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zetamde
