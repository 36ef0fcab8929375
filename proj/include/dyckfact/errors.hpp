#pragma once

#include <stdexcept>
#include <string>

namespace dyckfact {

// Invalid mathematical input: not a solution, word outside the monoid,
// malformed path, non-splitting polynomial, out-of-range parameters.
// The CLI maps this hierarchy to exit code 2.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public domain_error {
public:
    using domain_error::domain_error;
};

} // namespace dyckfact
