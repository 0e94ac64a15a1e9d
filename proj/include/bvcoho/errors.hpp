#pragma once
#include <stdexcept>
#include <string>

namespace bvcoho {

/* Every failure mode gets its own type so callers (and the CLI exit-code
 * mapping) can dispatch on it.  All carry a human-readable witness. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define BVCOHO_ERROR(NAME)                                                     \
    struct NAME : Error {                                                      \
        explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {}     \
    }

BVCOHO_ERROR(NonGroup);            // table fails a group axiom (witness in message)
BVCOHO_ERROR(TooLarge);            // permutation closure exceeded the order cap
BVCOHO_ERROR(NotPrime);            // modulus is not prime
BVCOHO_ERROR(DimensionMismatch);   // matrix/vector shape disagreement
BVCOHO_ERROR(DegreeMismatch);      // cochain degrees incompatible with operation
BVCOHO_ERROR(DegreeCapExceeded);   // requested degree above the configured cap
BVCOHO_ERROR(KindMismatch);        // mixing complexes/kinds/primes/groups
BVCOHO_ERROR(NotACocycle);         // class-level operation fed a non-cocycle
BVCOHO_ERROR(NotInComponent);      // cochain not supported on the claimed class component
BVCOHO_ERROR(NotChainMap);         // comparison construction failed verification
BVCOHO_ERROR(NotModular);          // minimal resolution requested with p not dividing |G|
BVCOHO_ERROR(NotMinimalHere);      // transported differential fails to vanish
BVCOHO_ERROR(IndexOutOfRange);     // element/marker/tuple index out of range
BVCOHO_ERROR(BadInput);            // malformed JSON / CLI input

#undef BVCOHO_ERROR

} // namespace bvcoho
