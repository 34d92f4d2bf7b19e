#pragma once

// Raw (unreduced) term-list arithmetic shared by the ring kernel and parser.

#include <functional>
#include <string_view>

#include "orientcalc/ring.hpp"

namespace orientcalc::detail {

/// Sorts by storage order, merges equal monomials, drops zeros.
TermList combine_terms(TermList terms);
TermList add_terms(const TermList& a, const TermList& b);
TermList mul_terms(const TermList& a, const TermList& b);
TermList scale_terms(const TermList& a, const Rational& q);

using Resolver = std::function<std::size_t(std::string_view)>;

/// Parses "+ - * / ^ ( )" expressions with rational literals and
/// identifiers resolved to variable indices. Division only by constants.
TermList parse_terms(std::string_view expr, const Resolver& resolve);

}  // namespace orientcalc::detail
