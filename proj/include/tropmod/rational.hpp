#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace tropmod {

// Exact rational scalar. GMP-backed so coordinate arithmetic never
// overflows or rounds; doubles appear only in explicit float views.
using Rat = mpq_class;

// A length in [0, +inf]. `infinite` wins over `value`.
struct ExtLength {
    bool infinite = false;
    Rat value = 0;

    static ExtLength inf() { return ExtLength{true, 0}; }
    static ExtLength of(Rat v) { return ExtLength{false, std::move(v)}; }

    bool operator==(const ExtLength& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

// Parses "p/q", an integer, a plain decimal like "0.25", or "inf"/"infinity".
// Returns std::nullopt on malformed text or a negative value.
std::optional<ExtLength> parse_length(const std::string& text);

// Parses a plain (finite, possibly negative) rational: "p/q", integer, decimal.
std::optional<Rat> parse_rational(const std::string& text);

// Canonical display: integers as "3", proper fractions as "3/4".
std::string format_rational(const Rat& r);

// "inf" or format_rational.
std::string format_length(const ExtLength& x);

} // namespace tropmod
