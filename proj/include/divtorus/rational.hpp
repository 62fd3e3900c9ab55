#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace divtorus {

/// Exact rational scalar. All algebraic computations in this library are
/// carried out over Q; no floating point enters any rank or verdict.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

/// Parses "p", "-p" or "p/q" (base 10). Rejects malformed input and q = 0.
std::optional<Rat> parse_rational(const std::string& s);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& x);

/// Comma-separated tuples, e.g. "1/2,0,-3".
std::optional<RatVec> parse_rational_tuple(const std::string& csv);
std::optional<std::vector<std::int64_t>> parse_int_tuple(const std::string& csv);

bool is_integral(const Rat& x);
bool all_integral(const RatVec& xs);

std::string tuple_to_string(const RatVec& xs);
std::string tuple_to_string(const std::vector<std::int64_t>& xs);

}  // namespace divtorus
