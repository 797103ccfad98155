#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rees {

// Exact arbitrary-precision scalars. Expression templates are disabled so the
// types behave like plain values in generic code.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// floor(r) as an Int, exact for negatives too.
inline Int rat_floor(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

inline long lcm_long(long a, long b) {
    Int l = int_lcm(Int(a), Int(b));
    return static_cast<long>(l);
}

// Canonical text form: "p" when integral, otherwise "p/q" in lowest terms.
inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Rational roots of a univariate polynomial with exact multiplicities.
// coeffs[k] is the coefficient of t^k. Roots are returned sorted ascending.
// Returns nullopt when coefficient factoring exceeds the trial-division
// budget (callers treat that as "roots unknown", never as "no roots").
std::optional<std::vector<std::pair<Rat, int>>> rational_roots(const std::vector<Rat>& coeffs);

}  // namespace rees
