#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace modext {

/// Exact rational scalar. All linear algebra in this project is over Q;
/// rank decisions are exact, so there is no tolerance anywhere.
using Rat = mpq_class;

/// Parses "p/q" or "p" (decimal-free). Throws std::invalid_argument on
/// malformed input or zero denominator.
inline Rat parse_rat(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    for (char ch : s)
        if (ch == '.' || ch == 'e' || ch == 'E')
            throw std::invalid_argument("rational literal must be decimal-free: " + s);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q)
{
    return q.get_str();
}

} // namespace modext
