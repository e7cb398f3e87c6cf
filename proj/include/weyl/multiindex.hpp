#pragma once

#include "weyl/common.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <sstream>
#include <string>

namespace weyl {

// Exponent vector. Compares lexicographically, which fixes the term order
// used everywhere (storage, serialization, normal forms).
using MultiIndex = boost::container::small_vector<std::uint32_t, 8>;

inline std::uint64_t total_degree(const MultiIndex& e) {
    std::uint64_t d = 0;
    for (auto v : e) d += v;
    return d;
}

inline MultiIndex exp_add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline std::string exp_to_string(const MultiIndex& e) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out << ",";
        out << e[i];
    }
    out << ")";
    return out.str();
}

} // namespace weyl
