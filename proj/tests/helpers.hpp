#pragma once

#include "ccsym/textio.hpp"

namespace ccsym::test {

inline RingElement E(const RingDescriptor& ring, const std::string& s) {
    return parse_element(s, ring);
}

inline LaurentSeries S(const RingDescriptor& ring, const std::string& s) {
    return parse_series(s, ring);
}

}  // namespace ccsym::test
