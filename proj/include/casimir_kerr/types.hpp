#pragma once

#include <complex>
#include <cstdio>
#include <string>

namespace casimir_kerr {

using ComplexAmplitude = std::complex<double>;

namespace detail {

// shortest round-ish representation for labels ("0.8", "7", ...)
inline std::string format_short(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

}  // namespace detail

}  // namespace casimir_kerr
