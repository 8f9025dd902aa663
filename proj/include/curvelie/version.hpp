#ifndef CURVELIE_VERSION_HPP
#define CURVELIE_VERSION_HPP

namespace curvelie {
inline constexpr const char* kEngineVersion = "curvelie 0.1.0";
}

#endif  // CURVELIE_VERSION_HPP
