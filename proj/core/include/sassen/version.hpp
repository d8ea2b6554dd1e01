#ifndef SASSEN_VERSION_HPP
#define SASSEN_VERSION_HPP

namespace sassen {

inline constexpr const char* kVersion = "0.1.0";

} // namespace sassen

#endif
