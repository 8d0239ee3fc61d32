#ifndef SELBERG_VERSION_HPP
#define SELBERG_VERSION_HPP

namespace selberg {

inline constexpr const char* TOOL_VERSION = "0.1.0";

}  // namespace selberg

#endif
