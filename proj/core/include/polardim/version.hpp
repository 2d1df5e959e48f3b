#ifndef POLARDIM_VERSION_HPP
#define POLARDIM_VERSION_HPP

namespace polardim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace polardim

#endif  // POLARDIM_VERSION_HPP
