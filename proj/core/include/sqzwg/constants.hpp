#ifndef SQZWG_CONSTANTS_HPP
#define SQZWG_CONSTANTS_HPP

namespace sqzwg {

inline constexpr double speed_of_light_m_per_s = 299792458.0;
inline constexpr double pi = 3.141592653589793238462643383279502884;

} // namespace sqzwg

#endif // SQZWG_CONSTANTS_HPP
