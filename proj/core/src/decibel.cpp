#include "sqzwg/decibel.hpp"
#include "sqzwg/errors.hpp"

#include <cmath>
#include <string>

namespace sqzwg {

double db_from_ratio(double ratio) {
    if (!(ratio > 0.0) || !std::isfinite(ratio))
        throw DomainError("db_from_ratio: ratio must be positive and finite, got " +
                          std::to_string(ratio));
    return 10.0 * std::log10(ratio);
}

double ratio_from_db(double db) {
    return std::pow(10.0, db / 10.0);
}

double dbm_from_mw(double milliwatt) {
    if (!(milliwatt > 0.0) || !std::isfinite(milliwatt))
        throw DomainError("dbm_from_mw: power must be positive and finite, got " +
                          std::to_string(milliwatt));
    return 10.0 * std::log10(milliwatt);
}

double mw_from_dbm(double dbm) {
    return std::pow(10.0, dbm / 10.0);
}

double percent_per_watt_from_inv_watt(double a_inv_watt) {
    return a_inv_watt * 100.0;
}

double inv_watt_from_percent_per_watt(double a_percent_per_watt) {
    return a_percent_per_watt / 100.0;
}

} // namespace sqzwg
