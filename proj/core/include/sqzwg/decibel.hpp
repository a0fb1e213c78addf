#ifndef SQZWG_DECIBEL_HPP
#define SQZWG_DECIBEL_HPP

namespace sqzwg {

// Power-ratio decibel conversions, 10*log10 convention throughout.
double db_from_ratio(double ratio);   // throws DomainError for ratio <= 0 or non-finite
double ratio_from_db(double db);

double dbm_from_mw(double milliwatt); // throws DomainError for power <= 0
double mw_from_dbm(double dbm);

// The normalized SH conversion efficiency is stored in 1/W everywhere in the
// library; %/W appears only at I/O boundaries through these two functions.
double percent_per_watt_from_inv_watt(double a_inv_watt);
double inv_watt_from_percent_per_watt(double a_percent_per_watt);

} // namespace sqzwg

#endif // SQZWG_DECIBEL_HPP
