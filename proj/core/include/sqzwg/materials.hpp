#ifndef SQZWG_MATERIALS_HPP
#define SQZWG_MATERIALS_HPP

#include <string>
#include <utility>
#include <vector>

namespace sqzwg {

enum class Polarization { ordinary, extraordinary };

std::string to_string(Polarization axis);
Polarization polarization_from_string(const std::string& s);

struct SellmeierPole {
    double strength = 0.0;      // b_i, dimensionless
    double resonance_um2 = 0.0; // c_i, um^2
};

// Wavelength-dependent refractive index in the generalized Sellmeier form
//
//   n^2(lambda) = c0 + d*lambda^2 + sum_i b_i*lambda^2 / (lambda^2 - c_i)
//
// with lambda in micrometers. The flat coefficient list is laid out as
// [c0, d, b_1, c_1, b_2, c_2, ...]. Models are immutable after construction
// and all operations on them are pure.
struct MaterialModel {
    std::string name;
    Polarization axis = Polarization::extraordinary;
    double constant_term = 1.0;  // c0
    double quadratic_term = 0.0; // d, 1/um^2
    std::vector<SellmeierPole> poles;
    double lambda_min_um = 0.0;
    double lambda_max_um = 0.0;
    std::string temperature_label; // informational; temperature is not a model input

    std::vector<double> coefficients() const;

    static MaterialModel from_coefficients(std::string name, Polarization axis,
                                           const std::vector<double>& coeffs,
                                           double lambda_min_um, double lambda_max_um,
                                           std::string temperature_label = {});
};

// n(lambda); wavelength must lie in [lambda_min_um, lambda_max_um] (inclusive),
// otherwise RangeError naming the model and its bounds.
double refractive_index(const MaterialModel& model, double wavelength_um);

struct DispersionSample {
    double n = 0.0;
    double group_index = 0.0;     // n_g = n - lambda dn/dlambda
    double beta2_s2_per_m = 0.0;  // d^2 beta / d omega^2
};

// Central-difference dispersion of an arbitrary index curve. The caller is
// responsible for the curve being valid on [lambda - step, lambda + step].
template <class IndexFn>
DispersionSample dispersion_from_index(IndexFn&& n_of_lambda_um, double wavelength_um,
                                       double step_um) {
    const double np = n_of_lambda_um(wavelength_um + step_um);
    const double n0 = n_of_lambda_um(wavelength_um);
    const double nm = n_of_lambda_um(wavelength_um - step_um);
    const double dn = (np - nm) / (2.0 * step_um);          // 1/um
    const double d2n = (np - 2.0 * n0 + nm) / (step_um * step_um); // 1/um^2

    DispersionSample out;
    out.n = n0;
    out.group_index = n0 - wavelength_um * dn;
    // beta2 = lambda^3/(2 pi c^2) d2n/dlambda^2, converted to SI
    constexpr double c = 299792458.0;
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double lambda_m = wavelength_um * 1e-6;
    out.beta2_s2_per_m = lambda_m * lambda_m * lambda_m / (two_pi * c * c) * (d2n * 1e12);
    return out;
}

// Dispersion of a material model. Default step is lambda*1e-3; the full
// stencil [lambda - step, lambda + step] must stay inside the valid range.
DispersionSample group_index_and_gvd(const MaterialModel& model, double wavelength_um,
                                     double step_um = 0.0);

// Built-in models. Coefficient provenance is documented in docs/materials.md.
const MaterialModel& builtin_linbo3_e(); // congruent LiNbO3, extraordinary
const MaterialModel& builtin_linbo3_o(); // congruent LiNbO3, ordinary
const MaterialModel& builtin_litao3_e(); // LiTaO3 substrate, extraordinary (calibrated)

// "builtin:<name>" or a path to a material coefficient file.
MaterialModel material_from_spec(const std::string& spec);

// Key-value coefficient file with keys: name, axis, coefficients, valid_range
// and optional temperature. Parse errors cite line numbers.
MaterialModel load_material_file(const std::string& path);

} // namespace sqzwg

#endif // SQZWG_MATERIALS_HPP
