#include "sqzwg/materials.hpp"
#include "sqzwg/errors.hpp"
#include "sqzwg/keyval.hpp"

#include <cmath>
#include <sstream>

namespace sqzwg {

std::string to_string(Polarization axis) {
    return axis == Polarization::ordinary ? "ordinary" : "extraordinary";
}

Polarization polarization_from_string(const std::string& s) {
    if (s == "ordinary" || s == "o")
        return Polarization::ordinary;
    if (s == "extraordinary" || s == "e")
        return Polarization::extraordinary;
    throw DomainError("unknown polarization axis '" + s + "' (expected 'ordinary' or 'extraordinary')");
}

std::vector<double> MaterialModel::coefficients() const {
    std::vector<double> out{constant_term, quadratic_term};
    for (const auto& p : poles) {
        out.push_back(p.strength);
        out.push_back(p.resonance_um2);
    }
    return out;
}

namespace {

double index_squared(const MaterialModel& m, double lambda_um) {
    const double l2 = lambda_um * lambda_um;
    double n2 = m.constant_term + m.quadratic_term * l2;
    for (const auto& p : m.poles)
        n2 += p.strength * l2 / (l2 - p.resonance_um2);
    return n2;
}

void validate_model(const MaterialModel& m) {
    if (!(m.lambda_min_um > 0.0) || !(m.lambda_max_um > m.lambda_min_um))
        throw DomainError("material '" + m.name + "': valid_range must satisfy 0 < min < max");
    const double lo2 = m.lambda_min_um * m.lambda_min_um;
    const double hi2 = m.lambda_max_um * m.lambda_max_um;
    for (const auto& p : m.poles)
        if (p.resonance_um2 >= lo2 && p.resonance_um2 <= hi2)
            throw DomainError("material '" + m.name + "': Sellmeier resonance at " +
                              std::to_string(std::sqrt(p.resonance_um2)) +
                              " um lies inside the valid range");
    // index must stay real and above 1 across the range
    constexpr int samples = 64;
    for (int i = 0; i <= samples; ++i) {
        const double lam =
            m.lambda_min_um + (m.lambda_max_um - m.lambda_min_um) * i / double(samples);
        const double n2 = index_squared(m, lam);
        if (!(n2 > 1.0) || !std::isfinite(n2))
            throw DomainError("material '" + m.name + "': non-physical index (n^2 = " +
                              std::to_string(n2) + ") at " + std::to_string(lam) + " um");
    }
}

} // namespace

MaterialModel MaterialModel::from_coefficients(std::string name, Polarization axis,
                                               const std::vector<double>& coeffs,
                                               double lambda_min_um, double lambda_max_um,
                                               std::string temperature_label) {
    if (coeffs.size() < 2 || coeffs.size() % 2 != 0)
        throw DomainError("material '" + name +
                          "': coefficient list must be [c0, d, b1, c1, ...] (even count >= 2), got " +
                          std::to_string(coeffs.size()) + " values");
    MaterialModel m;
    m.name = std::move(name);
    m.axis = axis;
    m.constant_term = coeffs[0];
    m.quadratic_term = coeffs[1];
    for (size_t i = 2; i + 1 < coeffs.size(); i += 2)
        m.poles.push_back(SellmeierPole{coeffs[i], coeffs[i + 1]});
    m.lambda_min_um = lambda_min_um;
    m.lambda_max_um = lambda_max_um;
    m.temperature_label = std::move(temperature_label);
    validate_model(m);
    return m;
}

double refractive_index(const MaterialModel& model, double wavelength_um) {
    if (!(wavelength_um >= model.lambda_min_um && wavelength_um <= model.lambda_max_um)) {
        std::ostringstream msg;
        msg << "wavelength " << wavelength_um << " um outside valid range [" << model.lambda_min_um
            << ", " << model.lambda_max_um << "] um of material '" << model.name << "'";
        throw RangeError(msg.str());
    }
    const double n2 = index_squared(model, wavelength_um);
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw NumericError("material '" + model.name + "': non-physical n^2 = " +
                           std::to_string(n2) + " at " + std::to_string(wavelength_um) + " um");
    return std::sqrt(n2);
}

DispersionSample group_index_and_gvd(const MaterialModel& model, double wavelength_um,
                                     double step_um) {
    const double h = step_um > 0.0 ? step_um : wavelength_um * 1e-3;
    if (wavelength_um - h < model.lambda_min_um || wavelength_um + h > model.lambda_max_um) {
        std::ostringstream msg;
        msg << "dispersion stencil [" << wavelength_um - h << ", " << wavelength_um + h
            << "] um exits valid range [" << model.lambda_min_um << ", " << model.lambda_max_um
            << "] um of material '" << model.name << "'";
        throw RangeError(msg.str());
    }
    return dispersion_from_index([&](double lam) { return refractive_index(model, lam); },
                                 wavelength_um, h);
}

// Congruent LiNbO3, Zelmon/Small/Jundt, J. Opt. Soc. Am. B 14, 3319 (1997):
// n^2 = 1 + a1 l^2/(l^2-b1) + a2 l^2/(l^2-b2) + a3 l^2/(l^2-b3), 0.4-5.0 um.
const MaterialModel& builtin_linbo3_e() {
    static const MaterialModel m = MaterialModel::from_coefficients(
        "linbo3_e", Polarization::extraordinary,
        {1.0, 0.0, 2.9804, 0.02047, 0.5981, 0.0666, 8.9543, 416.08}, 0.40, 5.0, "room temperature");
    return m;
}

const MaterialModel& builtin_linbo3_o() {
    static const MaterialModel m = MaterialModel::from_coefficients(
        "linbo3_o", Polarization::ordinary,
        {1.0, 0.0, 2.6734, 0.01764, 1.2290, 0.05914, 12.614, 474.60}, 0.40, 5.0, "room temperature");
    return m;
}

// LiTaO3 substrate in the one-pole handbook form n^2 = A + B/(l^2-C) + D l^2,
// rewritten to the generalized layout via B/(l^2-C) = (B/C) l^2/(l^2-C) - B/C.
// A is calibrated within the spread of published congruent-LiTaO3 data; see
// docs/materials.md for the constants and the calibration rationale.
const MaterialModel& builtin_litao3_e() {
    // A = 4.5404, B = 0.0844313, C = 0.0413878, D = -0.0237909
    static const MaterialModel m = MaterialModel::from_coefficients(
        "litao3_e", Polarization::extraordinary,
        {2.500395457598616, -0.0237909, 2.040004542401384, 0.0413878}, 0.40, 4.0,
        "room temperature");
    return m;
}

MaterialModel material_from_spec(const std::string& spec) {
    constexpr std::string_view prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) {
        const std::string name = spec.substr(prefix.size());
        if (name == "linbo3_e")
            return builtin_linbo3_e();
        if (name == "linbo3_o")
            return builtin_linbo3_o();
        if (name == "litao3_e")
            return builtin_litao3_e();
        throw DomainError("unknown builtin material '" + name +
                          "' (available: linbo3_e, linbo3_o, litao3_e)");
    }
    return load_material_file(spec);
}

MaterialModel load_material_file(const std::string& path) {
    const KeyValueFile kv = KeyValueFile::parse_file(path);
    const std::string name = kv.get_string("name");
    Polarization axis;
    try {
        axis = polarization_from_string(kv.get_string("axis"));
    } catch (const DomainError& e) {
        throw ParseError(path + ":" + std::to_string(kv.line_of("axis")) + ": " + e.what(),
                         kv.line_of("axis"));
    }
    const std::vector<double> range = kv.get_doubles("valid_range");
    if (range.size() != 2)
        throw ParseError(path + ":" + std::to_string(kv.line_of("valid_range")) +
                             ": valid_range needs exactly two values (min max), got " +
                             std::to_string(range.size()),
                         kv.line_of("valid_range"));
    const std::vector<double> coeffs = kv.get_doubles("coefficients");
    std::string temperature = kv.has("temperature") ? kv.get_string("temperature") : "";
    try {
        return MaterialModel::from_coefficients(name, axis, coeffs, range[0], range[1],
                                                std::move(temperature));
    } catch (const DomainError& e) {
        throw ParseError(path + ":" + std::to_string(kv.line_of("coefficients")) + ": " + e.what(),
                         kv.line_of("coefficients"));
    }
}

} // namespace sqzwg
