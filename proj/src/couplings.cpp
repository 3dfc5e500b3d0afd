#include "kron/couplings.hpp"

#include <cmath>
#include <numbers>

namespace kron {

std::array<std::array<ImpedanceExpr, 2>, 2> branin_two_port(const BraninLine& line,
                                                            const TerminalLoads& loads) {
    const double zc = line.characteristic_impedance;
    const double r0 = loads.source_resistance;
    const double rl = loads.load_resistance;

    std::array<std::array<ImpedanceExpr, 2>, 2> block;
    block[0][0].resistance = r0 + zc;
    block[1][1].resistance = rl + zc;
    block[0][1].delay_terms.push_back({RationalPoly::constant(rl - zc), line.delay});
    block[1][0].delay_terms.push_back({RationalPoly::constant(zc - r0), line.delay});
    return block;
}

double gupta_aperture_impedance(double effective_width, double height) {
    if (height <= 0.0) throw DomainError("aperture height must be positive");
    const double ratio = effective_width / height;
    if (ratio <= 0.0 || ratio >= 1.0)
        throw DomainError("aperture ratio w_e/b must lie strictly inside (0, 1)");
    // 1 - (1 - ratio^2)^(1/4) underflows for narrow slots; expm1/log1p
    // keeps the difference accurate down to denormal ratios.
    const double quarter_log = 0.25 * std::log1p(-ratio * ratio);
    const double root = std::exp(quarter_log);
    const double one_minus_root = -std::expm1(quarter_log);
    const double argument = 2.0 * (1.0 + root) / one_minus_root;
    return 120.0 * std::numbers::pi * std::numbers::pi / std::log(argument);
}

Complex friis_coupling_impedance(const FarFieldLink& link, double omega) {
    if (link.distance <= 0.0) throw DomainError("far-field distance must be positive");
    if (omega <= 0.0) throw DomainError("far-field coupling needs omega > 0");
    const double wavelength = 2.0 * std::numbers::pi * speed_of_light / omega;
    const double magnitude =
        std::sqrt(link.r11 * link.r22 * link.aperture_receive * link.aperture_transmit) /
        (wavelength * link.distance);
    return magnitude * std::exp(Complex{0.0, -omega * link.delay()});
}

Complex reflection_coupling(const ReflectionLink& link, double omega) {
    if (link.wall_distance <= 0.0) throw DomainError("wall distance must be positive");
    if (omega <= 0.0) throw DomainError("reflection coupling needs omega > 0");
    const double wavelength = 2.0 * std::numbers::pi * speed_of_light / omega;
    const double magnitude = link.gain * wavelength * link.reflection_coefficient *
                             std::sqrt(link.radiation_resistance) /
                             (8.0 * std::numbers::pi * link.wall_distance);
    return magnitude * std::exp(Complex{0.0, -omega * link.round_trip_delay()});
}

Complex cascade_coupling(std::span<const Complex> couplings,
                         std::span<const Complex> admittances, Complex source_current) {
    if (couplings.empty()) throw DomainError("cascade path is empty");
    if (admittances.size() + 1 != couplings.size())
        throw DomainError("cascade path must alternate couplings and admittances");
    Complex value = couplings[0] * source_current;
    for (size_t i = 0; i < admittances.size(); ++i)
        value = couplings[i + 1] * admittances[i] * value;
    return value;
}

}  // namespace kron
