#pragma once

#include <array>
#include <span>

#include "kron/impedance.hpp"

namespace kron {

/// Lossless delay line between two port edges. The netlist assembles it
/// into the edge metric; see metric.hpp for the exact stamp.
struct BraninLine {
    int edge_left = -1;
    int edge_right = -1;
    double characteristic_impedance = 0.0;  // ohms
    double delay = 0.0;                     // one-way, seconds
};

/// Terminal resistances seen by the line: a source of internal resistance
/// R0 on the left, a load RL on the right.
struct TerminalLoads {
    double source_resistance = 0.0;  // R0
    double load_resistance = 0.0;    // RL
};

/// Slot aperture described by its effective width and height; the derived
/// lumped impedance is computed by gupta_aperture_impedance.
struct ApertureModel {
    double effective_width = 0.0;  // w_e, meters
    double height = 0.0;           // b, meters
};

/// Far-field antenna link between a transmitting and a receiving mesh.
/// The wavelength and the propagation delay are derived per frequency
/// from the distance.
struct FarFieldLink {
    int mesh_transmit = -1;
    int mesh_receive = -1;
    double r11 = 0.0;                // transmit radiation resistance, ohms
    double r22 = 0.0;                // receive radiation resistance, ohms
    double aperture_transmit = 0.0;  // A_t, m^2
    double aperture_receive = 0.0;   // A_r, m^2
    double distance = 0.0;           // r, meters

    double delay() const { return distance / speed_of_light; }
};

/// Wall reflection re-entering the radiating mesh after a round trip.
struct ReflectionLink {
    int mesh = -1;
    double gain = 0.0;                   // G, dimensionless
    double wall_distance = 0.0;          // R, meters
    double reflection_coefficient = 0.0; // sigma, |sigma| <= 1
    double radiation_resistance = 0.0;   // R_r, ohms
    double phase = 1.0;                  // +1 printed sign, -1 flips it

    double round_trip_delay() const { return 2.0 * wall_distance / speed_of_light; }
};

/// Two-port interaction tensor of a delay line terminated by the given
/// loads, entry [i][j] acting on the current of port j:
///   [[R0+Zc,        (RL-Zc) e^{-tau p}],
///    [(Zc-R0) e^{-tau p},        RL+Zc]]
/// The off-diagonal entries are the retarded-emf interaction coefficients;
/// a matched right load (RL = Zc) cancels the echo toward port 1.
std::array<std::array<ImpedanceExpr, 2>, 2> branin_two_port(const BraninLine& line,
                                                            const TerminalLoads& loads);

/// Lumped slot impedance
///   Z_a = 120 pi^2 / ln(2 (1 + (1-(w_e/b)^2)^{1/4}) / (1 - (1-(w_e/b)^2)^{1/4})),
/// positive real, strictly increasing in w_e/b on (0, 1).
double gupta_aperture_impedance(double effective_width, double height);

/// Far-field coupling impedance
///   z21 = sqrt(R11 R22 A_r A_t) e^{-j omega tau} / (lambda r),
/// with lambda = 2 pi c / omega and tau = r/c. The magnitude squared over
/// R11 R22 reproduces the antenna power-transfer ratio exactly; z12 = z21.
Complex friis_coupling_impedance(const FarFieldLink& link, double omega);

/// Reflected-wave self interaction
///   z54 = G lambda sigma sqrt(R_r) / (8 pi R) e^{-j omega 2R/c}.
/// The phase flag is applied by the assembly, not here.
Complex reflection_coupling(const ReflectionLink& link, double omega);

/// Weak-coupling chain estimate: applies couplings[0], then alternately an
/// intermediate mesh admittance and the next coupling, to a source mesh
/// current. admittances.size() must be couplings.size() - 1.
Complex cascade_coupling(std::span<const Complex> couplings,
                         std::span<const Complex> admittances, Complex source_current);

}  // namespace kron
