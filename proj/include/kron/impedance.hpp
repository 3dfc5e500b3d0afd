#pragma once

#include <complex>
#include <vector>

#include "kron/errors.hpp"

namespace kron {

using Complex = std::complex<double>;

inline constexpr double speed_of_light = 299792458.0;  // m/s

/// Ratio of two polynomials in the Laplace variable p, complex
/// coefficients in ascending powers. Default value is the constant 1.
struct RationalPoly {
    std::vector<Complex> numerator{Complex{1.0, 0.0}};
    std::vector<Complex> denominator{Complex{1.0, 0.0}};

    static RationalPoly constant(Complex c) { return {{c}, {Complex{1.0, 0.0}}}; }

    Complex eval(Complex p) const;
};

/// gain(p) * exp(-tau p)
struct DelayTerm {
    RationalPoly gain;
    double tau = 0.0;
};

/// Hyperbolic two-port entries of a lossless delay line, the closed form
/// of the retarded-emf pair after the port voltages are eliminated:
///   coth: scale * cosh(tau p)/sinh(tau p)
///   csch: scale * 1/sinh(tau p)
/// Undefined at omega = 0 and at sinh(j omega tau) = 0.
struct LineTerm {
    enum class Kind { Coth, Csch };
    Kind kind = Kind::Coth;
    double scale = 0.0;
    double tau = 0.0;

    Complex eval(Complex p) const;
};

/// Frequency-dependent scalar operator
///   z(p) = R + L p + S/p + sum_k gain_k(p) e^{-tau_k p} + line terms,
/// evaluated at p = j omega. S is the elastance 1/C; S = 0 means no
/// capacitor.
struct ImpedanceExpr {
    double resistance = 0.0;   // ohms
    double inductance = 0.0;   // henry
    double elastance = 0.0;    // 1/farad
    std::vector<DelayTerm> delay_terms;
    std::vector<LineTerm> line_terms;

    static ImpedanceExpr resistor(double r) {
        ImpedanceExpr z;
        z.resistance = r;
        return z;
    }

    bool needs_positive_frequency() const {
        return elastance != 0.0 || !delay_terms.empty() || !line_terms.empty();
    }
    bool is_zero() const {
        return resistance == 0.0 && inductance == 0.0 && elastance == 0.0 &&
               delay_terms.empty() && line_terms.empty();
    }

    /// Value at p = j omega. Raises SingularFrequencyError at omega = 0
    /// when an elastance, delay or line term is present.
    Complex eval(double omega) const;

    ImpedanceExpr& operator+=(const ImpedanceExpr& other);
};

}  // namespace kron
