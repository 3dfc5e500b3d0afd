#include "kron/impedance.hpp"

#include <cmath>

namespace kron {

namespace {

Complex horner(const std::vector<Complex>& coeff, Complex p) {
    Complex acc{0.0, 0.0};
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * p + *it;
    return acc;
}

}  // namespace

Complex RationalPoly::eval(Complex p) const {
    return horner(numerator, p) / horner(denominator, p);
}

Complex LineTerm::eval(Complex p) const {
    Complex s = std::sinh(tau * p);
    Complex c = kind == Kind::Coth ? std::cosh(tau * p) : Complex{1.0, 0.0};
    return scale * c / s;
}

Complex ImpedanceExpr::eval(double omega) const {
    if (omega == 0.0 && needs_positive_frequency())
        throw SingularFrequencyError(
            "impedance with elastance, delay or line terms is undefined at omega = 0");
    const Complex p{0.0, omega};
    Complex z{resistance, omega * inductance};
    if (elastance != 0.0) z += elastance / p;
    for (const DelayTerm& term : delay_terms)
        z += term.gain.eval(p) * std::exp(-term.tau * p);
    for (const LineTerm& term : line_terms) z += term.eval(p);
    return z;
}

ImpedanceExpr& ImpedanceExpr::operator+=(const ImpedanceExpr& other) {
    resistance += other.resistance;
    inductance += other.inductance;
    elastance += other.elastance;
    delay_terms.insert(delay_terms.end(), other.delay_terms.begin(), other.delay_terms.end());
    line_terms.insert(line_terms.end(), other.line_terms.begin(), other.line_terms.end());
    return *this;
}

}  // namespace kron
