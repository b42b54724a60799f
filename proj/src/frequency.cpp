#include "cantor/frequency.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cantor {

Frequency Frequency::rational(const BigInt& p, const BigInt& q) {
    if (q <= 0) throw std::invalid_argument("denominator must be positive");
    return rational(BigRat(p, q));
}

Frequency Frequency::rational(const BigRat& x) {
    Frequency f;
    f.kind = Kind::Rational;
    f.rat = mod1(x);
    return f;
}

Frequency Frequency::irrational(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("frequency must be finite");
    double reduced = frac01(x);
    // an exact zero is the rational 0, whatever the syntax said; keeping the
    // real tag would misroute it through the irrational-input rules
    if (reduced == 0.0) return rational(BigRat(0));
    Frequency f;
    f.kind = Kind::Real;
    f.real = reduced;
    return f;
}

bool Frequency::is_zero() const {
    return is_rational() ? rat == 0 : real == 0.0;
}

double Frequency::numeric() const {
    return is_rational() ? to_double(rat) : real;
}

Frequency Frequency::scaled(const BigInt& m) const {
    if (is_rational()) return rational(BigRat(m) * rat);
    return irrational(frac_times(real, m >= 0 ? m : -m) * (m >= 0 ? 1.0 : -1.0));
}

Frequency Frequency::plus(const Frequency& other) const {
    if (is_rational() && other.is_rational()) return rational(rat + other.rat);
    return irrational(numeric() + other.numeric());
}

std::string Frequency::str() const {
    std::ostringstream os;
    if (is_rational()) {
        os << numerator(rat);
        if (denominator(rat) != 1) os << '/' << denominator(rat);
    } else {
        os.precision(17);
        os << real;
    }
    return os.str();
}

Frequency parse_frequency(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty frequency");
    if (text == "sqrt2m1") return Frequency::irrational(std::sqrt(2.0) - 1.0);
    if (text == "sqrt2") return Frequency::irrational(std::sqrt(2.0));
    if (text == "sqrt3") return Frequency::irrational(std::sqrt(3.0));
    if (text == "sqrt5") return Frequency::irrational(std::sqrt(5.0));
    if (text == "phi") return Frequency::irrational((std::sqrt(5.0) - 1.0) / 2.0);

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt p(text.substr(0, slash));
        BigInt q(text.substr(slash + 1));
        return Frequency::rational(p, q);
    }
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find('E') == std::string::npos) {
        return Frequency::rational(BigInt(text), 1);
    }
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad frequency literal: " + text);
    return Frequency::irrational(v);
}

}  // namespace cantor
