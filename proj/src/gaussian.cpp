#include "hurwitz/gaussian.hpp"

#include <ostream>

namespace hurwitz {

std::string GaussianRational::str() const {
    if (im_.is_zero())
        return re_.str();
    std::string imag = im_ == Rational(1) ? "i" : im_ == Rational(-1) ? "-i" : im_.str() + "i";
    if (re_.is_zero())
        return imag;
    return re_.str() + (im_.sign() > 0 ? "+" : "") + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    im_ = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

} // namespace hurwitz
