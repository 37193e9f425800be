#include "partfn/rational.hpp"

#include <stdexcept>
#include <string>

namespace partfn {

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw std::domain_error("zero denominator");
    value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    const std::string owned(text);
    mpq_class q;
    if (owned.empty() || q.set_str(owned, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("not an exact rational: '" + owned + "'");
    }
    return ExactRational(std::move(q));
}

std::string ExactRational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.value_ == 0) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

}  // namespace partfn
