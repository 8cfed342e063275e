#include "laumon/parameter.hpp"

namespace laumon {

ParameterPoint::ParameterPoint(std::vector<Rational> a, Rational x, Rational m)
    : a_(std::move(a)), x_(std::move(x)), m_(std::move(m)) {
    if (a_.size() < 2) throw std::invalid_argument("ParameterPoint: need at least two a-coordinates");
    Rational sum(0);
    for (const auto& v : a_) sum += v;
    if (sum != 0) throw std::invalid_argument("ParameterPoint: a-coordinates must sum to zero");
    if (x_ == 0) throw std::invalid_argument("ParameterPoint: x must be nonzero");
}

WeightVec ParameterPoint::a_over_x() const {
    WeightVec w{a_};
    for (auto& c : w.coords) c /= x_;
    return w;
}

ParameterPoint ParameterPoint::scaled(const Rational& t) const {
    if (t == 0) throw std::invalid_argument("ParameterPoint: zero scaling");
    std::vector<Rational> a = a_;
    for (auto& v : a) v *= t;
    return ParameterPoint(std::move(a), x_ * t, m_);
}

std::string ParameterPoint::to_string() const {
    std::string s = "a=(";
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) s += ',';
        s += laumon::to_string(a_[i]);
    }
    return s + ") x=" + laumon::to_string(x_) + " m=" + laumon::to_string(m_);
}

}  // namespace laumon
