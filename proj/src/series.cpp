#include "fwdyon/series.hpp"

#include <sstream>
#include <stdexcept>

namespace fwdyon {

SeriesPoly::SeriesPoly(int max_degree) : max_degree_(max_degree), c_(max_degree + 1) {
    if (max_degree < 0) throw std::invalid_argument("negative series degree");
}

SeriesPoly::SeriesPoly(int max_degree, std::vector<Rational> coeffs) : SeriesPoly(max_degree) {
    for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= max_degree; ++k) c_[k] = coeffs[k];
}

SeriesPoly SeriesPoly::constant(int max_degree, const Rational& q) {
    SeriesPoly p(max_degree);
    p.c_[0] = q;
    return p;
}

SeriesPoly SeriesPoly::variable(int max_degree) {
    SeriesPoly p(max_degree);
    if (max_degree >= 1) p.c_[1] = 1;
    return p;
}

SeriesPoly::Rational SeriesPoly::coeff(int k) const {
    if (k < 0 || k > max_degree_) return 0;
    return c_[k];
}

void SeriesPoly::set(int k, const Rational& q) {
    if (k < 0 || k > max_degree_) throw std::out_of_range("series degree out of range");
    c_[k] = q;
}

SeriesPoly SeriesPoly::truncated(int max_degree) const { return SeriesPoly(max_degree, c_); }

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& o) {
    int d = std::min(max_degree_, o.max_degree_);
    c_.resize(d + 1);
    max_degree_ = d;
    for (int k = 0; k <= d; ++k) c_[k] += o.c_[k];
    return *this;
}

SeriesPoly& SeriesPoly::operator-=(const SeriesPoly& o) { return *this += -o; }

SeriesPoly SeriesPoly::operator-() const {
    SeriesPoly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
    int d = std::min(a.max_degree_, b.max_degree_);
    SeriesPoly r(d);
    for (int i = 0; i <= d; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (int j = 0; i + j <= d; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

SeriesPoly operator*(const SeriesPoly::Rational& q, SeriesPoly a) {
    for (auto& v : a.c_) v *= q;
    return a;
}

SeriesPoly SeriesPoly::pow(int n) const {
    if (n < 0) return reciprocal().pow(-n);
    SeriesPoly r = constant(max_degree_, 1);
    for (int k = 0; k < n; ++k) r = r * *this;
    return r;
}

SeriesPoly SeriesPoly::compose(const SeriesPoly& inner) const {
    if (sgn(inner.coeff(0)) != 0) throw std::domain_error("inner series must vanish at zero");
    int d = std::min(max_degree_, inner.max_degree_);
    SeriesPoly r(d), p = constant(d, 1);
    SeriesPoly in = inner.truncated(d);
    for (int k = 0; k <= d; ++k) {
        r += c_[k] * p;
        p = p * in;
    }
    return r;
}

// (1 + u)^a with u = this - 1.
SeriesPoly SeriesPoly::binomial_of_unit(const Rational& a) const {
    if (coeff(0) != 1) throw std::domain_error("series must have constant term 1");
    SeriesPoly u = *this;
    u.c_[0] = 0;
    SeriesPoly outer(max_degree_);
    Rational b = 1;
    for (int k = 0; k <= max_degree_; ++k) {
        outer.c_[k] = b;
        b = b * (a - k) / (k + 1);
    }
    return outer.compose(u);
}

SeriesPoly SeriesPoly::reciprocal() const {
    Rational c0 = coeff(0);
    if (sgn(c0) == 0) throw std::domain_error("series has no reciprocal");
    Rational inv = 1 / c0;
    return inv * (inv * *this).binomial_of_unit(-1);
}
SeriesPoly SeriesPoly::inv_sqrt() const { return binomial_of_unit(Rational(-1, 2)); }
SeriesPoly SeriesPoly::sqrt() const { return binomial_of_unit(Rational(1, 2)); }

int first_mismatch(const SeriesPoly& a, const SeriesPoly& b, int through) {
    for (int k = 0; k <= through; ++k)
        if (a.coeff(k) != b.coeff(k)) return k;
    return -1;
}

std::string SeriesPoly::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= max_degree_; ++k) {
        if (sgn(c_[k]) == 0) continue;
        Rational q = c_[k];
        os << (sgn(q) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (sgn(q) < 0) q = -q;
        first = false;
        if (k == 0 || q != 1) os << q.get_str();
        if (k > 0) os << (k && q != 1 ? " " : "") << var << (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << max_degree_ + 1 << ")";
    return os.str();
}

SeriesPoly gamma_of_beta(int max_degree) {
    SeriesPoly b = SeriesPoly::variable(max_degree);
    return (SeriesPoly::constant(max_degree, 1) - b * b).inv_sqrt();
}

SeriesPoly xi_of_beta(int max_degree) { return SeriesPoly::variable(max_degree) * gamma_of_beta(max_degree); }

std::vector<SeriesCheck> series_check() {
    using Q = SeriesPoly::Rational;
    std::vector<SeriesCheck> out;
    auto add = [&](std::string name, int through, const SeriesPoly& lhs, const SeriesPoly& rhs) {
        SeriesCheck c{std::move(name), through, lhs, rhs, first_mismatch(lhs, rhs, through)};
        out.push_back(std::move(c));
    };

    const int deg = 6;
    SeriesPoly one = SeriesPoly::constant(deg, 1);
    SeriesPoly beta = SeriesPoly::variable(deg);
    SeriesPoly xi = xi_of_beta(deg);
    SeriesPoly xi2 = xi * xi, xi4 = xi2 * xi2, xi6 = xi4 * xi2;
    SeriesPoly gamma = gamma_of_beta(deg);
    SeriesPoly inv_gamma = gamma.reciprocal();
    SeriesPoly g_ratio = gamma * (one + gamma).reciprocal();

    add("1 - xi^2/2 + 3xi^4/8 literal", 4, one - Q(1, 2) * xi2 + Q(3, 8) * xi4,
        SeriesPoly(deg, {1, 0, Q(-1, 2), 0, Q(-1, 8)}));
    add("1 - xi^2/2 + 3xi^4/8 = 1/gamma", 4, one - Q(1, 2) * xi2 + Q(3, 8) * xi4, inv_gamma);
    add("(1 - 3xi^2/4 + 5xi^4/8) xi/2 literal", 5, Q(1, 2) * (one - Q(3, 4) * xi2 + Q(5, 8) * xi4) * xi,
        SeriesPoly(deg, {0, Q(1, 2), 0, Q(-1, 8), 0, Q(-1, 16)}));
    add("(1 - 3xi^2/4 + 5xi^4/8) xi/2 = (1 - gamma/(gamma+1)) beta", 5,
        Q(1, 2) * (one - Q(3, 4) * xi2 + Q(5, 8) * xi4) * xi, (one - g_ratio) * beta);
    add("gamma literal", 6, gamma, SeriesPoly(deg, {1, 0, Q(1, 2), 0, Q(3, 8), 0, Q(5, 16)}));
    add("1 + xi^2/2 - xi^4/8 + xi^6/16 = gamma", 6, one + Q(1, 2) * xi2 - Q(1, 8) * xi4 + Q(1, 16) * xi6, gamma);
    add("(1/2 - 3xi^2/8) xi^2 = gamma/(gamma+1) beta^2", 4, (Q(1, 2) * one - Q(3, 8) * xi2) * xi2,
        g_ratio * beta * beta);
    return out;
}

}  // namespace fwdyon
