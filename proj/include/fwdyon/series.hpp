#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fwdyon {

/// Truncated power series in one variable with exact rational coefficients.
/// Coefficients above max_degree are discarded by every operation.
class SeriesPoly {
public:
    using Rational = mpq_class;

    explicit SeriesPoly(int max_degree = 0);
    SeriesPoly(int max_degree, std::vector<Rational> coeffs);

    static SeriesPoly constant(int max_degree, const Rational& q);
    static SeriesPoly variable(int max_degree);

    int max_degree() const { return max_degree_; }
    Rational coeff(int k) const;
    void set(int k, const Rational& q);
    const std::vector<Rational>& coeffs() const { return c_; }

    SeriesPoly truncated(int max_degree) const;

    SeriesPoly& operator+=(const SeriesPoly& o);
    SeriesPoly& operator-=(const SeriesPoly& o);
    friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) { return a += b; }
    friend SeriesPoly operator-(SeriesPoly a, const SeriesPoly& b) { return a -= b; }
    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
    friend SeriesPoly operator*(const Rational& q, SeriesPoly a);
    SeriesPoly operator-() const;
    friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

    /// reciprocal needs a nonzero constant term, the roots a constant term
    /// of 1; std::domain_error otherwise.
    SeriesPoly reciprocal() const;
    SeriesPoly inv_sqrt() const;
    SeriesPoly sqrt() const;
    SeriesPoly pow(int n) const;

    /// this(inner(x)); inner must have zero constant term.
    SeriesPoly compose(const SeriesPoly& inner) const;

    /// Lowest degree <= through at which the coefficients differ, or -1.
    friend int first_mismatch(const SeriesPoly& a, const SeriesPoly& b, int through);

    std::string to_string(const std::string& var = "x") const;

private:
    int max_degree_;
    std::vector<Rational> c_;

    SeriesPoly binomial_of_unit(const Rational& exponent) const;
};

struct SeriesCheck {
    std::string name;
    int through = 0;
    SeriesPoly lhs;
    SeriesPoly rhs;
    int mismatch = -1;

    bool pass() const { return mismatch < 0; }
};

/// xi(beta) = beta / sqrt(1 - beta^2) and gamma(beta) = 1 / sqrt(1 - beta^2).
SeriesPoly xi_of_beta(int max_degree);
SeriesPoly gamma_of_beta(int max_degree);

/// The boost-velocity identities relating the |xi| prefactors of the FW spin
/// Hamiltonian to the Lorentz factor.
std::vector<SeriesCheck> series_check();

}  // namespace fwdyon
