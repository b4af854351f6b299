#pragma once

#include "higgs_lab/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace higgs_lab {

/// Univariate polynomial in the twist variable k with exact rational
/// coefficients. coeffs()[j] multiplies k^j. Trailing zeros are always
/// stripped, so the zero polynomial has no coefficients and equality is
/// plain coefficient-sequence equality.
class HilbertPolynomial {
public:
    HilbertPolynomial() = default;
    explicit HilbertPolynomial(std::vector<Rational> coeffs);
    HilbertPolynomial(std::initializer_list<Rational> coeffs);

    static HilbertPolynomial constant(const Rational& c);
    static HilbertPolynomial monomial(const Rational& c, std::size_t degree);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Zero beyond the stored degree.
    Rational coeff(std::size_t j) const;
    Rational leading() const;

    HilbertPolynomial operator-() const;
    HilbertPolynomial& operator+=(const HilbertPolynomial& other);
    HilbertPolynomial& operator-=(const HilbertPolynomial& other);

    friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// e.g. "3/2*k^2 + k - 1/2"
    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

HilbertPolynomial operator+(HilbertPolynomial a, const HilbertPolynomial& b);
HilbertPolynomial operator-(HilbertPolynomial a, const HilbertPolynomial& b);

HilbertPolynomial add(const HilbertPolynomial& p, const HilbertPolynomial& q);
HilbertPolynomial scale(const HilbertPolynomial& p, const Rational& c);

Rational evaluate(const HilbertPolynomial& p, std::int64_t k);

enum class EventualOrder { Precedes, Equal, Succeeds };

const char* to_string(EventualOrder order);

/// Order of p(k) against q(k) for all sufficiently large integers k, decided
/// by comparing coefficients from the top degree down.
EventualOrder compare_eventual(const HilbertPolynomial& p, const HilbertPolynomial& q);

/// p ≺ q
bool eventually_less(const HilbertPolynomial& p, const HilbertPolynomial& q);
/// p ⪯ q
bool eventually_leq(const HilbertPolynomial& p, const HilbertPolynomial& q);

/// Smallest K >= 0 such that sign(p(k) - q(k)) equals the asymptotic sign for
/// every integer k >= K. Scans the integers below a Cauchy root bound of p - q.
std::uint64_t stabilization_threshold(const HilbertPolynomial& p, const HilbertPolynomial& q);

} // namespace higgs_lab
