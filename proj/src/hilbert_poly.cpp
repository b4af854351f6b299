#include "higgs_lab/hilbert_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace higgs_lab {

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

HilbertPolynomial::HilbertPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    normalize();
}

HilbertPolynomial HilbertPolynomial::constant(const Rational& c) {
    return HilbertPolynomial(std::vector<Rational>{c});
}

HilbertPolynomial HilbertPolynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return HilbertPolynomial(std::move(coeffs));
}

void HilbertPolynomial::normalize() {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational HilbertPolynomial::coeff(std::size_t j) const {
    return j < coeffs_.size() ? coeffs_[j] : Rational(0);
}

Rational HilbertPolynomial::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

HilbertPolynomial HilbertPolynomial::operator-() const {
    HilbertPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

HilbertPolynomial& HilbertPolynomial::operator+=(const HilbertPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
    normalize();
    return *this;
}

HilbertPolynomial& HilbertPolynomial::operator-=(const HilbertPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
    normalize();
    return *this;
}

std::string HilbertPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << pretty_rational(mag);
            continue;
        }
        if (mag != 1) out << pretty_rational(mag) << "*";
        out << "k";
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

HilbertPolynomial operator+(HilbertPolynomial a, const HilbertPolynomial& b) {
    a += b;
    return a;
}

HilbertPolynomial operator-(HilbertPolynomial a, const HilbertPolynomial& b) {
    a -= b;
    return a;
}

HilbertPolynomial add(const HilbertPolynomial& p, const HilbertPolynomial& q) { return p + q; }

HilbertPolynomial scale(const HilbertPolynomial& p, const Rational& c) {
    std::vector<Rational> coeffs = p.coeffs();
    for (auto& x : coeffs) x *= c;
    return HilbertPolynomial(std::move(coeffs));
}

Rational evaluate(const HilbertPolynomial& p, std::int64_t k) {
    const Rational x(mpz_class(std::to_string(k)));
    Rational acc(0);
    const auto& coeffs = p.coeffs();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * x + coeffs[i];
    }
    return acc;
}

const char* to_string(EventualOrder order) {
    switch (order) {
        case EventualOrder::Precedes: return "Precedes";
        case EventualOrder::Equal: return "Equal";
        case EventualOrder::Succeeds: return "Succeeds";
    }
    return "?";
}

EventualOrder compare_eventual(const HilbertPolynomial& p, const HilbertPolynomial& q) {
    const std::size_t top = std::max(p.coeffs().size(), q.coeffs().size());
    for (std::size_t i = top; i-- > 0;) {
        const int c = cmp(p.coeff(i), q.coeff(i));
        if (c < 0) return EventualOrder::Precedes;
        if (c > 0) return EventualOrder::Succeeds;
    }
    return EventualOrder::Equal;
}

bool eventually_less(const HilbertPolynomial& p, const HilbertPolynomial& q) {
    return compare_eventual(p, q) == EventualOrder::Precedes;
}

bool eventually_leq(const HilbertPolynomial& p, const HilbertPolynomial& q) {
    return compare_eventual(p, q) != EventualOrder::Succeeds;
}

std::uint64_t stabilization_threshold(const HilbertPolynomial& p, const HilbertPolynomial& q) {
    const HilbertPolynomial d = p - q;
    if (d.degree() <= 0) return 0;

    const Rational lead = d.leading();
    const int asymptotic = sgn(lead);
    Rational max_ratio(0);
    for (int i = 0; i < d.degree(); ++i) {
        Rational r = abs(d.coeffs()[static_cast<std::size_t>(i)] / lead);
        if (r > max_ratio) max_ratio = r;
    }
    // Every real root has |x| < 1 + max_ratio, so the sign is settled from the ceiling on.
    Rational bound_q = max_ratio + 1;
    mpz_class bound;
    mpz_cdiv_q(bound.get_mpz_t(), bound_q.get_num_mpz_t(), bound_q.get_den_mpz_t());

    const auto bound_u = static_cast<std::uint64_t>(bound.get_ui());
    for (std::uint64_t k = bound_u; k-- > 0;) {
        if (sgn(evaluate(d, static_cast<std::int64_t>(k))) != asymptotic) return k + 1;
    }
    return 0;
}

} // namespace higgs_lab
