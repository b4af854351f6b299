#include "higgs_lab/rational.hpp"

#include "higgs_lab/error.hpp"

#include <cctype>

namespace higgs_lab {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string pretty_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return format_rational(value);
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroRank: return "ZeroRank";
        case ErrorCode::MalformedPolynomial: return "MalformedPolynomial";
        case ErrorCode::InvalidArrow: return "InvalidArrow";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::InvalidModel: return "InvalidModel";
        case ErrorCode::IncompleteTorsionClosure: return "IncompleteTorsionClosure";
        case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
        case ErrorCode::NotSemistable: return "NotSemistable";
        case ErrorCode::BrokenInvariant: return "BrokenInvariant";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::AmbiguousMaximizer: return "AmbiguousMaximizer";
        case ErrorCode::UnknownId: return "UnknownId";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace higgs_lab
