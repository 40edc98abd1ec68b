#include "nlcut/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "nlcut/errors.hpp"

namespace nlcut {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return Rational(mpz_class(text, 10));
}

}  // namespace

Rational parse_rational(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty number");

  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    Rational num = parse_integer(token.substr(0, slash));
    std::string_view den_text = token.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("bad denominator in '" + std::string(token) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
    Rational q(num.get_num(), den);
    q.canonicalize();
    return q;
  }

  if (auto dot = token.find('.'); dot != std::string_view::npos) {
    bool negative = token.front() == '-';
    std::string_view int_part = token.substr(0, dot);
    std::string_view frac_part = token.substr(dot + 1);
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw std::invalid_argument("bad decimal '" + std::string(token) + "'");
    }
    mpz_class whole = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
    mpz_class frac = frac_part.empty() ? mpz_class(0) : mpz_class(std::string(frac_part), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    Rational q(whole * scale + frac, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  return parse_integer(token);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::self_loop: return "SelfLoop";
    case ErrorCode::negative_weight: return "NegativeWeight";
    case ErrorCode::overlapping_sets: return "OverlappingSets";
    case ErrorCode::isolated_vertex: return "IsolatedVertex";
    case ErrorCode::zero_measure: return "ZeroMeasure";
    case ErrorCode::degenerate_denominator: return "DegenerateDenominator";
    case ErrorCode::disconnected: return "Disconnected";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::bad_k: return "BadK";
    case ErrorCode::zero_vector: return "ZeroVector";
    case ErrorCode::nonconstant_required: return "NonconstantRequired";
    case ErrorCode::not_verified: return "NotVerified";
    case ErrorCode::not_in_omega: return "NotInOmega";
    case ErrorCode::unknown_problem: return "UnknownProblem";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace nlcut
