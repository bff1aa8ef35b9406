#include "cliffgrp/expr.hpp"

#include <cctype>

namespace cliffgrp {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Multivector parse() {
    Multivector out(sig_);
    skip_ws();
    if (done()) throw ParseError(pos_, "empty expression");
    bool negate = accept_sign();
    parse_term(out, negate);
    skip_ws();
    while (!done()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos_, "expected '+' or '-'");
      ++pos_;
      skip_ws();
      parse_term(out, c == '-');
      skip_ws();
    }
    return out;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept_sign() {
    if (!done() && peek() == '-') {
      ++pos_;
      skip_ws();
      return true;
    }
    if (!done() && peek() == '+') {
      ++pos_;
      skip_ws();
    }
    return false;
  }

  bool at_blade() const {
    if (done() || peek() != 'e') return false;
    if (pos_ + 1 >= text_.size()) return true;  // bare identity "e"
    char c = text_[pos_ + 1];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '[' || !std::isalnum(static_cast<unsigned char>(c));
  }

  void parse_term(Multivector& out, bool negate) {
    if (done()) throw ParseError(pos_, "expected a term");
    Scalar coeff(1);
    bool have_coeff = false;
    if (!at_blade()) {
      coeff = parse_coeff();
      have_coeff = true;
      skip_ws();
      if (!done() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (!at_blade()) throw ParseError(pos_, "expected a blade after '*'");
      }
    }
    Blade b{0};
    if (at_blade()) {
      b = parse_blade();
    } else if (!have_coeff) {
      throw ParseError(pos_, "expected a coefficient or blade");
    }
    if (negate) coeff = -coeff;
    out.add_term(b, coeff);
  }

  Scalar parse_coeff() {
    Rational first = parse_rational();
    if (!done() && peek() == 'i') {
      ++pos_;
      require_complex();
      return Scalar(Rational(0), first);
    }
    // Lookahead for "rat sign rat i"; otherwise the sign starts a new term.
    std::size_t save = pos_;
    skip_ws();
    if (!done() && (peek() == '+' || peek() == '-')) {
      bool neg = peek() == '-';
      ++pos_;
      skip_ws();
      if (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-')) {
        std::size_t rat_start = pos_;
        Rational second = parse_rational();
        if (!done() && peek() == 'i') {
          ++pos_;
          require_complex();
          return Scalar(first, neg ? Rational(-second) : second);
        }
        (void)rat_start;
      }
    }
    pos_ = save;
    return Scalar(first);
  }

  void require_complex() {
    if (sig_.field() != Field::Complex)
      throw ParseError(pos_ - 1, "imaginary coefficient in a real algebra");
  }

  Rational parse_rational() {
    mpz_class num = parse_integer();
    if (!done() && peek() == '/') {
      ++pos_;
      if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError(pos_, "expected a denominator");
      mpz_class den = parse_integer();
      if (den == 0) throw ParseError(pos_ - 1, "zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    if (!done() && peek() == '-') ++pos_;
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(pos_, "expected an integer");
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Blade parse_blade() {
    ++pos_;  // consume 'e'
    std::vector<int> idx;
    if (!done() && peek() == '[') {
      ++pos_;
      while (true) {
        skip_ws();
        std::size_t at = pos_;
        mpz_class v = parse_integer();
        if (!v.fits_sint_p()) throw IndexOutOfRange(at, -1, sig_.n());
        push_index(idx, static_cast<int>(v.get_si()), at);
        skip_ws();
        if (done()) throw ParseError(pos_, "unterminated blade index list");
        if (peek() == ']') {
          ++pos_;
          break;
        }
        if (peek() != ',') throw ParseError(pos_, "expected ',' or ']'");
        ++pos_;
      }
    } else {
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        push_index(idx, peek() - '0', pos_);
        ++pos_;
      }
    }
    Blade b{0};
    for (int a : idx) b.mask |= std::uint32_t{1} << (a - 1);
    return b;
  }

  void push_index(std::vector<int>& idx, int a, std::size_t at) {
    if (a < 1 || a > sig_.n()) throw IndexOutOfRange(at, a, sig_.n());
    if (!idx.empty() && a <= idx.back())
      throw ParseError(at, "blade indices must be strictly increasing");
    idx.push_back(a);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

// Signed magnitude split used by the formatter: negative means the term is
// rendered after " - ".
bool renders_negative(const Scalar& c) {
  if (c.real() != 0) return c.real() < 0;
  return c.imag() < 0;
}

// Nonreal coefficients always carry an explicit real part ("0+1i"), since a
// bare "1i" after a "+" would be swallowed into the previous term's
// coefficient on re-parsing.
std::string coeff_text(const Scalar& c) {
  if (c.is_real()) return rational_to_string(c.real());
  std::string out = rational_to_string(c.real());
  if (c.imag() > 0) out += "+";
  return out + rational_to_string(c.imag()) + "i";
}

}  // namespace

Multivector parse_multivector(std::string_view text, const Signature& sig) {
  return Parser(text, sig).parse();
}

std::string format_scalar(const Scalar& c) { return c.to_string(); }

std::string format_multivector(const Multivector& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : u.terms()) {
    Scalar mag = c;
    bool neg = renders_negative(c);
    if (neg) mag = -mag;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (b.mask == 0) {
      out += coeff_text(mag);
    } else if (mag == Scalar(1)) {
      out += b.to_string();
    } else if (mag.is_real()) {
      out += coeff_text(mag) + b.to_string();
    } else {
      out += coeff_text(mag) + "*" + b.to_string();
    }
  }
  return out;
}

}  // namespace cliffgrp
