#pragma once

// Exact arithmetic over ℚ and quadratic fields ℚ(√d).
//
// An element a + b√d is stored as two canonical rationals. Because d is
// never a perfect square, a + b√d = 0 exactly when a = b = 0, so the zero
// test and therefore division are decidable without any approximation.

#include "frieze/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace frieze {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rational, Quadratic };

class FieldDescriptor {
public:
    /// ℚ.
    constexpr FieldDescriptor() noexcept = default;

    static constexpr FieldDescriptor rational() noexcept { return {}; }

    /// ℚ(√d). `d` must not be 0, 1 or any other perfect square.
    static FieldDescriptor quadratic(std::int64_t d)
    {
        if (d == 0 || d == 1 || is_perfect_square(d))
            throw Error(ErrorKind::InvalidDescriptor, "sqrt(" + std::to_string(d) + ") is rational");
        FieldDescriptor f;
        f.kind_ = FieldKind::Quadratic;
        f.d_ = d;
        return f;
    }

    constexpr FieldKind kind() const noexcept { return kind_; }
    constexpr bool is_quadratic() const noexcept { return kind_ == FieldKind::Quadratic; }
    /// Radicand; 0 for ℚ.
    constexpr std::int64_t d() const noexcept { return d_; }

    friend constexpr bool operator==(const FieldDescriptor&, const FieldDescriptor&) noexcept = default;

    std::string name() const
    {
        return is_quadratic() ? "Q(sqrt(" + std::to_string(d_) + "))" : "Q";
    }

private:
    static bool is_perfect_square(std::int64_t d)
    {
        if (d < 0)
            return false;
        auto r = static_cast<std::int64_t>(boost::multiprecision::sqrt(Integer(d)));
        return r * r == d;
    }

    FieldKind kind_ = FieldKind::Rational;
    std::int64_t d_ = 0;
};

/// Smallest field containing both; ℚ embeds into every ℚ(√d), anything else
/// is a mismatch.
inline FieldDescriptor join(const FieldDescriptor& lhs, const FieldDescriptor& rhs)
{
    if (lhs == rhs || !rhs.is_quadratic())
        return lhs;
    if (!lhs.is_quadratic())
        return rhs;
    throw Error(ErrorKind::DescriptorMismatch, "cannot combine " + lhs.name() + " with " + rhs.name());
}

class FieldElement {
public:
    FieldElement() = default;

    // Implicit on purpose: integer and rational literals are field elements.
    FieldElement(std::int64_t value) : a_(value) {}
    FieldElement(Rational value) : a_(std::move(value)) {}

    FieldElement(Rational a, Rational b, FieldDescriptor field) : a_(std::move(a)), b_(std::move(b)), field_(field)
    {
        if (!field_.is_quadratic() && b_ != 0)
            throw Error(ErrorKind::DescriptorMismatch, "irrational part in an element of Q");
    }

    /// √d itself.
    static FieldElement sqrt_d(const FieldDescriptor& field)
    {
        if (!field.is_quadratic())
            throw Error(ErrorKind::DescriptorMismatch, "Q has no square-root generator");
        return FieldElement(0, 1, field);
    }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const FieldDescriptor& field() const noexcept { return field_; }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
    bool is_rational() const noexcept { return b_ == 0; }

    /// The same value viewed in `target`; fails unless `field()` embeds into it.
    FieldElement in(const FieldDescriptor& target) const
    {
        if (join(target, field_) != target)
            throw Error(ErrorKind::DescriptorMismatch, field_.name() + " does not embed into " + target.name());
        return FieldElement(a_, b_, target);
    }

    FieldElement conjugate() const { return FieldElement(a_, -b_, field_); }

    /// a² − d·b², the field norm down to ℚ.
    Rational norm() const { return a_ * a_ - Rational(field_.d()) * b_ * b_; }

    FieldElement inverse() const
    {
        if (is_zero())
            throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        Rational n = norm();
        return FieldElement(a_ / n, -b_ / n, field_);
    }

    FieldElement operator-() const { return FieldElement(-a_, -b_, field_); }

    FieldElement& operator+=(const FieldElement& rhs)
    {
        field_ = join(field_, rhs.field_);
        a_ += rhs.a_;
        b_ += rhs.b_;
        return *this;
    }

    FieldElement& operator-=(const FieldElement& rhs)
    {
        field_ = join(field_, rhs.field_);
        a_ -= rhs.a_;
        b_ -= rhs.b_;
        return *this;
    }

    FieldElement& operator*=(const FieldElement& rhs)
    {
        field_ = join(field_, rhs.field_);
        if (b_ == 0 && rhs.b_ == 0) {
            a_ *= rhs.a_;
            return *this;
        }
        Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(field_.d());
        Rational b = a_ * rhs.b_ + rhs.a_ * b_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }

    FieldElement& operator/=(const FieldElement& rhs)
    {
        if (rhs.is_zero())
            throw Error(ErrorKind::DivisionByZero, "division by zero");
        if (rhs.b_ == 0) {
            field_ = join(field_, rhs.field_);
            a_ /= rhs.a_;
            b_ /= rhs.a_;
            return *this;
        }
        return *this *= rhs.inverse();
    }

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
    friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
    friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

    /// Exact equality. Comparing elements of two different quadratic fields
    /// throws rather than answering false.
    friend bool operator==(const FieldElement& lhs, const FieldElement& rhs)
    {
        join(lhs.field_, rhs.field_);
        return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
    }

private:
    Rational a_{0};
    Rational b_{0};
    FieldDescriptor field_{};
};

namespace detail {

inline std::string format_rational(const Rational& r)
{
    const Integer& den = boost::multiprecision::denominator(r);
    std::string out = boost::multiprecision::numerator(r).str();
    if (den != 1)
        out += "/" + den.str();
    return out;
}

class ElementParser {
public:
    ElementParser(std::string_view text, const FieldDescriptor& field) : text_(text), field_(field) {}

    FieldElement parse()
    {
        skip_ws();
        Rational sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = take() == '-' ? -1 : 1;
            skip_ws();
        }
        FieldElement value = term() * FieldElement(sign);
        for (;;) {
            skip_ws();
            if (at_end())
                break;
            char op = take();
            if (op != '+' && op != '-')
                fail("expected '+' or '-'");
            skip_ws();
            FieldElement t = term();
            value = op == '+' ? value + t : value - t;
        }
        return value;
    }

private:
    FieldElement term()
    {
        if (starts_with_sqrt())
            return sqrt_factor();
        Rational coefficient = rational();
        skip_ws();
        bool star = false;
        if (peek() == '*') {
            take();
            skip_ws();
            star = true;
        }
        if (starts_with_sqrt())
            return FieldElement(coefficient) * sqrt_factor();
        if (star)
            fail("expected sqrt(...) after '*'");
        return FieldElement(coefficient);
    }

    FieldElement sqrt_factor()
    {
        pos_ += 5;  // "sqrt("
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = take() == '-';
            skip_ws();
        }
        Integer radicand = digits();
        if (negative)
            radicand = -radicand;
        skip_ws();
        if (take() != ')')
            fail("expected ')'");
        if (!field_.is_quadratic() || radicand != field_.d())
            throw Error(ErrorKind::SqrtMismatch,
                        "sqrt(" + radicand.str() + ") is not the generator of " + field_.name());
        return FieldElement::sqrt_d(field_);
    }

    Rational rational()
    {
        Integer num = digits();
        skip_ws();
        if (peek() != '/')
            return Rational(num);
        take();
        skip_ws();
        Integer den = digits();
        if (den == 0)
            throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text_) + "'");
        return Rational(num, den);
    }

    Integer digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    bool starts_with_sqrt() const { return text_.substr(pos_, 5) == "sqrt("; }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char take() { return at_end() ? '\0' : text_[pos_++]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::Syntax,
                    what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    FieldDescriptor field_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `expr := term (('+'|'-') term)*`, where a term is a rational
/// `p` or `p/q`, optionally followed by `*sqrt(d)` (the star may be
/// omitted), or a bare `sqrt(d)`. A leading sign is allowed.
inline FieldElement parse_element(std::string_view text, const FieldDescriptor& field)
{
    FieldElement value = detail::ElementParser(text, field).parse();
    return field.is_quadratic() ? value.in(field) : value;
}

/// Canonical text: "p/q" or "p/q + r/s*sqrt(d)". With `compact` the
/// spaces are dropped so the result is a single whitespace-free token.
inline std::string format_element(const FieldElement& x, bool compact = false)
{
    if (x.b() == 0)
        return detail::format_rational(x.a());

    std::string radical = "sqrt(" + std::to_string(x.field().d()) + ")";
    Rational magnitude = x.b() < 0 ? Rational(-x.b()) : x.b();
    std::string irrational = magnitude == 1 ? radical : detail::format_rational(magnitude) + "*" + radical;

    if (x.a() == 0)
        return (x.b() < 0 ? "-" : "") + irrational;
    std::string sep = x.b() < 0 ? (compact ? "-" : " - ") : (compact ? "+" : " + ");
    return detail::format_rational(x.a()) + sep + irrational;
}

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << format_element(x); }

}  // namespace frieze
