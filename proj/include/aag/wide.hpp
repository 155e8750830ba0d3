#pragma once

// Checked 128-bit signed integer. Every operation that would leave the
// representable range throws aag::Error(ErrorCode::Overflow) instead of wrapping.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

namespace aag {

namespace detail {
[[noreturn]] void int_overflow(const char* op);
[[noreturn]] void int_div_zero();
}

class Int {
public:
    using raw_type = __int128;

    constexpr Int() noexcept = default;
    template <typename T,
              typename = std::enable_if_t<std::is_integral_v<T> && !std::is_same_v<T, bool>>>
    constexpr Int(T v) noexcept : v_(static_cast<raw_type>(v)) {}

    static constexpr Int from_raw(raw_type v) noexcept {
        Int r;
        r.v_ = v;
        return r;
    }
    constexpr raw_type raw() const noexcept { return v_; }

    // narrowing, throws if the value does not fit
    std::int64_t to_i64() const;
    bool fits_i64() const noexcept {
        return v_ >= INT64_MIN && v_ <= INT64_MAX;
    }
    double to_double() const noexcept { return static_cast<double>(v_); }

    std::string str() const;
    static std::optional<Int> parse(std::string_view s);

    friend Int operator+(Int a, Int b) {
        raw_type r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) detail::int_overflow("+");
        return from_raw(r);
    }
    friend Int operator-(Int a, Int b) {
        raw_type r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) detail::int_overflow("-");
        return from_raw(r);
    }
    friend Int operator*(Int a, Int b) {
        if (a.fits_i64() && b.fits_i64()) return from_raw(a.v_ * b.v_);  // cannot overflow
        raw_type r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) detail::int_overflow("*");
        return from_raw(r);
    }
    // truncating, like the built-in operators
    friend Int operator/(Int a, Int b) {
        if (b.v_ == 0) detail::int_div_zero();
        if (b.v_ == -1) return -a;
        if (a.fits_i64() && b.fits_i64())
            return from_raw(static_cast<std::int64_t>(a.v_) / static_cast<std::int64_t>(b.v_));
        return from_raw(a.v_ / b.v_);
    }
    friend Int operator%(Int a, Int b) {
        if (b.v_ == 0) detail::int_div_zero();
        if (b.v_ == -1) return Int(0);
        if (a.fits_i64() && b.fits_i64())
            return from_raw(static_cast<std::int64_t>(a.v_) % static_cast<std::int64_t>(b.v_));
        return from_raw(a.v_ % b.v_);
    }
    Int operator-() const;

    Int& operator+=(Int o) { return *this = *this + o; }
    Int& operator-=(Int o) { return *this = *this - o; }
    Int& operator*=(Int o) { return *this = *this * o; }
    Int& operator/=(Int o) { return *this = *this / o; }
    Int& operator++() { return *this += 1; }
    Int& operator--() { return *this -= 1; }

    friend constexpr bool operator==(Int a, Int b) noexcept { return a.v_ == b.v_; }
    friend constexpr std::strong_ordering operator<=>(Int a, Int b) noexcept {
        return a.v_ < b.v_ ? std::strong_ordering::less
             : a.v_ > b.v_ ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

private:
    raw_type v_ = 0;
};

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
    return q;
}
inline Int ceil_div(Int a, Int b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) == (b < 0))) q += 1;
    return q;
}
// result in [0, |b|)
inline Int mod_floor(Int a, Int b) {
    Int m = a % b;
    if (m < 0) m += (b < 0 ? -b : b);
    return m;
}
Int gcd(Int a, Int b);
Int abs(Int a);
// exact integer square root of n >= 0 (floor)
Int isqrt(Int n);
// inverse of x modulo m (m > 1, gcd(x, m) = 1), result in [0, m)
Int mod_inverse(Int x, Int m);

inline std::string to_string(Int v) { return v.str(); }

}  // namespace aag
