#include "aag/wide.hpp"

#include <algorithm>

#include "aag/error.hpp"

namespace aag {

namespace {

constexpr Int::raw_type kMin = static_cast<Int::raw_type>(
    static_cast<unsigned __int128>(1) << 127);

[[noreturn]] void overflow(const char* op) {
    throw Error(ErrorCode::Overflow, std::string("128-bit overflow in ") + op);
}

}  // namespace

void detail::int_overflow(const char* op) { overflow(op); }
void detail::int_div_zero() { throw Error(ErrorCode::Overflow, "division by zero"); }

Int Int::operator-() const {
    if (v_ == kMin) overflow("negation");
    return from_raw(-v_);
}

std::int64_t Int::to_i64() const {
    if (!fits_i64()) overflow("narrowing to 64 bits");
    return static_cast<std::int64_t>(v_);
}

std::string Int::str() const {
    if (v_ == 0) return "0";
    unsigned __int128 u = v_ < 0 ? -static_cast<unsigned __int128>(v_)
                                 : static_cast<unsigned __int128>(v_);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (v_ < 0) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::optional<Int> Int::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) return std::nullopt;
    raw_type acc = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        int dgt = s[i] - '0';
        // accumulate negatively so that the minimum value parses too
        if (__builtin_mul_overflow(acc, 10, &acc) || __builtin_sub_overflow(acc, dgt, &acc))
            return std::nullopt;
    }
    if (!neg) {
        if (acc == kMin) return std::nullopt;
        acc = -acc;
    }
    return from_raw(acc);
}

Int abs(Int a) { return a < 0 ? -a : a; }

Int gcd(Int a, Int b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int isqrt(Int n) {
    if (n < 0) throw Error(ErrorCode::Overflow, "isqrt of negative value");
    if (n < 2) return n;
    // Newton from a power-of-two overestimate
    int bits = 0;
    for (unsigned __int128 u = static_cast<unsigned __int128>(n.raw()); u; u >>= 1) ++bits;
    Int x = Int::from_raw(static_cast<Int::raw_type>(1) << ((bits + 1) / 2));
    while (true) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) x -= 1;
    while ((x + 1) * (x + 1) <= n) x += 1;
    return x;
}

Int mod_inverse(Int x, Int m) {
    Int r0 = m, r1 = mod_floor(x, m);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw Error(ErrorCode::GcdViolation, "no modular inverse: gcd != 1");
    return mod_floor(t0, m);
}

const char* to_string(ErrorCode c) noexcept {
    switch (c) {
        case ErrorCode::NonsenseInput: return "NonsenseInput";
        case ErrorCode::NonPositiveGenerator: return "NonPositiveGenerator";
        case ErrorCode::GcdViolation: return "GcdViolation";
        case ErrorCode::NotMinimal: return "NotMinimal";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::ModulusTooLarge: return "ModulusTooLarge";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::NoPivot: return "NoPivot";
        case ErrorCode::NotStandardForm: return "NotStandardForm";
        case ErrorCode::InternalDispatchGap: return "InternalDispatchGap";
        case ErrorCode::DuplicatePfValue: return "DuplicatePfValue";
        case ErrorCode::MalformedPf: return "MalformedPf";
        case ErrorCode::FamilyConstraintViolated: return "FamilyConstraintViolated";
        case ErrorCode::UnknownFamily: return "UnknownFamily";
    }
    return "Unknown";
}

}  // namespace aag
