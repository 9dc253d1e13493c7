// Exact rational numbers for opacity values, so that 2/3 serializes as the
// conventional "0.666" instead of a rounded double.
#ifndef NAMESTACK_RATIO_HPP
#define NAMESTACK_RATIO_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace namestack {

class Ratio {
public:
    constexpr Ratio() : num_(0), den_(1) {}

    constexpr Ratio(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0)
            throw std::invalid_argument("ratio: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    // Accepts "0.666", ".5", "1", and fraction forms like "2/3".
    static Ratio parse(std::string_view text) {
        if (text.empty())
            throw std::invalid_argument("ratio: empty string");
        const auto slash = text.find('/');
        if (slash != std::string_view::npos) {
            return Ratio(parse_int(text.substr(0, slash)),
                         parse_int(text.substr(slash + 1)));
        }
        const auto dot = text.find('.');
        if (dot == std::string_view::npos)
            return Ratio(parse_int(text), 1);
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.size() > 9)
            throw std::invalid_argument("ratio: too many decimal places");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            den *= 10;
        const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
        const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
        return Ratio(w * den + f, den);
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend constexpr bool operator==(const Ratio& a, const Ratio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
    friend constexpr bool operator<(const Ratio& a, const Ratio& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend constexpr bool operator<=(const Ratio& a, const Ratio& b) {
        return a.num_ * b.den_ <= b.num_ * a.den_;
    }

    // Fixed three decimal places, truncated toward zero: 2/3 -> "0.666".
    std::string fixed3() const {
        if (num_ < 0)
            throw std::domain_error("ratio: fixed3 on negative value");
        const std::int64_t milli = num_ * 1000 / den_;
        std::string out = std::to_string(milli / 1000);
        out += '.';
        const std::string frac = std::to_string(milli % 1000);
        out.append(3 - frac.size(), '0');
        out += frac;
        return out;
    }

    // fixed3 with trailing zeros (and a bare point) trimmed: 1/2 -> "0.5", 1 -> "1".
    std::string minimal() const {
        std::string out = fixed3();
        while (out.back() == '0')
            out.pop_back();
        if (out.back() == '.')
            out.pop_back();
        return out;
    }

private:
    static std::int64_t parse_int(std::string_view text) {
        if (text.empty())
            throw std::invalid_argument("ratio: missing digits");
        std::int64_t value = 0;
        for (const char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("ratio: bad character in number");
            value = value * 10 + (c - '0');
            if (value > 2'000'000'000)
                throw std::invalid_argument("ratio: number out of range");
        }
        return value;
    }

    std::int64_t num_;
    std::int64_t den_;
};

// The default ink opacity for a name stack.
inline constexpr Ratio default_opacity() { return Ratio(2, 3); }

}  // namespace namestack

#endif
