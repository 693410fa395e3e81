#pragma once

// Code tuples naming antichain-basis members, their text literals and the
// membership filters of each code family.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qramsey {

/// Element of 4^(2^2). Entries ordered (0,0), (0,1), (1,0), (1,1).
struct Code4 {
    std::array<std::uint8_t, 4> e{};

    std::uint8_t at(int eps, int eta) const noexcept { return e[2 * eps + eta]; }
    /// Four digits, e.g. "1001".
    static Code4 parse(std::string_view text);
    std::string str() const;

    friend auto operator<=>(const Code4&, const Code4&) = default;
};

/// Element of 2^6; bit j is character j of the literal.
struct Code6 {
    std::uint8_t bits = 0;

    int at(int j) const noexcept { return (bits >> (5 - j)) & 1; }
    static Code6 of(std::uint8_t packed) { return {packed}; }
    /// Six bits, e.g. "000110".
    static Code6 parse(std::string_view text);
    std::string str() const;

    friend auto operator<=>(const Code6&, const Code6&) = default;
};

/// Element of (2^6)^(2^2). Entries ordered (0,0), (0,1), (1,0), (1,1).
struct Code6x4 {
    std::array<Code6, 4> e{};

    const Code6& at(int eps, int eta) const noexcept { return e[2 * eps + eta]; }
    /// Four comma-separated 6-bit groups.
    static Code6x4 parse(std::string_view text);
    std::string str() const;

    friend auto operator<=>(const Code6x4&, const Code6x4&) = default;
};

bool in_P(const Code4& t) noexcept;
bool in_A(const Code4& t) noexcept;
/// Second family of the Pi02 catalog (codes on S).
bool in_Cpi02_second(const Code4& t) noexcept;
bool in_N(const Code6& t) noexcept;
bool in_C(const Code6& t) noexcept;
bool in_V(const Code6x4& t) noexcept;
bool in_H(const Code6x4& t) noexcept;
bool in_S(const Code6x4& t) noexcept;

}  // namespace qramsey
