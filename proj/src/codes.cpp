#include "qramsey/codes.hpp"

#include "qramsey/errors.hpp"

namespace qramsey {

Code4 Code4::parse(std::string_view text) {
    if (text.size() != 4) throw DomainError("code literal '" + std::string(text) + "' needs 4 digits");
    Code4 c;
    for (int i = 0; i < 4; ++i) {
        if (text[i] < '0' || text[i] > '3') {
            throw DomainError("code literal '" + std::string(text) + "' has a digit outside 0..3");
        }
        c.e[i] = static_cast<std::uint8_t>(text[i] - '0');
    }
    return c;
}

std::string Code4::str() const {
    std::string s;
    for (auto v : e) s.push_back(static_cast<char>('0' + v));
    return s;
}

Code6 Code6::parse(std::string_view text) {
    if (text.size() != 6) throw DomainError("code literal '" + std::string(text) + "' needs 6 bits");
    Code6 c;
    for (char ch : text) {
        if (ch != '0' && ch != '1') throw DomainError("code literal '" + std::string(text) + "' is not binary");
        c.bits = static_cast<std::uint8_t>((c.bits << 1) | (ch == '1'));
    }
    return c;
}

std::string Code6::str() const {
    std::string s;
    for (int j = 0; j < 6; ++j) s.push_back(at(j) ? '1' : '0');
    return s;
}

Code6x4 Code6x4::parse(std::string_view text) {
    Code6x4 c;
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        auto comma = text.find(',', pos);
        if ((i < 3) != (comma != std::string_view::npos)) {
            throw DomainError("code literal '" + std::string(text) + "' needs 4 comma-separated groups");
        }
        c.e[i] = Code6::parse(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        pos = comma + 1;
    }
    return c;
}

std::string Code6x4::str() const {
    return e[0].str() + "," + e[1].str() + "," + e[2].str() + "," + e[3].str();
}

bool in_P(const Code4& t) noexcept {
    return t.at(0, 0) != 0 && t.at(1, 1) != 0 && t.at(0, 1) == 0 &&
           (t.at(1, 0) != 0 || t.at(0, 0) <= t.at(1, 1));
}

bool in_A(const Code4& t) noexcept {
    return t.at(0, 0) < 2 && (t.at(0, 1) == 0 || t.at(1, 0) == 0) && t.at(1, 1) != 0;
}

bool in_Cpi02_second(const Code4& t) noexcept {
    return t.at(0, 0) < 2 && t.at(0, 1) < 2 && t.at(1, 0) < 2 && (t.at(0, 1) == 0 || t.at(1, 0) == 0) &&
           t.at(1, 1) != 0;
}

bool in_N(const Code6& t) noexcept {
    return (t.bits != 0 && t.at(5) == 0) || (t.at(2) == 1 && t.at(3) == 0) || (t.at(0) == 1 && t.at(4) == 0);
}

bool in_C(const Code6& t) noexcept {
    auto implies = [](int a, int b) { return !a || b; };
    return implies(t.at(0), t.at(4)) && implies(t.at(4), t.at(5)) && implies(t.at(2), t.at(3)) &&
           implies(t.at(3), t.at(5));
}

namespace {

// All bits outside `free_mask` are zero.
bool only(const Code6& t, std::uint8_t free_mask) { return (t.bits & ~free_mask) == 0; }

constexpr std::uint8_t mask(int j) { return static_cast<std::uint8_t>(1u << (5 - j)); }

}  // namespace

bool in_V(const Code6x4& t) noexcept {
    return only(t.at(0, 0), mask(5)) && t.at(0, 1) == Code6::of(mask(4)) &&
           only(t.at(1, 0), mask(3) | mask(5)) && !in_N(t.at(1, 1));
}

bool in_H(const Code6x4& t) noexcept {
    return !in_N(t.at(0, 0)) && t.at(0, 1) == Code6::of(mask(3)) && only(t.at(1, 0), mask(4) | mask(5)) &&
           t.at(1, 0) != Code6::of(mask(4)) && only(t.at(1, 1), mask(5));
}

bool in_S(const Code6x4& t) noexcept {
    const Code6 e1 = Code6::of(mask(1));
    return !in_N(t.at(0, 0)) && !in_N(t.at(1, 1)) && t.at(0, 1) == e1 && in_C(t.at(1, 0)) &&
           (t.at(1, 0) != e1 || t.at(0, 0) <= t.at(1, 1));
}

}  // namespace qramsey
