#include "tropmod/rational.hpp"

#include <cctype>
#include <cstddef>

namespace tropmod {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Parses an optionally signed decimal integer into mpz. Rejects junk.
std::optional<mpz_class> parse_int(const std::string& s) {
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    if (!all_digits(body)) return std::nullopt;
    mpz_class v(body, 10);
    if (neg) v = -v;
    return v;
}

} // namespace

std::optional<Rat> parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) return std::nullopt;

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        auto num = parse_int(s.substr(0, slash));
        auto den = parse_int(s.substr(slash + 1));
        if (!num || !den || *den == 0) return std::nullopt;
        Rat r(*num, *den);
        r.canonicalize();
        return r;
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (!all_digits(frac)) return std::nullopt;
        bool neg = !head.empty() && head[0] == '-';
        if (head == "-" || head == "+" || head.empty()) head += "0";
        auto whole = parse_int(head);
        if (!whole) return std::nullopt;
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class fpart(frac, 10);
        mpz_class num = *whole * scale + (neg ? -fpart : fpart);
        Rat r(num, scale);
        r.canonicalize();
        return r;
    }

    auto whole = parse_int(s);
    if (!whole) return std::nullopt;
    return Rat(*whole);
}

std::optional<ExtLength> parse_length(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "inf" || s == "infinity" || s == "+inf") return ExtLength::inf();
    auto r = parse_rational(text);
    if (!r || *r < 0) return std::nullopt;
    return ExtLength::of(*r);
}

std::string format_rational(const Rat& r) {
    return r.get_str();
}

std::string format_length(const ExtLength& x) {
    return x.infinite ? "inf" : format_rational(x.value);
}

} // namespace tropmod
