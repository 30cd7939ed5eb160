#include "hexanet/scalar.hpp"

#include <cctype>
#include <ostream>

namespace hexanet {

const char* ring_name(Ring r) {
    switch (r) {
        case Ring::Rat: return "Q";
        case Ring::Gauss: return "C";
        case Ring::Quat: return "H";
    }
    return "?";
}

Ring ring_from_name(const std::string& name) {
    if (name == "Q") return Ring::Rat;
    if (name == "C") return Ring::Gauss;
    if (name == "H") return Ring::Quat;
    throw ParseError("unknown ring: " + name);
}

Scalar Scalar::embed(Ring target) const {
    if ((ring_ == Ring::Gauss && target == Ring::Rat) ||
        (ring_ == Ring::Quat && target != Ring::Quat)) {
        Scalar out(target, c_[0], target == Ring::Rat ? Rat(0) : c_[1]);
        if ((target == Ring::Rat && c_[1] != 0) || c_[2] != 0 || c_[3] != 0)
            throw RingMismatchError();
        return out;
    }
    return Scalar(target, c_[0], c_[1], c_[2], c_[3]);
}

namespace {

std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::string Scalar::to_string() const {
    static const char* units[4] = {"", " i", " j", " k"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        if (!out.empty() && c_[k] > 0) out += "+";
        out += rat_str(c_[k]) + units[k];
    }
    if (out.empty()) out = "0/1";
    return out;
}

Scalar Scalar::parse(const std::string& text, Ring ring) {
    Rat comp[4] = {Rat(0), Rat(0), Rat(0), Rat(0)};
    std::size_t pos = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] { while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos == n) throw ParseError("empty scalar literal");
    bool any = false;
    while (pos < n) {
        skip_ws();
        int sign = 1;
        if (pos < n && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        } else if (any) {
            throw ParseError("expected '+' or '-' in scalar: " + text);
        }
        std::size_t start = pos;
        while (pos < n && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (start == pos) throw ParseError("expected rational in scalar: " + text);
        std::string num = text.substr(start, pos - start);
        if (num.find('/') == std::string::npos) num += "/1";
        Rat q;
        if (q.set_str(num, 10) != 0) throw ParseError("bad rational: " + num);
        q.canonicalize();
        skip_ws();
        int unit = 0;
        if (pos < n && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
            unit = text[pos] == 'i' ? 1 : text[pos] == 'j' ? 2 : 3;
            ++pos;
        }
        if (comp[unit] != 0) throw ParseError("repeated component in scalar: " + text);
        comp[unit] = sign * q;
        any = true;
        skip_ws();
    }
    Scalar out(ring, comp[0], comp[1], comp[2], comp[3]);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Rat random_rational(Rng& rng, bool nonzero_only) {
    for (;;) {
        long p = rng.uniform(-20, 20);
        if (nonzero_only && p == 0) continue;
        long q = rng.uniform(1, 5);
        Rat r(p, q);
        r.canonicalize();
        return r;
    }
}

Scalar random_scalar(Ring ring, Rng& rng, bool nonzero_only) {
    for (;;) {
        Scalar s(ring, random_rational(rng),
                 ring != Ring::Rat ? random_rational(rng) : Rat(0),
                 ring == Ring::Quat ? random_rational(rng) : Rat(0),
                 ring == Ring::Quat ? random_rational(rng) : Rat(0));
        if (nonzero_only && s.is_zero()) continue;
        return s;
    }
}

}  // namespace hexanet
