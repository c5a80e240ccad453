#include "rf3/text.hpp"

#include <stdexcept>

namespace rf3 {

namespace {

std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

u32 parse_u32(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse: empty number");
    size_t pos = 0;
    unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("parse: bad number '" + s + "'");
    return u32(v);
}

}  // namespace

std::string elem_string(const FieldCtx& F, Fe x) {
    if (F.n() == 1) return std::to_string(x.v);
    auto c = F.coeffs(x);
    std::string s = "[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

Fe parse_elem(const FieldCtx& F, const std::string& s) {
    if (s.empty()) throw std::invalid_argument("element: empty literal");
    if (s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("element: unbalanced brackets");
        auto parts = split_top_level(s.substr(1, s.size() - 2));
        std::vector<u32> c;
        for (auto& part : parts) c.push_back(parse_u32(part));
        if (c.size() != F.n()) throw std::invalid_argument("element: wrong coefficient count");
        return F.from_coeffs(c);
    }
    if (F.n() != 1)
        throw std::invalid_argument("element: bare integers are for prime fields only");
    u32 v = parse_u32(s);
    if (v >= F.p()) throw std::invalid_argument("element: value out of range");
    return Fe{v};
}

std::string poly_string(const FieldCtx& F, const Poly& f) {
    if (f.is_zero()) return elem_string(F, F.zero());
    std::string s;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (i) s += ",";
        s += elem_string(F, f.c[i]);
    }
    return s;
}

Poly parse_poly(const FieldCtx& F, const std::string& s) {
    std::vector<Fe> c;
    for (auto& part : split_top_level(s)) c.push_back(parse_elem(F, part));
    return poly_from(std::move(c));
}

std::string moebius_string(const FieldCtx& F, const Moebius& m) {
    return elem_string(F, m.a) + "," + elem_string(F, m.b) + "," + elem_string(F, m.c) + "," +
           elem_string(F, m.d);
}

Moebius parse_moebius(const FieldCtx& F, const std::string& s) {
    auto parts = split_top_level(s);
    if (parts.size() != 4) throw std::invalid_argument("moebius: need four elements");
    return moebius(F, parse_elem(F, parts[0]), parse_elem(F, parts[1]), parse_elem(F, parts[2]),
                   parse_elem(F, parts[3]));
}

std::string ratfun_string(const FieldCtx& F, const RatFun& f) {
    return "(" + poly_string(F, f.num) + ")/(" + poly_string(F, f.den) + ")";
}

FieldSpec parse_field_name(const std::string& s) {
    auto caret = s.find('^');
    if (caret == std::string::npos) return FieldSpec{parse_u32(s), 1};
    return FieldSpec{parse_u32(s.substr(0, caret)), parse_u32(s.substr(caret + 1))};
}

std::vector<u32> parse_modulus_digits(const std::string& s) {
    std::vector<u32> c;
    for (auto& part : split_top_level(s)) c.push_back(parse_u32(part));
    return c;
}

std::string label_string(const FieldCtx& F, const ClassLabel& l) {
    using K = ClassLabel::Kind;
    switch (l.kind) {
        case K::Isep: return "I-sep";
        case K::Iinsep: return "I-insep";
        case K::IIA: return "II-A(t=" + elem_string(F, l.value) + ")";
        case K::IIB: return "II-B(t=" + elem_string(F, l.value) + ")";
        case K::IIIa: return "III-a(theta=" + elem_string(F, l.value) + ")";
        case K::IIIb: return "III-b(mu2=" + elem_string(F, l.value) + ")";
        case K::IIIwild27: return "III-wild27(ram=" + ram_type_string(l.ram) + ")";
        case K::IIIp3d: return "III-p3d";
        case K::IIIeven: return "III-even(theta=" + elem_string(F, l.value) + ")";
    }
    return "?";
}

}  // namespace rf3
