#pragma once

#include <string>

#include "rf3/classify.hpp"

namespace rf3 {

// Literal grammar shared by the CLI and the JSON output:
//   field     "p" or "p^n"
//   element   "[c0,c1,...,c_{n-1}]", digits in [0,p); bare integer for prime fields
//   poly      comma-separated element literals, ascending degree
//   moebius   "a,b,c,d" element literals
// Every printer emits a string the matching parser accepts.

std::string elem_string(const FieldCtx& F, Fe x);
Fe parse_elem(const FieldCtx& F, const std::string& s);

std::string poly_string(const FieldCtx& F, const Poly& f);
Poly parse_poly(const FieldCtx& F, const std::string& s);

std::string moebius_string(const FieldCtx& F, const Moebius& m);
Moebius parse_moebius(const FieldCtx& F, const std::string& s);

std::string ratfun_string(const FieldCtx& F, const RatFun& f);

struct FieldSpec {
    u32 p, n;
};
FieldSpec parse_field_name(const std::string& s);

/// "c0,c1,...,cn" base-p digits of the monic modulus, ascending.
std::vector<u32> parse_modulus_digits(const std::string& s);

std::string label_string(const FieldCtx& F, const ClassLabel& l);

}  // namespace rf3
