// Command-line front end: classification of degree-3 rational functions
// over F_q up to PGL(2,q)-equivalence, invariants, ramification types,
// brute-force verification suites and the published-table checks.
//
// Exit codes: 0 success / verified, 1 falsified or not equivalent, 2 usage.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "rf3/oracle.hpp"
#include "rf3/paper_tables.hpp"
#include "rf3/text.hpp"

using nlohmann::json;
using namespace rf3;

namespace {

struct CommonOpts {
    std::string field;
    std::string modulus;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_field = true) {
    auto* f = cmd->add_option("--field", o.field, "field as p or p^n");
    if (need_field) f->required();
    cmd->add_option("--modulus", o.modulus,
                    "monic modulus digits c0,c1,...,cn over F_p (default: scan-minimal)");
    cmd->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "also write the JSON report to this path");
}

FieldCtx make_field(const CommonOpts& o) {
    FieldSpec fs = parse_field_name(o.field);
    std::optional<std::vector<u32>> mod;
    if (!o.modulus.empty()) mod = parse_modulus_digits(o.modulus);
    return FieldCtx(fs.p, fs.n, mod);
}

void emit(const CommonOpts& o, const std::string& text, const json& j) {
    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        f << j.dump(2) << "\n";
    }
}

json field_json(const FieldCtx& F) {
    return json{{"p", F.p()}, {"n", F.n()}, {"q", F.q()}, {"modulus", F.modulus()}};
}

json label_json(const FieldCtx& F, const ClassLabel& l) {
    json j{{"label", label_string(F, l)}};
    using K = ClassLabel::Kind;
    switch (l.kind) {
        case K::IIA:
        case K::IIB: j["t"] = elem_string(F, l.value); break;
        case K::IIIa:
        case K::IIIeven: j["theta"] = elem_string(F, l.value); break;
        case K::IIIb: j["mu2"] = elem_string(F, l.value); break;
        case K::IIIwild27: j["ram"] = ram_type_string(l.ram); break;
        default: break;
    }
    return j;
}

json suite_json(const SuiteReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"note", c.note}});
    return json{
        {"suite", rep.suite}, {"field", rep.field}, {"pass", rep.pass}, {"checks", checks}};
}

json table_json(const TableReport& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"item", r.item}, {"want", r.want}, {"got", r.got}, {"pass", r.pass}});
    return json{{"title", t.title}, {"pass", t.pass}, {"rows", rows}};
}

std::string table_text(const TableReport& t) {
    std::string s = t.title + "\n";
    for (const auto& r : t.rows)
        s += std::string(r.pass ? "  ok   " : "  FAIL ") + r.item + "  want " + r.want +
             "  got " + r.got + "\n";
    s += t.pass ? "PASS\n" : "FAIL\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification of degree-3 rational functions over finite fields"};
    app.require_subcommand(1);

    CommonOpts field_o;
    auto* cmd_field = app.add_subcommand("field", "show field parameters");
    add_common(cmd_field, field_o);

    CommonOpts cls_o;
    std::string cls_num, cls_den;
    auto* cmd_cls = app.add_subcommand("classify", "canonical label of a degree-3 function");
    add_common(cmd_cls, cls_o);
    cmd_cls->add_option("--num", cls_num, "numerator polynomial")->required();
    cmd_cls->add_option("--den", cls_den, "denominator polynomial")->required();

    CommonOpts inv_o;
    std::string inv_s, inv_t;
    auto* cmd_inv = app.add_subcommand("invariants", "subclass and invariants of f_{s,t}");
    add_common(cmd_inv, inv_o);
    cmd_inv->add_option("--s", inv_s, "s parameter")->required();
    cmd_inv->add_option("--t", inv_t, "t parameter")->required();

    CommonOpts ram_o;
    std::string ram_num, ram_den, ram_s, ram_t;
    auto* cmd_ram = app.add_subcommand("ramtype", "ramification type of a degree-3 function");
    add_common(cmd_ram, ram_o);
    cmd_ram->add_option("--num", ram_num, "numerator polynomial");
    cmd_ram->add_option("--den", ram_den, "denominator polynomial");
    cmd_ram->add_option("--s", ram_s, "s parameter of f_{s,t}");
    cmd_ram->add_option("--t", ram_t, "t parameter of f_{s,t}");

    CommonOpts eq_o;
    std::string f_num, f_den, g_num, g_den;
    auto* cmd_eq = app.add_subcommand("equiv", "brute-force equivalence witness search");
    add_common(cmd_eq, eq_o);
    cmd_eq->add_option("--f-num", f_num)->required();
    cmd_eq->add_option("--f-den", f_den)->required();
    cmd_eq->add_option("--g-num", g_num)->required();
    cmd_eq->add_option("--g-den", g_den)->required();

    CommonOpts enum_o;
    auto* cmd_enum = app.add_subcommand("enumerate-classes", "all class representatives");
    add_common(cmd_enum, enum_o);

    CommonOpts cnt_o;
    auto* cmd_cnt = app.add_subcommand("counts", "closed-form class counts");
    add_common(cmd_cnt, cnt_o);

    CommonOpts ver_o;
    std::string suite;
    u64 seed = 12345;
    u32 samples = 200;
    auto* cmd_ver = app.add_subcommand("verify", "run a verification suite");
    add_common(cmd_ver, ver_o);
    cmd_ver->add_option("--suite", suite, "suite name")->required();
    cmd_ver->add_option("--seed", seed, "seed for sampled checks");
    cmd_ver->add_option("--samples", samples, "sample count for sampled checks");

    CommonOpts pt_o;
    u32 pt_q = 0, pt_even = 0;
    auto* cmd_pt = app.add_subcommand("paper-tables", "recompute the published tables");
    cmd_pt->add_option("--q", pt_q, "27 or 25: the published invariant tables");
    cmd_pt->add_option("--even", pt_even, "even q: the comparison table");
    cmd_pt->add_option("--format", pt_o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_pt->add_option("--out", pt_o.out, "also write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_field->parsed()) {
            FieldCtx F = make_field(field_o);
            std::string modstr;
            for (size_t i = 0; i < F.modulus().size(); ++i)
                modstr += (i ? "," : "") + std::to_string(F.modulus()[i]);
            std::string text = "p=" + std::to_string(F.p()) + " n=" + std::to_string(F.n()) +
                               " q=" + std::to_string(F.q()) + " modulus=" + modstr + "\n";
            emit(field_o, text, field_json(F));
            return 0;
        }
        if (cmd_cls->parsed()) {
            FieldCtx F = make_field(cls_o);
            RatFun f = rf_make(F, parse_poly(F, cls_num), parse_poly(F, cls_den));
            ClassLabel l = classify(F, f);
            json j = label_json(F, l);
            j["field"] = field_json(F);
            j["num"] = poly_string(F, f.num);
            j["den"] = poly_string(F, f.den);
            emit(cls_o, label_string(F, l) + "\n", j);
            return 0;
        }
        if (cmd_inv->parsed()) {
            FieldCtx F = make_field(inv_o);
            FstParams sp{parse_elem(F, inv_s), parse_elem(F, inv_t)};
            if (!in_omega(F, sp.s, sp.t)) throw std::domain_error("(s,t) outside Omega");
            Subclass sub = subclass(F, sp);
            json j{{"field", field_json(F)},
                   {"s", elem_string(F, sp.s)},
                   {"t", elem_string(F, sp.t)},
                   {"subclass", subclass_name(sub)},
                   {"theta", elem_string(F, theta(F, sp))}};
            std::string text = std::string("subclass=") + subclass_name(sub) + "\n" +
                               "theta=" + elem_string(F, theta(F, sp)) + "\n";
            if (sub == Subclass::IIIb) {
                Fe m = mu_squared(F, sp), l = lambda_cr(F, sp);
                j["mu2"] = elem_string(F, m);
                j["lambda"] = elem_string(F, l);
                text += "mu2=" + elem_string(F, m) + "\n";
                text += "lambda=" + elem_string(F, l) + "\n";
            }
            emit(inv_o, text, j);
            return 0;
        }
        if (cmd_ram->parsed()) {
            FieldCtx F = make_field(ram_o);
            RatFun f = !ram_s.empty() || !ram_t.empty()
                           ? fst(F, FstParams{parse_elem(F, ram_s), parse_elem(F, ram_t)})
                           : rf_make(F, parse_poly(F, ram_num), parse_poly(F, ram_den));
            RamType rt = ram_type(F, f);
            json j{{"field", field_json(F)}, {"ram", ram_type_string(rt)}};
            emit(ram_o, ram_type_string(rt) + "\n", j);
            return 0;
        }
        if (cmd_eq->parsed()) {
            FieldCtx F = make_field(eq_o);
            RatFun f = rf_make(F, parse_poly(F, f_num), parse_poly(F, f_den));
            RatFun g = rf_make(F, parse_poly(F, g_num), parse_poly(F, g_den));
            auto w = brute_equiv(F, f, g);
            json j{{"field", field_json(F)}, {"equivalent", w.has_value()}};
            if (w) {
                j["psi"] = moebius_string(F, w->psi);
                j["phi"] = moebius_string(F, w->phi);
                emit(eq_o,
                     "equivalent psi=" + moebius_string(F, w->psi) +
                         " phi=" + moebius_string(F, w->phi) + "\n",
                     j);
                return 0;
            }
            emit(eq_o, "not equivalent\n", j);
            return 1;
        }
        if (cmd_enum->parsed()) {
            FieldCtx F = make_field(enum_o);
            auto reps = representatives(F);
            std::string text;
            json arr = json::array();
            for (const auto& r : reps) {
                text += label_string(F, r.label) + " num=" + poly_string(F, r.fn.num) +
                        " den=" + poly_string(F, r.fn.den) + "\n";
                json jr = label_json(F, r.label);
                jr["num"] = poly_string(F, r.fn.num);
                jr["den"] = poly_string(F, r.fn.den);
                arr.push_back(jr);
            }
            text += "total=" + std::to_string(reps.size()) + "\n";
            emit(enum_o, text, json{{"field", field_json(F)}, {"classes", arr}});
            return 0;
        }
        if (cmd_cnt->parsed()) {
            FieldCtx F = make_field(cnt_o);
            ClassCounts c = class_counts(F);
            std::string text = "N_I=" + std::to_string(c.class_i) +
                               " N_II=" + std::to_string(c.class_ii) +
                               " N_III=" + std::to_string(c.class_iii) +
                               " N=" + std::to_string(c.total) + "\n";
            emit(cnt_o, text,
                 json{{"field", field_json(F)},
                      {"N_I", c.class_i},
                      {"N_II", c.class_ii},
                      {"N_III", c.class_iii},
                      {"N", c.total}});
            return 0;
        }
        if (cmd_ver->parsed()) {
            FieldCtx F = make_field(ver_o);
            SuiteReport rep = verify_suite(F, suite, seed, samples);
            std::string text;
            for (const auto& c : rep.checks)
                text += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name +
                        (c.note.empty() ? "" : ": " + c.note) + "\n";
            text += rep.pass ? "PASS\n" : "FAIL\n";
            emit(ver_o, text, suite_json(rep));
            return rep.pass ? 0 : 1;
        }
        if (cmd_pt->parsed()) {
            if ((pt_q != 0) == (pt_even != 0))
                throw std::invalid_argument("paper-tables: give exactly one of --q, --even");
            std::vector<TableReport> reports;
            if (pt_q != 0) {
                reports = paper_invariant_tables(pt_q);
            } else {
                FieldSpec fs{2, 0};
                u32 v = pt_even;
                while (v > 1 && v % 2 == 0) {
                    v /= 2;
                    ++fs.n;
                }
                if (v != 1 || fs.n == 0)
                    throw std::invalid_argument("paper-tables: --even must be a power of 2");
                FieldCtx F(2, fs.n);
                reports.push_back(paper_even_table(F));
            }
            std::string text;
            json arr = json::array();
            bool pass = true;
            for (const auto& t : reports) {
                text += table_text(t);
                arr.push_back(table_json(t));
                pass = pass && t.pass;
            }
            emit(pt_o, text, json{{"tables", arr}, {"pass", pass}});
            return pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
