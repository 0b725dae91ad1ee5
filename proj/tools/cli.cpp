#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "refl/eigenstab.hpp"
#include "refl/error.hpp"
#include "refl/laurent.hpp"
#include "refl/literal.hpp"
#include "refl/springer.hpp"
#include "report.hpp"

namespace refl::cli {
namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kE7Order = 2903040;

const std::vector<std::string> kDefaultTypes = {
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4", "B5", "B6", "D4", "D5", "D6",
    "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "I2(9)", "I2(10)", "I2(11)", "I2(12)",
    "G2", "F4", "H3", "H4", "E6"};

std::vector<std::string> expand_types(const std::vector<std::string>& requested, bool include_e7) {
    std::vector<std::string> out;
    for (const auto& t : requested) {
        if (t == "all") {
            out.insert(out.end(), kDefaultTypes.begin(), kDefaultTypes.end());
            if (include_e7) out.emplace_back("E7");
        } else {
            out.push_back(t);
        }
    }
    return out;
}

std::vector<int> parse_b_list(const std::string& text) {
    std::vector<int> bs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int b = 0;
        try {
            b = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || b < 1) throw ParseError("invalid b value '" + item + "'");
        bs.push_back(b);
    }
    if (bs.empty()) throw ParseError("empty b list");
    std::set<int> uniq(bs.begin(), bs.end());
    return {uniq.begin(), uniq.end()};
}

Vector parse_vector(const std::vector<std::string>& items) {
    Vector v;
    for (const auto& s : items) v.push_back(parse_scalar(s));
    return v;
}

std::vector<std::string> format_vector(std::span<const CycloNum> v) {
    std::vector<std::string> out;
    for (const auto& c : v) out.push_back(format_scalar(c));
    return out;
}

std::vector<int> indices(const RootSubset& s) {
    std::vector<int> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.test(i)) out.push_back(static_cast<int>(i));
    return out;
}

/// Writes to --out when given, else to out.
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw Error("cannot write " + path);
}

struct VerifyConfig {
    std::vector<std::string> types;
    std::string b = "all";
    std::string format = "json";
    std::string out;
    std::uint64_t cap = kDefaultGroupCap;
    bool cap_given = false;
    unsigned workers = 0;
    bool include_e7 = false;
    bool properties = false;
};

/// Kostant order check on top of the main inequality: every w admitting zeta_h has order h.
bool check_properties(const GroupReport& g, std::ostream& err) {
    bool ok = true;
    for (const auto& r : g.results) {
        if (r.b != g.facts->coxeter_number) continue;
        for (int ord : r.admitting_orders)
            if (ord != r.b) {
                err << "PROPERTY FAILED " << g.type << ": element of order " << ord << " admits zeta_h\n";
                ok = false;
            }
    }
    return ok;
}

int run_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
    Format format = parse_format(cfg.format);
    std::vector<GroupReport> reports;
    bool unsupported = false, capped = false, property_failed = false;
    for (const auto& type : expand_types(cfg.types, cfg.include_e7)) {
        GroupReport rep{type, std::nullopt, {}, std::nullopt};
        try {
            TypeLabel label = TypeLabel::parse(type);
            rep.type = label.str();
            rep.facts = group_facts(label);
            if (label.family == 'E' && label.n == 7 && !cfg.include_e7)
                throw UnsupportedType("E7 requires --include-e7");
            std::uint64_t cap = cfg.cap;
            if (cfg.include_e7 && !cfg.cap_given) cap = std::max(cap, kE7Order);
            // reject before building anything
            if (rep.facts->order > cap) throw GroupTooLarge(rep.facts->order, cap);
            RootSystem rs = RootSystem::build(label);
            GroupEnumeration g = enumerate_group(rs, cap);
            std::vector<int> bs = cfg.b == "all" ? degree_divisors(rs) : parse_b_list(cfg.b);
            rep.results = verify(rs, g, bs, VerifyOptions{cfg.workers});
            if (cfg.properties && !check_properties(rep, err)) property_failed = true;
        } catch (const GroupTooLarge& e) {
            rep.skipped = e.what();
            capped = true;
        } catch (const UnsupportedType& e) {
            rep.skipped = e.what();
            unsupported = true;
        }
        if (rep.skipped) err << "skipped " << rep.type << ": " << *rep.skipped << "\n";
        reports.push_back(std::move(rep));
    }
    write_output(cfg.out, emit_report(reports, format), out);
    if (!all_pass(reports) || property_failed) {
        err << counterexamples(reports);
        return kTheoremFailed;
    }
    if (unsupported) return kUsage;
    if (capped) return kResourceCap;
    return kPass;
}

ordered_json group_info(const RootSystem& rs) {
    const GroupFacts f = group_facts(rs.label());
    ordered_json coxeter = ordered_json::array();
    for (int i = 0; i < rs.rank(); ++i) {
        coxeter.push_back(ordered_json::array());
        for (int j = 0; j < rs.rank(); ++j) coxeter.back().push_back(rs.coxeter_entry(i, j));
    }
    return {{"type", rs.label().str()},    {"rank", rs.rank()},
            {"order", f.order},            {"coxeter_number", f.coxeter_number},
            {"degrees", f.degrees},        {"num_roots", f.num_roots},
            {"b_values", degree_divisors(rs)}, {"coxeter_matrix", coxeter}};
}

int run_info(const std::vector<std::string>& types, bool include_e7, const std::string& format, std::ostream& out) {
    ordered_json all = ordered_json::array();
    std::ostringstream text;
    for (const auto& t : expand_types(types, include_e7)) {
        RootSystem rs = RootSystem::build(TypeLabel::parse(t));
        ordered_json j = group_info(rs);
        all.push_back(j);
        text << j["type"].get<std::string>() << ": rank " << rs.rank() << ", |W| = " << j["order"]
             << ", h = " << j["coxeter_number"] << ", degrees " << j["degrees"].dump() << ", |Phi| = "
             << j["num_roots"] << ", b values " << j["b_values"].dump() << "\n";
    }
    if (format == "json")
        out << (all.size() == 1 ? all.front() : all).dump(2) << "\n";
    else if (format == "text")
        out << text.str();
    else
        throw ParseError("unknown format '" + format + "' (expected json or text)");
    return kPass;
}

int run_eigen_list(const std::string& type, int b, std::uint64_t cap, std::ostream& out) {
    if (b < 1) throw ParseError("b must be positive");
    RootSystem rs = RootSystem::build(TypeLabel::parse(type));
    GroupEnumeration g = enumerate_group(rs, cap);
    struct Entry {
        Subspace space;
        std::size_t first;
        std::size_t count;
        std::set<int> orders;
    };
    std::vector<Entry> entries;
    std::map<std::string, std::size_t> by_key;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (!admits_primitive_eigenvalue(characteristic_polynomial(g.matrix(i)), b)) continue;
        Subspace e = eigenspace(rs, g.matrix(i), b);
        auto [it, fresh] = by_key.emplace(e.key(), entries.size());
        if (fresh) entries.push_back({e, i, 0, {}});
        Entry& en = entries[it->second];
        ++en.count;
        en.orders.insert(g.element_order(i));
    }
    ordered_json list = ordered_json::array();
    for (const auto& en : entries) {
        ordered_json basis = ordered_json::array();
        for (std::size_t r = 0; r < en.space.dim(); ++r) basis.push_back(format_vector(en.space.basis().row_vector(r)));
        list.push_back({{"dim", en.space.dim()},
                        {"basis", basis},
                        {"elements", en.count},
                        {"element_orders", std::vector<int>(en.orders.begin(), en.orders.end())},
                        {"representative_word", g.word(en.first)}});
    }
    ordered_json doc{{"type", rs.label().str()}, {"b", b}, {"eigenspaces", list}};
    out << doc.dump(2) << "\n";
    return kPass;
}

int run_stab(const std::string& type, const std::vector<std::string>& xs, bool model, std::uint64_t cap,
             std::ostream& out) {
    RootSystem rs = RootSystem::build(TypeLabel::parse(type));
    Vector x = parse_vector(xs);
    if (model) {
        InvariantSet inv = invariant_polynomials(rs);
        if (!inv.full()) throw PreconditionFailed("no coordinate model for " + rs.label().str());
        if (x.size() != inv.model_dim()) throw DimensionMismatch("x has the wrong number of model coordinates");
        x = inv.to_root(x);
    } else if (x.size() != static_cast<std::size_t>(rs.rank())) {
        throw DimensionMismatch("x has " + std::to_string(x.size()) + " coordinates, rank is " +
                                std::to_string(rs.rank()));
    }
    GroupEnumeration g = enumerate_group(rs, cap);
    StabilizerReport s = stabilizer(rs, g, x);
    ordered_json parabolic = nullptr;
    if (s.parabolic_witness)
        parabolic = {{"type", s.parabolic_witness->type},
                     {"simple_mask", s.parabolic_witness->simple_mask},
                     {"conjugating_word", g.word(s.parabolic_witness->element)}};
    ordered_json doc{{"type", rs.label().str()},
                     {"x_root", format_vector(x)},
                     {"N", s.N},
                     {"regular", s.phi_x.none()},
                     {"phi_x_size", s.phi_x.count()},
                     {"phi_x_rank", subset_rank(rs, s.phi_x)},
                     {"phi_x_indices", indices(s.phi_x)},
                     {"stabilizer_order", s.group_order},
                     {"reflection_subgroup_order", s.reflection_subgroup_order},
                     {"generated_by_reflections", s.generated_by_reflections()},
                     {"parabolic_witness", parabolic}};
    out << doc.dump(2) << "\n";
    return kPass;
}

int run_laurent(const std::string& input, const std::string& inline_json, std::uint64_t cap, std::ostream& out,
                std::ostream& err) {
    std::string text = inline_json;
    if (text.empty()) {
        std::ostringstream buf;
        if (input == "-") {
            buf << std::cin.rdbuf();
        } else {
            std::ifstream f(input, std::ios::binary);
            if (!f) throw ParseError("cannot read " + input);
            buf << f.rdbuf();
        }
        text = buf.str();
    }
    LaurentLeading ll = parse_leading_term(text);
    for (const auto& w : ll.warnings) err << "warning: " << w << "\n";
    RootSystem rs = RootSystem::build(ll.label);
    GroupEnumeration g = enumerate_group(rs, cap);
    out << verdict_json(check_rationality_necessary(rs, g, ll)) << "\n";
    return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification toolkit for finite reflection groups", "refl"};
    app.require_subcommand(1);
    std::uint64_t cap = kDefaultGroupCap;
    bool include_e7 = false;

    auto* info = app.add_subcommand("info", "Degrees, orders and b values of a type");
    std::vector<std::string> info_types;
    std::string info_format = "text";
    info->add_option("--type,-t", info_types, "Type labels, or 'all'")->required();
    info->add_option("--format", info_format, "text or json");
    info->add_flag("--include-e7", include_e7, "Let 'all' include E7");

    auto* ver = app.add_subcommand("verify", "Compute min N over V(b) and check N >= bn");
    VerifyConfig vc;
    ver->add_option("--type,-t", vc.types, "Type labels, or 'all'")->required();
    ver->add_option("--b", vc.b, "'all' (divisors of the degrees) or a comma-separated list");
    ver->add_option("--format", vc.format, "json, csv or md");
    ver->add_option("--out,-o", vc.out, "Report path (default stdout)");
    auto* cap_opt = ver->add_option("--cap", vc.cap, "Largest group order to enumerate");
    ver->add_option("--workers,-j", vc.workers, "Worker threads (default REFL_WORKERS or all cores)");
    ver->add_flag("--include-e7", vc.include_e7, "Allow E7 and raise the default cap to its order");
    ver->add_flag("--properties", vc.properties, "Also check that elements admitting zeta_h have order h");

    auto* eig = app.add_subcommand("eigen", "Eigenspace queries");
    eig->require_subcommand(1);
    auto* eig_list = eig->add_subcommand("list", "Distinct zeta_b-eigenspaces of group elements");
    std::string eig_type;
    int eig_b = 0;
    eig_list->add_option("--type,-t", eig_type, "Type label")->required();
    eig_list->add_option("--b", eig_b, "Order of the eigenvalue")->required();
    eig_list->add_option("--cap", cap, "Largest group order to enumerate");

    auto* stab = app.add_subcommand("stab", "Stabilizer of a vector");
    std::string stab_type;
    std::vector<std::string> stab_x;
    bool stab_model = false;
    stab->add_option("--type,-t", stab_type, "Type label")->required();
    stab->add_option("--x", stab_x, "Coordinates as scalar literals, comma-separated")->required()->delimiter(',');
    stab->add_flag("--model", stab_model, "x is in model coordinates (A, B, D)");
    stab->add_option("--cap", cap, "Largest group order to enumerate");

    auto* lau = app.add_subcommand("laurent", "Laurent leading-term checks");
    lau->require_subcommand(1);
    auto* lau_check = lau->add_subcommand("check", "Necessary condition for rational conjugacy");
    std::string lau_input = "-", lau_json;
    lau_check->add_option("input", lau_input, "JSON file, or - for stdin");
    lau_check->add_option("--json", lau_json, "Inline JSON document");
    lau_check->add_option("--cap", cap, "Largest group order to enumerate");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            for (auto* sub : app.get_subcommands()) out << sub->help();
            return kPass;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (info->parsed()) return run_info(info_types, include_e7, info_format, out);
        if (ver->parsed()) {
            vc.cap_given = cap_opt->count() > 0;
            return run_verify(vc, out, err);
        }
        if (eig_list->parsed()) return run_eigen_list(eig_type, eig_b, cap, out);
        if (stab->parsed()) return run_stab(stab_type, stab_x, stab_model, cap, out);
        if (lau_check->parsed()) return run_laurent(lau_input, lau_json, cap, out, err);
    } catch (const TheoremViolation& e) {
        err << "THEOREM VIOLATION: " << e.what() << "\n";
        return kTheoremFailed;
    } catch (const GroupTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kResourceCap;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace refl::cli
