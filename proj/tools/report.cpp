#include "report.hpp"

#include <sstream>

#include <json.hpp>

#include "refl/error.hpp"
#include "refl/literal.hpp"

namespace refl::cli {
namespace {

using nlohmann::ordered_json;

std::vector<std::vector<std::string>> basis_strings(const Subspace& s) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        rows.emplace_back();
        for (std::size_t c = 0; c < s.ambient(); ++c) rows.back().push_back(format_scalar(s.basis()(r, c)));
    }
    return rows;
}

std::vector<int> root_indices(const RootSubset& s) {
    std::vector<int> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.test(i)) out.push_back(static_cast<int>(i));
    return out;
}

std::string join(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

ordered_json group_json(const GroupReport& g) {
    if (!g.facts) return {{"type", g.type}};
    const GroupFacts& f = *g.facts;
    return {{"type", g.type},
            {"rank", f.degrees.size()},
            {"order", f.order},
            {"coxeter_number", f.coxeter_number},
            {"degrees", f.degrees},
            {"num_roots", f.num_roots}};
}

int coxeter_number(const GroupReport& g) { return g.facts ? g.facts->coxeter_number : 0; }

std::string facts_csv(const GroupReport& g) {
    if (!g.facts) return g.type + ",,,,,,";
    const GroupFacts& f = *g.facts;
    return g.type + "," + std::to_string(f.degrees.size()) + "," + std::to_string(f.order) + "," +
           std::to_string(f.coxeter_number) + "," + join(f.degrees, " ") + "," + std::to_string(f.num_roots) + ",";
}

ordered_json record_json(const VerificationRecord& r) {
    ordered_json witness = nullptr;
    if (r.witness_flat)
        witness = {{"flat_basis", basis_strings(*r.witness_flat)},
                   {"orthogonal_root_indices", root_indices(r.witness_phi)}};
    return {{"b", r.b},
            {"vb_nonempty", r.vb_nonempty},
            {"min_N", r.vb_nonempty ? ordered_json(r.min_N) : ordered_json(nullptr)},
            {"bound", r.bound},
            {"equality", r.equality},
            {"witness", witness},
            {"elements_scanned", r.elements_scanned},
            {"wall_time_ms", r.wall_time_ms}};
}

ordered_json report_json(const GroupReport& g) {
    ordered_json out{{"group", group_json(g)}, {"results", ordered_json::array()}};
    for (const auto& r : g.results) out["results"].push_back(record_json(r));
    if (g.skipped) out["skipped"] = *g.skipped;
    return out;
}

std::string flat_text(const VerificationRecord& r) {
    if (!r.witness_flat) return "";
    std::string s;
    for (const auto& row : basis_strings(*r.witness_flat)) {
        if (!s.empty()) s += " | ";
        for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "; " : "") + row[i];
    }
    return s;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string time_text(double ms) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << ms;
    return os.str();
}

std::string emit_csv(const std::vector<GroupReport>& reports) {
    std::ostringstream os;
    os << "type,rank,order,coxeter_number,degrees,num_roots,b,vb_nonempty,min_N,bound,equality,"
          "witness_flat_basis,witness_orthogonal_root_indices,elements_scanned,wall_time_ms,skipped\n";
    for (const auto& g : reports) {
        const std::string head = facts_csv(g);
        if (g.skipped) os << head << ",,,,,,,,," << csv_quote(*g.skipped) << "\n";
        for (const auto& r : g.results)
            os << head << r.b << "," << (r.vb_nonempty ? "true" : "false") << ","
               << (r.vb_nonempty ? std::to_string(r.min_N) : "") << "," << r.bound << ","
               << (r.equality ? "true" : "false") << "," << csv_quote(flat_text(r)) << ","
               << join(root_indices(r.witness_phi), " ") << "," << r.elements_scanned << ","
               << time_text(r.wall_time_ms) << ",\n";
    }
    return os.str();
}

std::string emit_markdown(const std::vector<GroupReport>& reports) {
    std::ostringstream os;
    for (const auto& g : reports) {
        os << "## " << g.type << "\n\n";
        if (g.facts)
            os << "rank " << g.facts->degrees.size() << ", order " << g.facts->order << ", coxeter_number "
               << g.facts->coxeter_number << ", degrees " << join(g.facts->degrees, " ") << ", num_roots "
               << g.facts->num_roots << "\n\n";
        if (g.skipped) {
            os << "skipped: " << *g.skipped << "\n\n";
            continue;
        }
        os << "| b | vb_nonempty | min_N | bound | equality | witness_flat_basis | witness_orthogonal_root_indices | "
              "elements_scanned | wall_time_ms |\n"
           << "|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& r : g.results)
            os << "| " << r.b << " | " << (r.vb_nonempty ? "true" : "false") << " | "
               << (r.vb_nonempty ? std::to_string(r.min_N) : "") << " | " << r.bound << " | "
               << (r.equality ? "true" : "false") << " | " << flat_text(r) << " | "
               << join(root_indices(r.witness_phi), " ") << " | " << r.elements_scanned << " | "
               << time_text(r.wall_time_ms) << " |\n";
        os << "\n";
    }
    return os.str();
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "md" || s == "markdown") return Format::Markdown;
    throw ParseError("unknown format '" + s + "' (expected json, csv or md)");
}

std::string emit_report(const std::vector<GroupReport>& reports, Format format) {
    switch (format) {
        case Format::Csv:
            return emit_csv(reports);
        case Format::Markdown:
            return emit_markdown(reports);
        case Format::Json:
            break;
    }
    if (reports.size() == 1) return report_json(reports.front()).dump(2) + "\n";
    ordered_json all = ordered_json::array();
    for (const auto& g : reports) all.push_back(report_json(g));
    return all.dump(2) + "\n";
}

bool all_pass(const std::vector<GroupReport>& reports) {
    for (const auto& g : reports)
        for (const auto& r : g.results)
            if (!r.theorem_holds(coxeter_number(g))) return false;
    return true;
}

std::string counterexamples(const std::vector<GroupReport>& reports) {
    std::ostringstream os;
    for (const auto& g : reports)
        for (const auto& r : g.results) {
            if (r.theorem_holds(coxeter_number(g))) continue;
            os << "COUNTEREXAMPLE " << g.type << " b=" << r.b << ": min_N=" << r.min_N << " bound=" << r.bound
               << " h=" << coxeter_number(g) << " flat=[" << flat_text(r) << "] phi=["
               << join(root_indices(r.witness_phi), " ") << "]\n";
        }
    return os.str();
}

}  // namespace refl::cli
